#include "linkcalc/family.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linkcalc/milnor.hpp"
#include "linkcalc/parse.hpp"

namespace linkcalc {

namespace {

// Replaces one component by two antiparallel parallel copies. Copy A runs
// with the component, copy B against it, A on the left of the original
// direction of travel. Away from the marked first edge each copy follows the
// component through every crossing; along the first edge the copies pass
// through |self-writhe| framing twists and then through the clasp boxes.
//
// Segment bookkeeping: a component edge e carries one A-lane segment and one
// B-lane segment, except the marked edge, whose lanes are subdivided by the
// inserted tangle. head_a/tail_a(e) name the A-lane segment adjacent to the
// crossing at e's head/tail, and likewise for B.
class ComponentDoubler {
 public:
  ComponentDoubler(const LinkDiagram& d, int comp, std::vector<int> clasps)
      : d_(d), comp_(comp), clasps_(std::move(clasps)) {}

  LinkDiagram run() {
    if (comp_ < 0 || comp_ >= d_.components())
      throw std::invalid_argument("no component " + std::to_string(comp_) +
                                  " to double");
    for (int s : clasps_)
      if (s != 1 && s != -1)
        throw std::invalid_argument("clasp sign must be +1 or -1");
    allocate_lanes();
    build_inserted_tangle();
    for (const Crossing& x : d_.crossings()) replace_crossing(x);
    carry_over_rest();
    return LinkDiagram::finalize(out_);
  }

 private:
  int fresh() { return next_++; }

  // A-lane / B-lane segment at the given end of a component edge.
  int head_a(int e) const { return e == estar_ ? head_a_ : lane_a_[e]; }
  int tail_a(int e) const { return e == estar_ ? tail_a_ : lane_a_[e]; }
  int head_b(int e) const { return e == estar_ ? head_b_ : lane_b_[e]; }
  int tail_b(int e) const { return e == estar_ ? tail_b_ : lane_b_[e]; }

  void add(std::array<int, 4> corners, int over_in_corner) {
    int idx = static_cast<int>(out_.crossings.size());
    out_.crossings.push_back(corners);
    out_.flows_into[corners[0]] = {idx, 0};
    out_.flows_into[corners[over_in_corner]] = {idx, over_in_corner};
  }

  void allocate_lanes() {
    int m = d_.edge_count();
    lane_a_.assign(m, -1);
    lane_b_.assign(m, -1);
    base_.assign(m, -1);
    for (int e = 0; e < m; ++e) {
      if (d_.component_of_edge(e) == comp_) {
        lane_a_[e] = fresh();
        lane_b_[e] = fresh();
      } else {
        base_[e] = fresh();
      }
    }
    estar_ = d_.component_edges(comp_).front();
  }

  // Twists below, clasp boxes above, threaded into the marked edge. A walks
  // the chain south to north, B north to south; on a crossing-free component
  // the two lane ends are identified instead of meeting a crossing.
  void build_inserted_tangle() {
    int w = 0;
    for (const Crossing& x : d_.crossings()) {
      if (d_.component_of_edge(x.edge[0]) == comp_ &&
          d_.component_of_edge(x.over_in()) == comp_)
        w += x.sign;
    }
    int twists = std::abs(w);
    // Each doubled self-crossing of sign s links the two lanes by -s (both
    // mixed-lane crossings of its 2x2 block are drawn -s when the lanes run
    // antiparallel), so the w compensating twists are drawn with sign +w.
    int tau = w > 0 ? 1 : -1;
    bool loop = d_.is_free_loop(estar_);
    int nb = static_cast<int>(clasps_.size());

    tail_a_ = lane_a_[estar_];
    int a_cur = tail_a_;
    std::vector<std::array<int, 3>> ta(twists);  // in, mid, out northward
    for (int i = 0; i < twists; ++i) {
      ta[i] = {a_cur, fresh(), fresh()};
      a_cur = ta[i][2];
    }
    std::vector<int> p(nb), r(nb), c1(nb), c2(nb);
    for (int j = 0; j < nb; ++j) {
      p[j] = a_cur;
      c1[j] = fresh();
      c2[j] = fresh();
      r[j] = (loop && j == nb - 1) ? lane_a_[estar_] : fresh();
      a_cur = r[j];
    }
    head_a_ = a_cur;

    head_b_ = lane_b_[estar_];
    int b_cur = head_b_;
    std::vector<int> s(nb), q(nb);
    for (int j = nb - 1; j >= 0; --j) {
      s[j] = b_cur;
      q[j] = (loop && j == 0) ? lane_b_[estar_] : fresh();
      b_cur = q[j];
    }
    std::vector<std::array<int, 3>> tb(twists);  // in, mid, out southward
    for (int i = twists - 1; i >= 0; --i) {
      tb[i] = {b_cur, fresh(), fresh()};
      b_cur = tb[i][2];
    }
    tail_b_ = b_cur;

    for (int i = 0; i < twists; ++i) {
      int a0 = ta[i][0], a1 = ta[i][1], a2 = ta[i][2];
      int b0 = tb[i][0], b1 = tb[i][1], b2 = tb[i][2];
      if (tau > 0) {
        add({a0, b2, a1, b1}, 3);
        add({b0, a2, b1, a1}, 3);
      } else {
        add({b1, a0, b2, a1}, 1);
        add({a1, b0, a2, b1}, 1);
      }
    }
    for (int j = 0; j < nb; ++j) {
      if (clasps_[j] > 0) {
        add({c2[j], c1[j], r[j], p[j]}, 3);
        add({c1[j], c2[j], q[j], s[j]}, 3);
      } else {
        add({p[j], c2[j], c1[j], r[j]}, 1);
        add({s[j], c1[j], c2[j], q[j]}, 1);
      }
    }
  }

  // One crossing of the original diagram turns into 1, 2 or 4 crossings,
  // depending on how many of its two strands are being doubled.
  void replace_crossing(const Crossing& x) {
    int e0 = x.edge[0], e2 = x.edge[2];
    int oi = x.over_in(), oo = x.over_out();
    bool under_c = d_.component_of_edge(e0) == comp_;
    bool over_c = d_.component_of_edge(oi) == comp_;

    if (!under_c && !over_c) {
      add({base_[x.edge[0]], base_[x.edge[1]], base_[x.edge[2]],
           base_[x.edge[3]]},
          x.over_in_corner());
      return;
    }
    if (under_c && !over_c) {
      // A passes under first when the crossing is positive.
      int mid = fresh();
      if (x.sign > 0) {
        add({head_a(e0), mid, tail_a(e2), base_[oi]}, 3);
        add({tail_b(e2), mid, head_b(e0), base_[oo]}, 1);
      } else {
        add({tail_b(e2), mid, head_b(e0), base_[oi]}, 3);
        add({head_a(e0), mid, tail_a(e2), base_[oo]}, 1);
      }
      return;
    }
    if (!under_c && over_c) {
      int mid = fresh();
      if (x.sign > 0) {
        add({base_[e0], tail_b(oo), mid, head_b(oi)}, 1);
        add({mid, tail_a(oo), base_[e2], head_a(oi)}, 3);
      } else {
        add({base_[e0], head_a(oi), mid, tail_a(oo)}, 1);
        add({mid, head_b(oi), base_[e2], tail_b(oo)}, 3);
      }
      return;
    }
    // Self-crossing of the doubled component: a 2x2 block of crossings, the
    // under lanes running south to north, the over lanes west to east.
    int m1 = fresh(), m2 = fresh(), m3 = fresh(), m4 = fresh();
    if (x.sign > 0) {
      add({head_a(e0), m4, m1, head_b(oi)}, 1);
      add({m1, m3, tail_a(e2), head_a(oi)}, 3);
      add({tail_b(e2), m3, m2, tail_a(oo)}, 1);
      add({m2, m4, head_b(e0), tail_b(oo)}, 3);
    } else {
      add({head_a(e0), m3, m1, tail_a(oo)}, 1);
      add({m1, m4, tail_a(e2), tail_b(oo)}, 3);
      add({tail_b(e2), m4, m2, head_b(oi)}, 1);
      add({m2, m3, head_b(e0), head_a(oi)}, 3);
    }
  }

  void carry_over_rest() {
    for (int e = 0; e < d_.edge_count(); ++e) {
      if (d_.component_of_edge(e) == comp_) continue;
      out_.component_label[base_[e]] = d_.component_of_edge(e);
      if (d_.is_free_loop(e)) out_.free_loops.push_back(base_[e]);
    }
    // Both marked-edge lanes lie on the satellite curve that should inherit
    // the component's index (with two clasps the short curve between the
    // boxes stays unlabeled and sorts last).
    out_.component_label[lane_a_[estar_]] = comp_;
    out_.component_label[lane_b_[estar_]] = comp_;
  }

  const LinkDiagram& d_;
  int comp_;
  std::vector<int> clasps_;
  DiagramBuilder out_;
  int next_ = 0;
  std::vector<int> lane_a_, lane_b_, base_;
  int estar_ = -1;
  int head_a_ = -1, tail_a_ = -1, head_b_ = -1, tail_b_ = -1;
};

}  // namespace

LinkDiagram whitehead_double(const LinkDiagram& d, int component,
                             int clasp_sign) {
  return ComponentDoubler(d, component, {clasp_sign}).run();
}

LinkDiagram bing_double(const LinkDiagram& d, int component, int clasp_sign) {
  return ComponentDoubler(d, component, {clasp_sign, -clasp_sign}).run();
}

StringLinkDiagram cut_open(const LinkDiagram& d,
                           const std::vector<int>& cut_edges) {
  if (static_cast<int>(cut_edges.size()) != d.components())
    throw std::invalid_argument("cut_open needs one cut edge per component");
  StringLinkDiagram::Raw raw;
  raw.strands = d.components();
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(d.crossings().size());
  for (const Crossing& x : d.crossings()) tuples.push_back(x.edge);
  int next = d.edge_count();
  for (int c = 0; c < d.components(); ++c) {
    int e = cut_edges[c];
    if (e < 0 || e >= d.edge_count() || d.component_of_edge(e) != c)
      throw std::invalid_argument("cut edge " + std::to_string(e) +
                                  " does not lie on component " +
                                  std::to_string(c));
    if (d.is_free_loop(e)) {
      raw.bottom.push_back(e);
      raw.top.push_back(e);
      continue;
    }
    // The cut edge keeps its id on the bottom half (into the head crossing);
    // the half leaving the tail crossing becomes the strand's top edge.
    auto t = *d.tail(e);
    int top = next++;
    tuples[t.first][t.second] = top;
    raw.bottom.push_back(e);
    raw.top.push_back(top);
  }
  raw.crossings = std::move(tuples);
  return StringLinkDiagram::finalize(raw);
}

StringLinkDiagram cut_open(const LinkDiagram& d) {
  std::vector<int> cuts;
  cuts.reserve(d.components());
  for (int c = 0; c < d.components(); ++c)
    cuts.push_back(d.component_edges(c).front());
  return cut_open(d, cuts);
}

FamilyResult gen_family(const std::string& kind, int level, int degree_cap) {
  if (level < 0) throw std::invalid_argument("family level must be >= 0");
  if (degree_cap < 2) throw std::invalid_argument("degree cap must be >= 2");
  bool whitehead;
  if (kind == "whitehead-iterate") {
    whitehead = true;
  } else if (kind == "bing-style") {
    whitehead = false;
  } else {
    throw std::invalid_argument(
        "unknown family kind '" + kind +
        "' (expected whitehead-iterate or bing-style)");
  }

  LinkDiagram d = braid_closure(BraidWord{2, {1, 1}});
  for (int i = 0; i < level; ++i) {
    if (whitehead)
      d = whitehead_double(d, 1, 1);
    else
      d = bing_double(d, d.components() - 1, 1);
  }

  FamilyResult res;
  res.kind = kind;
  res.level = level;
  res.degree_cap = degree_cap;
  res.closure = d;
  res.j = cut_open(d);
  res.strands = res.j.strands();
  res.linking_matrix_zero = linking_matrix_zero(d);
  MilnorEngine engine(d, degree_cap);
  res.first_nonvanishing = engine.first_nonvanishing(degree_cap);
  res.vanish_through =
      res.first_nonvanishing ? res.first_nonvanishing - 1 : degree_cap;
  res.cap_hit = res.first_nonvanishing == 0;
  return res;
}

}  // namespace linkcalc
