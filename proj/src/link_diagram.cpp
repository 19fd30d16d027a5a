#include "linkcalc/link_diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "linkcalc/detail/flow.hpp"

namespace linkcalc {

namespace detail {

Occ occurrence_table(const std::vector<std::array<int, 4>>& crossings) {
  Occ occ;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
    for (int p = 0; p < 4; ++p) occ[crossings[c][p]].push_back({c, p});
  return occ;
}

void propagate_flows(const std::vector<std::array<int, 4>>& crossings,
                     const Occ& occ, FlowState& st,
                     std::deque<std::pair<int, char>>& work) {
  auto set_var = [&](int c, char kind, int val) {
    int& slot = kind == 'u' ? st.u[c] : st.o[c];
    if (slot == val) return;
    if (slot != -1) throw std::runtime_error("inconsistent orientation data");
    slot = val;
    work.push_back({c, kind});
  };
  while (!work.empty()) {
    auto [c, kind] = work.front();
    work.pop_front();
    int enter = kind == 'u' ? st.u[c] : st.o[c];
    int corners[2] = {enter, (enter + 2) % 4};
    bool head_here[2] = {true, false};
    for (int k = 0; k < 2; ++k) {
      int p = corners[k];
      int e = crossings[c][p];
      for (auto [c2, p2] : occ.at(e)) {
        if (c2 == c && p2 == p) continue;
        // The edge enters its other end exactly when it leaves this one.
        bool enters_there = !head_here[k];
        if (p2 == 0 || p2 == 2)
          set_var(c2, 'u', enters_there ? p2 : (p2 + 2) % 4);
        else
          set_var(c2, 'o', enters_there ? p2 : (p2 + 2) % 4);
      }
    }
  }
}

bool edge_direction_known(const Occ& occ, const FlowState& st, int e) {
  auto [c, p] = occ.at(e).front();
  return (p == 0 || p == 2) ? st.u[c] != -1 : st.o[c] != -1;
}

namespace {

std::pair<int, int> head_occurrence(
    const Occ& occ, const FlowState& st, int e) {
  std::pair<int, int> head{-1, -1};
  auto it = occ.find(e);
  if (it == occ.end()) return head;
  for (auto [c, p] : it->second) {
    bool enters = (p == 0 || p == 2) ? st.u[c] == p : st.o[c] == p;
    if (enters) head = {c, p};
  }
  return head;
}

}  // namespace

std::vector<int> trace_curve(const std::vector<std::array<int, 4>>& crossings,
                             const Occ& occ, const FlowState& st, int e0) {
  std::vector<int> seq;
  int e = e0;
  do {
    seq.push_back(e);
    auto head = head_occurrence(occ, st, e);
    if (head.first < 0) throw std::runtime_error("undirected edge in trace");
    e = crossings[head.first][(head.second + 2) % 4];
  } while (e != e0);
  return seq;
}

std::vector<int> trace_strand(const std::vector<std::array<int, 4>>& crossings,
                              const Occ& occ, const FlowState& st, int e0) {
  std::vector<int> seq;
  int e = e0;
  while (true) {
    seq.push_back(e);
    auto head = head_occurrence(occ, st, e);
    if (head.first < 0) return seq;
    e = crossings[head.first][(head.second + 2) % 4];
    if (e == e0) throw std::runtime_error("strand closes up on itself");
  }
}

}  // namespace detail

namespace {
using detail::FlowState;
using detail::Occ;
using detail::occurrence_table;
using detail::propagate_flows;
using detail::trace_curve;
}  // namespace

LinkDiagram LinkDiagram::finalize(const DiagramBuilder& b) {
  const auto& cr = b.crossings;
  int n = static_cast<int>(cr.size());
  Occ occ = occurrence_table(cr);
  for (const auto& [e, at] : occ)
    if (at.size() != 2)
      throw std::runtime_error("edge " + std::to_string(e) +
                               " has degree " + std::to_string(at.size()));
  std::set<int> loops(b.free_loops.begin(), b.free_loops.end());
  if (loops.size() != b.free_loops.size())
    throw std::runtime_error("duplicate free loop id");
  for (int e : b.free_loops)
    if (occ.count(e))
      throw std::runtime_error("free loop id collides with crossing edge");

  FlowState st;
  st.u.assign(n, -1);
  st.o.assign(n, -1);
  std::deque<std::pair<int, char>> work;
  auto seed = [&](int c, char kind, int val) {
    int& slot = kind == 'u' ? st.u[c] : st.o[c];
    if (slot == val) return;
    if (slot != -1) throw std::runtime_error("inconsistent orientation data");
    slot = val;
    work.push_back({c, kind});
  };
  if (b.corner0_in)
    for (int c = 0; c < n; ++c) seed(c, 'u', 0);
  for (const auto& [e, into] : b.flows_into) {
    auto [c, p] = into;
    if (c < 0 || c >= n || cr[c][p] != e)
      throw std::runtime_error("direction seed does not match diagram");
    if (p == 0 || p == 2)
      seed(c, 'u', p);
    else
      seed(c, 'o', p);
  }
  propagate_flows(cr, occ, st, work);

  // Curves no seed reaches get a free orientation choice. Prefer the one
  // under which consecutive input edge ids follow each other, which is how
  // planar-diagram text numbers its edges.
  std::vector<int> edge_ids;
  for (const auto& [e, at] : occ) edge_ids.push_back(e);
  for (int e : edge_ids) {
    if (detail::edge_direction_known(occ, st, e)) continue;
    std::pair<int, int> best{-1, -1};
    int best_score = -1;
    for (auto [c, p] : occ.at(e)) {
      FlowState trial = st;
      std::deque<std::pair<int, char>> w2;
      if (p == 0 || p == 2)
        trial.u[c] = p;
      else
        trial.o[c] = p;
      w2.push_back({c, p == 0 || p == 2 ? 'u' : 'o'});
      propagate_flows(cr, occ, trial, w2);
      auto seq = trace_curve(cr, occ, trial, e);
      int score = 0;
      for (size_t i = 0; i < seq.size(); ++i)
        if (seq[(i + 1) % seq.size()] == seq[i] + 1) ++score;
      if (score > best_score) {
        best_score = score;
        best = {c, p};
      }
    }
    seed(best.first, best.second == 0 || best.second == 2 ? 'u' : 'o',
         best.second);
    propagate_flows(cr, occ, st, work);
  }

  // Normalize: rotate each crossing so the under-strand enters at corner 0,
  // then read the sign off the over-strand's entry corner.
  std::vector<Crossing> normalized(n);
  for (int c = 0; c < n; ++c) {
    if (st.u[c] == -1 || st.o[c] == -1)
      throw std::runtime_error("orientation propagation left a crossing unset");
    int r = st.u[c];  // 0 or 2
    for (int p = 0; p < 4; ++p) normalized[c].edge[p] = cr[c][(p + r) % 4];
    int over_enter = (st.o[c] - r + 4) % 4;
    normalized[c].sign = over_enter == 3 ? 1 : -1;
  }

  // Trace all curves, order them, renumber edges along each traversal.
  std::vector<std::array<int, 4>> norm_tuples(n);
  for (int c = 0; c < n; ++c) norm_tuples[c] = normalized[c].edge;
  Occ nocc = occurrence_table(norm_tuples);
  FlowState nst;
  nst.u.assign(n, 0);
  nst.o.assign(n, 0);
  for (int c = 0; c < n; ++c) nst.o[c] = normalized[c].sign > 0 ? 3 : 1;

  struct Curve {
    std::vector<int> edges;  // original ids, traversal order
    int label_rank, label, min_edge;
  };
  std::vector<Curve> curves;
  std::set<int> seen;
  for (int e : edge_ids) {
    if (seen.count(e)) continue;
    auto seq = trace_curve(norm_tuples, nocc, nst, e);
    Curve cv;
    cv.edges = seq;
    cv.min_edge = *std::min_element(seq.begin(), seq.end());
    cv.label = 0;
    cv.label_rank = 1;
    for (int x : seq) {
      seen.insert(x);
      auto it = b.component_label.find(x);
      if (it != b.component_label.end() &&
          (cv.label_rank == 1 || it->second < cv.label)) {
        cv.label_rank = 0;
        cv.label = it->second;
      }
    }
    // Rotate so the traversal starts at the smallest original edge id.
    auto pos = std::find(cv.edges.begin(), cv.edges.end(), cv.min_edge);
    std::rotate(cv.edges.begin(), pos, cv.edges.end());
    curves.push_back(std::move(cv));
  }
  for (int e : b.free_loops) {
    Curve cv;
    cv.edges = {e};
    cv.min_edge = e;
    cv.label = 0;
    cv.label_rank = 1;
    auto it = b.component_label.find(e);
    if (it != b.component_label.end()) {
      cv.label_rank = 0;
      cv.label = it->second;
    }
    curves.push_back(std::move(cv));
  }
  std::stable_sort(curves.begin(), curves.end(),
                   [](const Curve& a, const Curve& b2) {
                     return std::tuple(a.label_rank, a.label, a.min_edge) <
                            std::tuple(b2.label_rank, b2.label, b2.min_edge);
                   });

  std::map<int, int> new_id;
  LinkDiagram d;
  for (int k = 0; k < static_cast<int>(curves.size()); ++k) {
    std::vector<int> renumbered;
    for (int e : curves[k].edges) {
      int id = static_cast<int>(d.edge_component_.size());
      new_id[e] = id;
      d.edge_component_.push_back(k);
      renumbered.push_back(id);
    }
    d.comp_edges_.push_back(std::move(renumbered));
  }
  d.crossings_.resize(n);
  for (int c = 0; c < n; ++c) {
    d.crossings_[c].sign = normalized[c].sign;
    for (int p = 0; p < 4; ++p)
      d.crossings_[c].edge[p] = new_id.at(normalized[c].edge[p]);
  }
  d.occ_.assign(d.edge_component_.size(), {});
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) d.occ_[d.crossings_[c].edge[p]].push_back({c, p});
  d.braid_ = b.braid;
  d.validate();
  return d;
}

bool LinkDiagram::is_free_loop(int e) const { return occ_.at(e).empty(); }

std::optional<std::pair<int, int>> LinkDiagram::head(int e) const {
  for (auto [c, p] : occ_.at(e))
    if (p == 0 || p == crossings_[c].over_in_corner())
      return std::pair<int, int>{c, p};
  return std::nullopt;
}

std::optional<std::pair<int, int>> LinkDiagram::tail(int e) const {
  for (auto [c, p] : occ_.at(e))
    if (p == 2 || p == (crossings_[c].over_in_corner() + 2) % 4)
      return std::pair<int, int>{c, p};
  return std::nullopt;
}

int LinkDiagram::next_edge(int e) const {
  const auto& edges = comp_edges_.at(edge_component_.at(e));
  auto it = std::find(edges.begin(), edges.end(), e);
  return it + 1 == edges.end() ? edges.front() : *(it + 1);
}

void LinkDiagram::validate() const {
  int n = static_cast<int>(crossings_.size());
  int m = edge_count();
  std::vector<int> heads(m, 0), tails(m, 0), degree(m, 0);
  for (int c = 0; c < n; ++c) {
    const Crossing& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1)
      throw std::runtime_error("crossing without a sign");
    int oin = x.sign > 0 ? 3 : 1;
    for (int p = 0; p < 4; ++p) {
      int e = x.edge[p];
      if (e < 0 || e >= m) throw std::runtime_error("edge id out of range");
      ++degree[e];
      if (p == 0 || p == oin)
        ++heads[e];
      else
        ++tails[e];
    }
  }
  for (int e = 0; e < m; ++e) {
    if (degree[e] != static_cast<int>(occ_[e].size()))
      throw std::runtime_error("occurrence table out of sync");
    if (degree[e] == 0) {
      const auto& ce = comp_edges_[edge_component_[e]];
      if (ce.size() != 1)
        throw std::runtime_error("crossing-free edge inside a larger component");
      continue;
    }
    if (degree[e] != 2 || heads[e] != 1 || tails[e] != 1)
      throw std::runtime_error("edge " + std::to_string(e) +
                               " is not traversed exactly once");
  }
  // Component traversals must follow the flow.
  std::vector<int> comp_seen(m, -1);
  for (int k = 0; k < components(); ++k) {
    const auto& edges = comp_edges_[k];
    for (size_t i = 0; i < edges.size(); ++i) {
      int e = edges[i];
      if (comp_seen[e] != -1) throw std::runtime_error("edge in two components");
      comp_seen[e] = k;
      if (edge_component_[e] != k)
        throw std::runtime_error("component table out of sync");
      if (degree[e] == 0) continue;
      auto h = head(e);
      int exit = (h->second + 2) % 4;
      int succ = crossings_[h->first].edge[exit];
      if (succ != edges[(i + 1) % edges.size()])
        throw std::runtime_error("component traversal does not follow flow");
    }
  }
  for (int e = 0; e < m; ++e)
    if (comp_seen[e] == -1) throw std::runtime_error("edge in no component");

  std::vector<std::array<int, 4>> tuples(n);
  for (int c = 0; c < n; ++c) tuples[c] = crossings_[c].edge;
  if (!detail::spherical(tuples))
    throw std::runtime_error("diagram is not planar");
}

int writhe(const LinkDiagram& d, int component) {
  int w = 0;
  for (const Crossing& x : d.crossings())
    if (d.component_of_edge(x.edge[0]) == component &&
        d.component_of_edge(x.edge[1]) == component)
      w += x.sign;
  return w;
}

int total_writhe(const LinkDiagram& d) {
  int w = 0;
  for (const Crossing& x : d.crossings()) w += x.sign;
  return w;
}

long long linking_number(const LinkDiagram& d, int i, int j) {
  long long lk = 0;
  for (const Crossing& x : d.crossings())
    if (d.component_of_edge(x.edge[0]) == i &&
        d.component_of_edge(x.edge[1]) == j)
      lk += x.sign;
  return lk;
}

std::vector<std::vector<long long>> linking_matrix(const LinkDiagram& d) {
  int m = d.components();
  std::vector<std::vector<long long>> lk(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) lk[i][j] = linking_number(d, i, j);
  return lk;
}

bool linking_matrix_zero(const LinkDiagram& d) {
  auto lk = linking_matrix(d);
  for (const auto& row : lk)
    for (long long v : row)
      if (v != 0) return false;
  return true;
}

LinkDiagram mirror(const LinkDiagram& d) {
  // Switch every crossing: the planar map is unchanged, over and under
  // strands swap, so the cyclic tuple is rotated to put the new
  // under-strand entry at corner 0. All signs flip.
  DiagramBuilder b;
  for (const Crossing& x : d.crossings()) {
    int r = x.sign > 0 ? 3 : 1;  // old over-in corner becomes new corner 0
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) t[p] = x.edge[(p + r) % 4];
    b.crossings.push_back(t);
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    if (d.is_free_loop(e)) {
      b.free_loops.push_back(e);
      continue;
    }
    auto h = *d.head(e);
    int c = h.first;
    int r = d.crossings()[c].sign > 0 ? 3 : 1;
    b.flows_into[e] = {c, (h.second - r + 4) % 4};
  }
  for (int e = 0; e < d.edge_count(); ++e)
    b.component_label[e] = d.component_of_edge(e);
  if (d.braid()) {
    BraidWord w = *d.braid();
    for (int& l : w.letters) l = -l;
    b.braid = w;
  }
  return LinkDiagram::finalize(b);
}

LinkDiagram delete_component(const LinkDiagram& d, int component) {
  if (d.components() <= 1)
    throw std::runtime_error("cannot delete the only component");
  // Union surviving edges that become one edge once crossings with the
  // deleted component are removed.
  int m = d.edge_count();
  std::vector<int> parent(m);
  for (int e = 0; e < m; ++e) parent[e] = e;
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  auto unite = [&](int a, int b2) { parent[find(a)] = find(b2); };

  auto deleted = [&](int e) { return d.component_of_edge(e) == component; };
  std::vector<char> keep_crossing(d.crossings().size(), 1);
  for (size_t c = 0; c < d.crossings().size(); ++c) {
    const Crossing& x = d.crossings()[c];
    bool under_del = deleted(x.edge[0]);
    bool over_del = deleted(x.edge[1]);
    if (!under_del && !over_del) continue;
    keep_crossing[c] = 0;
    if (!under_del) unite(x.edge[0], x.edge[2]);
    if (!over_del) unite(x.over_in(), x.over_out());
  }

  DiagramBuilder b;
  for (size_t c = 0; c < d.crossings().size(); ++c) {
    if (!keep_crossing[c]) continue;
    const Crossing& x = d.crossings()[c];
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) t[p] = find(x.edge[p]);
    b.crossings.push_back(t);
    // All flows are known: under enters at 0, over at its entry corner.
    b.flows_into[t[0]] = {static_cast<int>(b.crossings.size()) - 1, 0};
    int oin = x.sign > 0 ? 3 : 1;
    b.flows_into[t[oin]] = {static_cast<int>(b.crossings.size()) - 1, oin};
  }
  // Components whose crossings all vanished become free loops.
  std::set<int> used;
  for (const auto& t : b.crossings) used.insert(t.begin(), t.end());
  std::set<int> loop_reps;
  for (int e = 0; e < m; ++e) {
    if (deleted(e)) continue;
    int r = find(e);
    if (!used.count(r)) loop_reps.insert(r);
    b.component_label[r] = d.component_of_edge(e) -
                           (d.component_of_edge(e) > component ? 1 : 0);
  }
  b.free_loops.assign(loop_reps.begin(), loop_reps.end());
  return LinkDiagram::finalize(b);
}

namespace detail {

std::vector<std::vector<std::pair<int, int>>> quadrant_faces(
    const std::vector<std::array<int, 4>>& corners) {
  Occ occ = occurrence_table(corners);
  for (const auto& [e, at] : occ)
    if (at.size() != 2) throw std::runtime_error("open edge in face trace");
  int n = static_cast<int>(corners.size());
  std::vector<std::vector<std::pair<int, int>>> faces;
  std::vector<std::array<char, 4>> done(n, {0, 0, 0, 0});
  for (int c0 = 0; c0 < n; ++c0)
    for (int q0 = 0; q0 < 4; ++q0) {
      if (done[c0][q0]) continue;
      std::vector<std::pair<int, int>> face;
      int c = c0, q = q0;
      do {
        done[c][q] = 1;
        face.push_back({c, q});
        int e = corners[c][(q + 1) % 4];
        const auto& at = occ.at(e);
        auto other = at[0] == std::pair{c, (q + 1) % 4} ? at[1] : at[0];
        c = other.first;
        q = other.second;
      } while (c != c0 || q != q0);
      faces.push_back(std::move(face));
    }
  return faces;
}

bool spherical(const std::vector<std::array<int, 4>>& corners) {
  int n = static_cast<int>(corners.size());
  if (n == 0) return true;
  // Connected pieces of the underlying 4-valent graph.
  std::vector<int> parent(n);
  for (int c = 0; c < n; ++c) parent[c] = c;
  auto find = [&](int c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  Occ occ = occurrence_table(corners);
  for (const auto& [e, at] : occ)
    if (at.size() == 2) parent[find(at[0].first)] = find(at[1].first);
  std::map<int, long long> V, E2, F;
  for (int c = 0; c < n; ++c) ++V[find(c)];
  for (const auto& [e, at] : occ) ++E2[find(at[0].first)];
  for (const auto& face : quadrant_faces(corners)) ++F[find(face[0].first)];
  for (const auto& [root, v] : V)
    if (v - E2[root] + F[root] != 2) return false;
  return true;
}

}  // namespace detail

}  // namespace linkcalc
