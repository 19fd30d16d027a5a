#include "linkcalc/string_link.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "linkcalc/detail/flow.hpp"

namespace linkcalc {

StringLinkDiagram StringLinkDiagram::finalize(const Raw& raw) {
  int r = raw.strands;
  if (r < 1) throw std::runtime_error("string link needs at least one strand");
  if (static_cast<int>(raw.bottom.size()) != r ||
      static_cast<int>(raw.top.size()) != r)
    throw std::runtime_error("endpoint lists do not match strand count");

  detail::Occ occ = detail::occurrence_table(raw.crossings);
  std::set<int> boundary(raw.bottom.begin(), raw.bottom.end());
  boundary.insert(raw.top.begin(), raw.top.end());
  for (const auto& [e, at] : occ) {
    size_t want = boundary.count(e) ? 1 : 2;
    // A strand consisting of a single edge touches the boundary twice.
    for (int s = 0; s < r; ++s)
      if (raw.bottom[s] == e && raw.top[s] == e) want = 0;
    if (at.size() != want)
      throw std::runtime_error("edge " + std::to_string(e) +
                               " has the wrong degree");
  }

  int n = static_cast<int>(raw.crossings.size());
  detail::FlowState st;
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
  for (int s = 0; s < r; ++s) {
    if (raw.bottom[s] == raw.top[s]) continue;
    auto bi = occ.find(raw.bottom[s]);
    if (bi != occ.end()) {
      auto [c, p] = bi->second.front();
      seed(c, p == 0 || p == 2 ? 'u' : 'o', p);
    }
    auto ti = occ.find(raw.top[s]);
    if (ti != occ.end()) {
      auto [c, p] = ti->second.front();
      // The top edge leaves the crossing here, so the strand enters at the
      // opposite corner.
      seed(c, p == 0 || p == 2 ? 'u' : 'o', (p + 2) % 4);
    }
  }
  detail::propagate_flows(raw.crossings, occ, st, work);
  for (int c = 0; c < n; ++c)
    if (st.u[c] == -1 || st.o[c] == -1)
      throw std::runtime_error("closed component inside a string link");

  // Normalize crossings: under-strand enters at corner 0.
  std::vector<Crossing> normalized(n);
  std::vector<std::array<int, 4>> tuples(n);
  for (int c = 0; c < n; ++c) {
    int rot = st.u[c];
    for (int p = 0; p < 4; ++p)
      normalized[c].edge[p] = raw.crossings[c][(p + rot) % 4];
    normalized[c].sign = (st.o[c] - rot + 4) % 4 == 3 ? 1 : -1;
    tuples[c] = normalized[c].edge;
  }
  detail::Occ nocc = detail::occurrence_table(tuples);
  detail::FlowState nst;
  nst.u.assign(n, 0);
  nst.o.assign(n, 0);
  for (int c = 0; c < n; ++c) nst.o[c] = normalized[c].sign > 0 ? 3 : 1;

  StringLinkDiagram d;
  std::map<int, int> new_id;
  for (int s = 0; s < r; ++s) {
    auto seq = detail::trace_strand(tuples, nocc, nst, raw.bottom[s]);
    if (seq.back() != raw.top[s])
      throw std::runtime_error("strand " + std::to_string(s + 1) +
                               " does not end at its top position");
    std::vector<int> renumbered;
    for (int e : seq) {
      if (new_id.count(e)) throw std::runtime_error("strands share an edge");
      int id = static_cast<int>(d.edge_strand_.size());
      new_id[e] = id;
      d.edge_strand_.push_back(s);
      renumbered.push_back(id);
    }
    d.bottom_.push_back(renumbered.front());
    d.top_.push_back(renumbered.back());
    d.strand_edges_.push_back(std::move(renumbered));
  }
  d.crossings_.resize(n);
  for (int c = 0; c < n; ++c) {
    d.crossings_[c].sign = normalized[c].sign;
    for (int p = 0; p < 4; ++p)
      d.crossings_[c].edge[p] = new_id.at(normalized[c].edge[p]);
  }
  d.occ_.assign(d.edge_strand_.size(), {});
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p)
      d.occ_[d.crossings_[c].edge[p]].push_back({c, p});
  d.braid_ = raw.braid;
  return d;
}

StringLinkDiagram StringLinkDiagram::from_braid(const BraidWord& w) {
  if (w.strands < 1)
    throw std::invalid_argument("braid needs at least one strand");
  int s = w.strands;
  std::vector<int> perm(s + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters) {
    int j = std::abs(l);
    if (j == 0 || j >= s) throw std::invalid_argument("braid letter out of range");
    std::swap(perm[j], perm[j + 1]);
  }
  for (int i = 1; i <= s; ++i)
    if (perm[i] != i)
      throw std::invalid_argument(
          "braid does not close to a string link (nontrivial permutation)");

  Raw raw;
  raw.strands = s;
  std::vector<int> cur(s + 1);
  std::iota(cur.begin(), cur.end(), 0);
  raw.bottom.assign(cur.begin() + 1, cur.end());
  int fresh = s + 1;
  for (int l : w.letters) {
    int j = std::abs(l);
    int a = fresh++, b = fresh++;
    if (l > 0)
      raw.crossings.push_back({cur[j + 1], b, a, cur[j]});
    else
      raw.crossings.push_back({cur[j], cur[j + 1], b, a});
    cur[j] = a;
    cur[j + 1] = b;
  }
  raw.top.assign(cur.begin() + 1, cur.end());
  raw.braid = w;
  return finalize(raw);
}

int StringLinkDiagram::self_writhe(int s) const {
  int w = 0;
  for (const Crossing& x : crossings_)
    if (edge_strand_[x.edge[0]] == s && edge_strand_[x.over_in()] == s)
      w += x.sign;
  return w;
}

LinkDiagram StringLinkDiagram::closure() const {
  DiagramBuilder b;
  std::map<int, int> ren;
  for (int s = 0; s < strands(); ++s) {
    if (bottom_[s] == top_[s]) {
      b.free_loops.push_back(bottom_[s]);
      b.component_label[bottom_[s]] = s;
    } else {
      ren[top_[s]] = bottom_[s];
    }
  }
  auto renamed = [&](int e) {
    auto it = ren.find(e);
    return it == ren.end() ? e : it->second;
  };
  for (size_t c = 0; c < crossings_.size(); ++c) {
    const Crossing& x = crossings_[c];
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) t[p] = renamed(x.edge[p]);
    b.crossings.push_back(t);
    b.flows_into[t[0]] = {static_cast<int>(c), 0};
    int oin = x.over_in_corner();
    b.flows_into[t[oin]] = {static_cast<int>(c), oin};
  }
  for (int e = 0; e < edge_count(); ++e)
    b.component_label[renamed(e)] = edge_strand_[e];
  b.braid = braid_;
  return LinkDiagram::finalize(b);
}

std::string StringLinkDiagram::text() const {
  std::string out = "SL[" + std::to_string(strands()) + ", bottom=[";
  for (int s = 0; s < strands(); ++s) {
    if (s) out += ",";
    out += std::to_string(bottom_[s] + 1);
  }
  out += "], top=[";
  for (int s = 0; s < strands(); ++s) {
    if (s) out += ",";
    out += std::to_string(top_[s] + 1);
  }
  out += "]";
  for (const Crossing& x : crossings_)
    out += ", X[" + std::to_string(x.edge[0] + 1) + "," +
           std::to_string(x.edge[1] + 1) + "," + std::to_string(x.edge[2] + 1) +
           "," + std::to_string(x.edge[3] + 1) + "]";
  return out + "]";
}

namespace {

struct SlCursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument(std::string("expected '") + c +
                                  "' at position " + std::to_string(pos));
    ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits)
      throw std::invalid_argument("expected integer at position " +
                                  std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw std::invalid_argument("expected name at position " +
                                  std::to_string(start));
    return s.substr(start, pos - start);
  }
  std::vector<int> int_list() {
    std::vector<int> out;
    expect('[');
    if (!accept(']')) {
      out.push_back(static_cast<int>(integer()));
      while (accept(',')) out.push_back(static_cast<int>(integer()));
      expect(']');
    }
    return out;
  }
};

}  // namespace

StringLinkDiagram parse_sl(const std::string& text) {
  SlCursor c{text};
  if (c.ident() != "SL") throw std::invalid_argument("expected SL[...]");
  c.expect('[');
  StringLinkDiagram::Raw raw;
  raw.strands = static_cast<int>(c.integer());
  c.expect(',');
  if (c.ident() != "bottom") throw std::invalid_argument("expected bottom=[...]");
  c.expect('=');
  raw.bottom = c.int_list();
  c.expect(',');
  if (c.ident() != "top") throw std::invalid_argument("expected top=[...]");
  c.expect('=');
  raw.top = c.int_list();
  while (c.accept(',')) {
    if (c.ident() != "X") throw std::invalid_argument("expected X[a,b,c,d]");
    c.expect('[');
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) {
      t[p] = static_cast<int>(c.integer());
      if (p < 3) c.expect(',');
    }
    c.expect(']');
    raw.crossings.push_back(t);
  }
  c.expect(']');
  if (!c.at_end()) throw std::invalid_argument("trailing text after string link");
  return StringLinkDiagram::finalize(raw);
}

StringLinkDiagram parse_string_link(const std::string& text) {
  SlCursor c{text};
  std::string tag = c.ident();
  if (tag == "SL") return parse_sl(text);
  if (tag == "BR") {
    c.expect('[');
    BraidWord w;
    w.strands = static_cast<int>(c.integer());
    c.expect(',');
    for (int l : c.int_list()) w.letters.push_back(l);
    c.expect(']');
    if (!c.at_end())
      throw std::invalid_argument("trailing text after braid word");
    return StringLinkDiagram::from_braid(w);
  }
  throw std::invalid_argument("unrecognized string link format '" + tag + "'");
}

long long strand_linking(const StringLinkDiagram& j, int s, int t) {
  return linking_number(j.closure(), s, t);
}

bool pairwise_linking_zero(const StringLinkDiagram& j) {
  return linking_matrix_zero(j.closure());
}

}  // namespace linkcalc
