#include "linkcalc/pattern.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "linkcalc/cabling.hpp"

namespace linkcalc {

namespace {

struct Cut {
  int site, entry, dir;
};

}  // namespace

LinkDiagram multi_infect(const MultiDiskPattern& pat,
                         const StringLinkDiagram& j) {
  const LinkDiagram& L = pat.link;
  if (static_cast<int>(pat.sites.size()) != j.strands())
    throw std::invalid_argument("one site per infection strand expected");

  std::vector<int> widths;
  std::map<int, std::vector<Cut>> cuts;  // pattern edge -> cuts, listing order
  std::map<int, int> edge_site;
  for (int t = 0; t < static_cast<int>(pat.sites.size()); ++t) {
    const auto& entries = pat.sites[t].entries;
    widths.push_back(static_cast<int>(entries.size()));
    for (int k = 0; k < static_cast<int>(entries.size()); ++k) {
      const SiteEntry& se = entries[k];
      if (se.edge < 0 || se.edge >= L.edge_count())
        throw std::invalid_argument("site cuts a nonexistent edge");
      if (se.dir != 1 && se.dir != -1)
        throw std::invalid_argument("cut direction must be +1 or -1");
      auto [it, fresh_edge] = edge_site.try_emplace(se.edge, t);
      if (!fresh_edge && it->second != t)
        throw std::invalid_argument("edge assigned to more than one site");
      cuts[se.edge].push_back({t, k, se.dir});
    }
  }
  if (std::all_of(widths.begin(), widths.end(), [](int w) { return w == 0; }))
    return L;

  StringLinkDiagram cab = cable_strands(j, widths);
  std::vector<int> off(widths.size() + 1, 0);
  for (size_t t = 0; t < widths.size(); ++t) off[t + 1] = off[t] + widths[t];

  int fresh = L.edge_count();
  // Pieces of each cut edge: an edge cut m times falls into m+1 pieces
  // (piece 0 keeps the id); a cut free loop falls into m cyclic pieces.
  std::map<int, std::vector<int>> pieces;
  for (const auto& [e, cl] : cuts) {
    int m = static_cast<int>(cl.size());
    std::vector<int> p;
    if (L.is_free_loop(e)) {
      p.push_back(e);
      for (int i = 1; i < m; ++i) p.push_back(fresh++);
    } else {
      p.push_back(e);
      for (int i = 1; i <= m; ++i) p.push_back(fresh++);
    }
    pieces[e] = std::move(p);
  }
  int cable_base = fresh;
  fresh += cab.edge_count();

  // Identify cut ends with cable strand ends, smallest id representing
  // each merged edge.
  std::vector<int> parent(fresh);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  auto unite = [&](int a, int b2) {
    a = find(a);
    b2 = find(b2);
    if (a == b2) return;
    parent[std::max(a, b2)] = std::min(a, b2);
  };
  for (const auto& [e, cl] : cuts) {
    const auto& p = pieces[e];
    int m = static_cast<int>(cl.size());
    for (int i = 0; i < m; ++i) {
      int before, after;
      if (L.is_free_loop(e)) {
        before = p[(i + m - 1) % m];
        after = p[i];
      } else {
        before = p[i];
        after = p[i + 1];
      }
      int strand = off[cl[i].site] + cl[i].entry;
      int bottom = cable_base + cab.bottom_edge(strand);
      int top = cable_base + cab.top_edge(strand);
      if (cl[i].dir > 0) {
        unite(before, bottom);
        unite(after, top);
      } else {
        unite(before, top);
        unite(after, bottom);
      }
    }
  }
  // Flow through each cable strand is fixed by its cut's direction.
  std::vector<int> strand_dir(cab.strands(), 1);
  for (const auto& [e, cl] : cuts)
    for (const Cut& cut : cl)
      strand_dir[off[cut.site] + cut.entry] = cut.dir;

  // Pattern crossings come first, with the head occurrence of every cut
  // edge rerouted to its last piece.
  DiagramBuilder b;
  std::vector<std::array<int, 4>> tuples;
  for (const Crossing& x : L.crossings()) tuples.push_back(x.edge);
  for (const auto& [e, cl] : cuts) {
    if (L.is_free_loop(e)) continue;
    auto h = *L.head(e);
    tuples[h.first][h.second] = pieces[e].back();
  }
  for (size_t c = 0; c < tuples.size(); ++c) {
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) t[p] = find(tuples[c][p]);
    b.crossings.push_back(t);
    b.flows_into[t[0]] = {static_cast<int>(c), 0};
    int oin = L.crossings()[c].over_in_corner();
    b.flows_into[t[oin]] = {static_cast<int>(c), oin};
  }
  for (const Crossing& x : cab.crossings()) {
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) t[p] = find(cable_base + x.edge[p]);
    int c = static_cast<int>(b.crossings.size());
    b.crossings.push_back(t);
    // Seed both strands: a strand cut with dir -1 runs against the box's
    // own bottom-to-top orientation.
    int ud = strand_dir[cab.strand_of_edge(x.edge[0])];
    b.flows_into[t[ud > 0 ? 0 : 2]] = {c, ud > 0 ? 0 : 2};
    int od = strand_dir[cab.strand_of_edge(x.over_in())];
    int oin = od > 0 ? x.over_in_corner() : x.over_out_corner();
    b.flows_into[t[oin]] = {c, oin};
  }

  // Labels carry pattern components through to the result.
  for (int e = 0; e < L.edge_count(); ++e) {
    int comp = L.component_of_edge(e);
    auto it = pieces.find(e);
    if (it == pieces.end()) {
      b.component_label[find(e)] = comp;
    } else {
      for (int p : it->second) b.component_label[find(p)] = comp;
    }
  }

  std::set<int> used;
  for (const auto& t : b.crossings) used.insert(t.begin(), t.end());
  std::set<int> reps;
  for (int e = 0; e < fresh; ++e) reps.insert(find(e));
  for (int r : reps)
    if (!used.count(r)) b.free_loops.push_back(r);

  try {
    return LinkDiagram::finalize(b);
  } catch (const std::runtime_error& err) {
    throw std::runtime_error(std::string("infection does not close up into a "
                                         "planar diagram: ") +
                             err.what());
  }
}

}  // namespace linkcalc
