#include "linkcalc/cabling.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linkcalc {

StringLinkDiagram delete_strand(const StringLinkDiagram& j, int strand) {
  if (j.strands() <= 1)
    throw std::runtime_error("cannot delete the only strand");
  int m = j.edge_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };

  auto gone = [&](int e) { return j.strand_of_edge(e) == strand; };
  StringLinkDiagram::Raw raw;
  for (const Crossing& x : j.crossings()) {
    bool under_gone = gone(x.edge[0]);
    bool over_gone = gone(x.over_in());
    if (!under_gone && !over_gone) continue;
    if (!under_gone) parent[find(x.edge[0])] = find(x.edge[2]);
    if (!over_gone) parent[find(x.over_in())] = find(x.over_out());
  }
  for (const Crossing& x : j.crossings()) {
    if (gone(x.edge[0]) || gone(x.over_in())) continue;
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) t[p] = find(x.edge[p]);
    raw.crossings.push_back(t);
  }
  for (int s = 0; s < j.strands(); ++s) {
    if (s == strand) continue;
    raw.bottom.push_back(find(j.bottom_edge(s)));
    raw.top.push_back(find(j.top_edge(s)));
  }
  raw.strands = j.strands() - 1;
  return StringLinkDiagram::finalize(raw);
}

std::vector<int> full_twist_word(int strands, int turns) {
  std::vector<int> one;
  for (int rep = 0; rep < strands; ++rep)
    for (int i = 1; i < strands; ++i) one.push_back(i);
  std::vector<int> word;
  for (int t = 0; t < std::abs(turns); ++t)
    word.insert(word.end(), one.begin(), one.end());
  if (turns < 0) {
    std::reverse(word.begin(), word.end());
    for (int& l : word) l = -l;
  }
  return word;
}

StringLinkDiagram cable_strands(const StringLinkDiagram& j0,
                                const std::vector<int>& widths0) {
  if (static_cast<int>(widths0.size()) != j0.strands())
    throw std::invalid_argument("one width per strand expected");
  for (int w : widths0)
    if (w < 0) throw std::invalid_argument("widths must be nonnegative");

  StringLinkDiagram j = j0;
  std::vector<int> widths;
  for (int t = j0.strands() - 1; t >= 0; --t)
    if (widths0[t] == 0) j = delete_strand(j, t);
  for (int w : widths0)
    if (w > 0) widths.push_back(w);
  if (widths.empty()) throw std::invalid_argument("cannot delete every strand");

  int r = j.strands();
  int m = j.edge_count();
  auto width_of_edge = [&](int e) { return widths[j.strand_of_edge(e)]; };

  // Copy k of edge e is the k-th parallel copy counted from the left of
  // the flow direction (1-based k).
  std::vector<int> base(m + 1, 0);
  for (int e = 0; e < m; ++e) base[e + 1] = base[e] + width_of_edge(e);
  int fresh = base[m];
  auto copy_id = [&](int e, int k) { return base[e] + k - 1; };

  StringLinkDiagram::Raw raw;
  for (const Crossing& x : j.crossings()) {
    int wu = width_of_edge(x.edge[0]);
    int wo = width_of_edge(x.over_in());
    // Segment s of under-copy i runs past s over-copies; segment 0 and
    // segment wo are the copies of the incoming and outgoing edges.
    std::vector<std::vector<int>> useg(wu + 1), oseg(wo + 1);
    for (int i = 1; i <= wu; ++i) {
      useg[i].assign(wo + 1, 0);
      useg[i][0] = copy_id(x.edge[0], i);
      useg[i][wo] = copy_id(x.edge[2], i);
      for (int s = 1; s < wo; ++s) useg[i][s] = fresh++;
    }
    for (int t = 1; t <= wo; ++t) {
      oseg[t].assign(wu + 1, 0);
      oseg[t][0] = copy_id(x.over_in(), t);
      oseg[t][wu] = copy_id(x.over_out(), t);
      for (int s = 1; s < wu; ++s) oseg[t][s] = fresh++;
    }
    for (int i = 1; i <= wu; ++i)
      for (int t = 1; t <= wo; ++t) {
        if (x.sign > 0)
          raw.crossings.push_back({useg[i][wo - t], oseg[t][i],
                                   useg[i][wo - t + 1], oseg[t][i - 1]});
        else
          raw.crossings.push_back({useg[i][t - 1], oseg[t][wu - i],
                                   useg[i][t], oseg[t][wu - i + 1]});
      }
  }

  for (int s = 0; s < r; ++s)
    for (int k = 1; k <= widths[s]; ++k) {
      raw.bottom.push_back(copy_id(j.bottom_edge(s), k));
      raw.top.push_back(copy_id(j.top_edge(s), k));
    }
  raw.strands = static_cast<int>(raw.bottom.size());

  // Zero framing: undo the blackboard framing with full twists at the
  // bottom of each bundle.
  int pos = 0;
  for (int s = 0; s < r; ++s) {
    int w = widths[s];
    int turns = -j.self_writhe(s);
    if (w >= 2 && turns != 0) {
      std::vector<int> cur(w + 1);
      for (int k = 1; k <= w; ++k) {
        cur[k] = fresh++;
        raw.bottom[pos + k - 1] = cur[k];
      }
      for (int l : full_twist_word(w, turns)) {
        int p = std::abs(l);
        int a = fresh++, b = fresh++;
        if (l > 0)
          raw.crossings.push_back({cur[p + 1], b, a, cur[p]});
        else
          raw.crossings.push_back({cur[p], cur[p + 1], b, a});
        cur[p] = a;
        cur[p + 1] = b;
      }
      // Stitch the twist block onto the bundle's old bottom edges.
      std::map<int, int> ren;
      for (int k = 1; k <= w; ++k)
        ren[cur[k]] = copy_id(j.bottom_edge(s), k);
      for (auto& t : raw.crossings)
        for (int p = 0; p < 4; ++p) {
          auto it = ren.find(t[p]);
          if (it != ren.end()) t[p] = it->second;
        }
    }
    pos += w;
  }
  return StringLinkDiagram::finalize(raw);
}

}  // namespace linkcalc
