#include "linkcalc/braiding.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "linkcalc/moves.hpp"

namespace linkcalc {

namespace {

// succ[e] = edge the smoothed strand through e continues into.
std::vector<int> smoothing_successors(const LinkDiagram& d) {
  std::vector<int> succ(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) succ[e] = e;
  for (const auto& x : d.crossings()) {
    succ[x.edge[0]] = x.over_out();
    succ[x.over_in()] = x.edge[2];
  }
  return succ;
}

std::vector<std::array<int, 4>> corner_table(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> corners;
  corners.reserve(d.crossings().size());
  for (const auto& x : d.crossings()) corners.push_back(x.edge);
  return corners;
}

// Boundary arcs of every face as (edge, runs with the face walk). Faces of
// a free loop do not appear; loops never take part in pushes anyway.
std::vector<std::vector<std::pair<int, bool>>> face_arcs(const LinkDiagram& d) {
  std::vector<std::vector<std::pair<int, bool>>> out;
  auto corners = corner_table(d);
  for (const auto& face : detail::quadrant_faces(corners)) {
    int k = static_cast<int>(face.size());
    std::vector<std::pair<int, bool>> arcs;
    arcs.reserve(k);
    for (int i = 0; i < k; ++i) {
      auto [c, q] = face[i];
      int e = corners[c][(q + 1) % 4];
      bool with_walk = d.head(e) == std::make_optional(face[(i + 1) % k]);
      arcs.push_back({e, with_walk});
    }
    out.push_back(std::move(arcs));
  }
  return out;
}

std::set<std::pair<int, int>> incoherent_set(const LinkDiagram& d) {
  int n = 0;
  std::vector<int> circ = seifert_circles(d, &n);
  std::set<std::pair<int, int>> bad;
  for (const auto& arcs : face_arcs(d))
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = i + 1; j < arcs.size(); ++j) {
        int a = circ[arcs[i].first], b = circ[arcs[j].first];
        if (a != b && arcs[i].second == arcs[j].second)
          bad.insert({std::min(a, b), std::max(a, b)});
      }
  return bad;
}

// Number of circle pairs that are not nested with equal winding sense,
// minimised over the choice of outer face. Zero exactly when some braid
// axis sees a concentric coherent circle family, so a push that lowers it
// makes honest progress even when the pair it fixes uncovers a defect pair
// that previously shared no face. Circles of free loops bound no quadrant
// face and slide anywhere, so they never count.
int nesting_defects(const LinkDiagram& d) {
  int n = 0;
  std::vector<int> circ = seifert_circles(d, &n);
  auto faces = face_arcs(d);
  int nf = static_cast<int>(faces.size());
  if (nf == 0 || n == 0) return 0;

  // The two sides of every edge, distinguished by walk direction.
  std::vector<int> side_with(d.edge_count(), -1);
  std::vector<int> side_against(d.edge_count(), -1);
  for (int f = 0; f < nf; ++f)
    for (const auto& [e, with_walk] : faces[f])
      (with_walk ? side_with[e] : side_against[e]) = f;

  // parity[f] bit c: does a path from face 0 to face f cross circle c an
  // odd number of times. Well defined since circles are disjoint and
  // embedded, so each one separates the sphere.
  int words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> parity(nf,
                                            std::vector<uint64_t>(words, 0));
  std::vector<char> seen(nf, 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int f = queue[head];
    for (const auto& [e, with_walk] : faces[f]) {
      int g = with_walk ? side_against[e] : side_with[e];
      if (g < 0 || seen[g]) continue;
      parity[g] = parity[f];
      parity[g][circ[e] / 64] ^= uint64_t{1} << (circ[e] % 64);
      seen[g] = 1;
      queue.push_back(g);
    }
  }

  auto bit = [&](int f, int c) -> int {
    return static_cast<int>((parity[f][c / 64] >> (c % 64)) & 1);
  };

  // For each circle met by faces: one face beside it, and its walk-side
  // face (consistent along the whole circle, so any arc serves).
  std::vector<int> beside(n, -1), walk_side(n, -1);
  for (int e = 0; e < d.edge_count(); ++e) {
    if (side_with[e] < 0) continue;
    beside[circ[e]] = side_with[e];
    walk_side[circ[e]] = side_with[e];
  }
  std::vector<int> present;
  for (int c = 0; c < n; ++c)
    if (beside[c] >= 0) present.push_back(c);

  int best = -1;
  for (int outer = 0; outer < nf; ++outer) {
    int defects = 0;
    for (size_t i = 0; i < present.size(); ++i)
      for (size_t j = i + 1; j < present.size(); ++j) {
        int c1 = present[i], c2 = present[j];
        int c1_in_c2 = bit(beside[c1], c2) ^ bit(outer, c2);
        int c2_in_c1 = bit(beside[c2], c1) ^ bit(outer, c1);
        if (!c1_in_c2 && !c2_in_c1) {
          ++defects;
        } else {
          int rot1 = bit(walk_side[c1], c1) ^ bit(outer, c1);
          int rot2 = bit(walk_side[c2], c2) ^ bit(outer, c2);
          if (rot1 != rot2) ++defects;
        }
      }
    if (best < 0 || defects < best) best = defects;
    if (best == 0) break;
  }
  return best;
}

// Every push candidate: same-direction arc pairs of each face, both
// over/under roles.
std::vector<LinkDiagram> push_candidates(const LinkDiagram& cur) {
  std::vector<LinkDiagram> out;
  int n = 0;
  std::vector<int> circ = seifert_circles(cur, &n);
  for (const auto& arcs : face_arcs(cur))
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = i + 1; j < arcs.size(); ++j) {
        if (arcs[i].second != arcs[j].second) continue;
        if (circ[arcs[i].first] == circ[arcs[j].first]) continue;
        for (auto [a, b] : {std::pair{arcs[i].first, arcs[j].first},
                            std::pair{arcs[j].first, arcs[i].first}})
          for (auto& cand : r2_pushes(cur, a, b))
            out.push_back(std::move(cand));
      }
  return out;
}

std::string encode(const LinkDiagram& d) {
  std::string key;
  for (const auto& x : d.crossings()) {
    for (int e : x.edge) {
      key += std::to_string(e);
      key += ',';
    }
    key += x.sign > 0 ? '+' : '-';
  }
  return key;
}

// Incoherence removal: drive the nesting defect count to zero. A single
// push does not always lower it (the pair it fixes can uncover another),
// so walk the plateau of equal-defect diagrams breadth-first until one
// admits a lowering push.
LinkDiagram to_braid_position(LinkDiagram cur) {
  while (!incoherent_set(cur).empty()) {
    int defects = nesting_defects(cur);
    std::optional<LinkDiagram> better;
    std::vector<LinkDiagram> layer = {cur};
    std::set<std::string> visited = {encode(cur)};
    int budget = 256;
    while (!better && !layer.empty()) {
      std::vector<LinkDiagram> next_layer;
      for (const auto& state : layer) {
        for (auto& cand : push_candidates(state)) {
          int m = nesting_defects(cand);
          if (m < defects) {
            better = std::move(cand);
            break;
          }
          if (m == defects && budget > 0 &&
              visited.insert(encode(cand)).second) {
            --budget;
            next_layer.push_back(std::move(cand));
          }
        }
        if (better) break;
      }
      layer = std::move(next_layer);
    }
    if (!better) throw std::logic_error("no incoherence-reducing push exists");
    cur = std::move(*better);
  }
  return cur;
}

// B must be a cyclic rotation of A.
bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i)
      ok = a[(r + i) % a.size()] == b[i];
    if (ok) return true;
  }
  return false;
}

BraidWord read_off(const LinkDiagram& d) {
  int ncirc = 0;
  std::vector<int> circ = seifert_circles(d, &ncirc);
  std::vector<int> succ = smoothing_successors(d);
  const auto& xs = d.crossings();

  // The two circles a crossing's band joins.
  std::vector<std::pair<int, int>> bandc(xs.size());
  std::vector<std::set<int>> adj(ncirc);
  for (size_t x = 0; x < xs.size(); ++x) {
    int ca = circ[xs[x].edge[0]];
    int cb = circ[xs[x].over_in()];
    if (ca == cb)
      throw std::logic_error("band joins a circle to itself after reduction");
    bandc[x] = {ca, cb};
    adj[ca].insert(cb);
    adj[cb].insert(ca);
  }

  // Connected pieces of the circle/band graph.
  std::vector<int> parent(ncirc);
  for (int c = 0; c < ncirc; ++c) parent[c] = c;
  auto find = [&](int c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  for (auto [ca, cb] : bandc) parent[find(ca)] = find(cb);

  // Cyclic sequence of crossings met along each circle.
  std::vector<std::vector<int>> seq(ncirc);
  std::vector<char> seen(d.edge_count(), 0);
  for (int e0 = 0; e0 < d.edge_count(); ++e0) {
    if (seen[e0]) continue;
    int e = e0;
    do {
      seen[e] = 1;
      if (auto h = d.head(e)) seq[circ[e]].push_back(h->first);
      e = succ[e];
    } while (e != e0);
  }

  std::map<int, std::vector<int>> pieces;
  for (int c = 0; c < ncirc; ++c) pieces[find(c)].push_back(c);

  std::vector<int> pos(ncirc, -1);
  std::vector<int> letters;
  int offset = 0;
  for (auto& [root, members] : pieces) {
    // Order the piece's circles along the band path.
    std::vector<int> chain;
    if (members.size() == 1) {
      chain = members;
    } else {
      int end = -1;
      for (int c : members) {
        if (adj[c].size() > 2)
          throw std::logic_error("circle bands to three neighbours after reduction");
        if (adj[c].size() == 1 && end < 0) end = c;
      }
      if (end < 0) throw std::logic_error("circle bands close a cycle after reduction");
      int prev = -1, at = end;
      while (true) {
        chain.push_back(at);
        int nx = -1;
        for (int c : adj[at])
          if (c != prev) nx = c;
        if (nx < 0) break;
        prev = at;
        at = nx;
      }
      if (chain.size() != members.size())
        throw std::logic_error("band path misses part of its piece");
    }
    for (size_t i = 0; i < chain.size(); ++i) pos[chain[i]] = offset + static_cast<int>(i);

    // Column of a crossing: the strand gap between its two circles.
    auto column = [&](int x) {
      auto [ca, cb] = bandc[x];
      if (std::abs(pos[ca] - pos[cb]) != 1)
        throw std::logic_error("band spans non-adjacent strands after reduction");
      return std::min(pos[ca], pos[cb]) - offset;  // 0-based gap within piece
    };

    // Stitch the per-circle cyclic orders into one ring of crossings. The
    // ring starts as the innermost circle's sequence; each further circle
    // interleaves its new column after the anchors it shares with the ring.
    std::vector<int> ring = seq[chain[0]];
    for (size_t i = 2; i < chain.size(); ++i) {
      const auto& s = seq[chain[i - 1]];
      int gap_old = static_cast<int>(i) - 2, gap_new = static_cast<int>(i) - 1;
      size_t start = 0;
      while (start < s.size() && column(s[start]) != gap_old) ++start;
      if (start == s.size())
        throw std::logic_error("circle shares no band with its inner neighbour");
      std::map<int, std::vector<int>> after;
      std::vector<int> anchors_here;
      int anchor = s[start];
      anchors_here.push_back(anchor);
      for (size_t k = 1; k < s.size(); ++k) {
        int x = s[(start + k) % s.size()];
        if (column(x) == gap_old) {
          anchor = x;
          anchors_here.push_back(x);
        } else {
          after[anchor].push_back(x);
        }
      }
      std::vector<int> anchors_ring;
      for (int x : ring)
        if (column(x) == gap_old) anchors_ring.push_back(x);
      if (!cyclically_equal(anchors_here, anchors_ring))
        throw std::logic_error("band orders disagree around the axis");
      std::vector<int> merged;
      for (int x : ring) {
        merged.push_back(x);
        if (auto it = after.find(x); it != after.end())
          merged.insert(merged.end(), it->second.begin(), it->second.end());
      }
      ring = std::move(merged);
    }
    for (int x : ring) {
      int col = column(x) + 1 + offset;  // 1-based letter
      letters.push_back(xs[x].sign > 0 ? col : -col);
    }
    offset += static_cast<int>(chain.size());
  }

  BraidWord w{ncirc == 0 ? 1 : ncirc, letters};

  // The closure must have as many components as the diagram.
  std::vector<int> perm(w.strands);
  for (int i = 0; i < w.strands; ++i) perm[i] = i;
  for (int l : letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
  std::vector<char> done(w.strands, 0);
  int cycles = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (done[i]) continue;
    ++cycles;
    for (int j = i; !done[j]; j = perm[j]) done[j] = 1;
  }
  if (cycles != d.components())
    throw std::logic_error("read-off braid closes to the wrong component count");
  return w;
}

}  // namespace

std::vector<int> seifert_circles(const LinkDiagram& d, int* count) {
  std::vector<int> succ = smoothing_successors(d);
  std::vector<int> circ(d.edge_count(), -1);
  int n = 0;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (circ[e] >= 0) continue;
    for (int f = e; circ[f] < 0; f = succ[f]) circ[f] = n;
    ++n;
  }
  if (count) *count = n;
  return circ;
}

int incoherent_pairs(const LinkDiagram& d) {
  return static_cast<int>(incoherent_set(d).size());
}

BraidWord braid_presentation(const LinkDiagram& d) {
  if (d.braid()) return *d.braid();
  return read_off(to_braid_position(d));
}

}  // namespace linkcalc
