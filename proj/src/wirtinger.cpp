#include "linkcalc/wirtinger.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace linkcalc {

// An arc is a maximal run of edges not interrupted by an underpass: edge e
// opens an arc exactly when it emerges from under a crossing (tail corner 2).
// A component that never goes under is a single closed arc.
ArcStructure arc_structure(const LinkDiagram& d) {
  ArcStructure a;
  a.edge_arc.assign(d.edge_count(), -1);
  a.arc_component.clear();
  a.base_arc.assign(d.components(), -1);
  a.walk.assign(d.components(), {});
  a.self_writhe.assign(d.components(), 0);

  for (int c = 0; c < d.components(); ++c) {
    const auto& edges = d.component_edges(c);
    a.self_writhe[c] = writhe(d, c);

    // Pick arc starting points: edges whose tail is an under-out corner.
    std::vector<int> starts;
    for (size_t i = 0; i < edges.size(); ++i) {
      auto t = d.tail(edges[i]);
      if (t && t->second == 2) starts.push_back(static_cast<int>(i));
    }
    if (starts.empty()) {
      // Never goes under: one closed arc.
      int arc = a.arcs++;
      a.arc_component.push_back(c);
      for (int e : edges) a.edge_arc[e] = arc;
    } else {
      // Arc k runs from starts[k] up to (not including) starts[k+1],
      // wrapping around the traversal cycle.
      for (size_t k = 0; k < starts.size(); ++k) {
        int arc = a.arcs++;
        a.arc_component.push_back(c);
        size_t i = static_cast<size_t>(starts[k]);
        size_t stop = static_cast<size_t>(starts[(k + 1) % starts.size()]);
        do {
          a.edge_arc[edges[i]] = arc;
          i = (i + 1) % edges.size();
        } while (i != stop);
      }
    }
    a.base_arc[c] = a.edge_arc[edges.front()];
  }

  // Walks read over-arcs of other components, so they need all arcs in place.
  for (int c = 0; c < d.components(); ++c) {
    for (int e : d.component_edges(c)) {
      auto h = d.head(e);
      if (!h || h->second != 0) continue;
      const Crossing& x = d.crossings()[h->first];
      ArcStructure::Underpass u;
      u.over_arc = a.edge_arc[x.over_in()];
      u.sign = x.sign;
      u.to_arc = a.edge_arc[x.edge[2]];
      a.walk[c].push_back(u);
    }
  }
  return a;
}

GroupPresentation wirtinger(const LinkDiagram& d) {
  ArcStructure a = arc_structure(d);
  GroupPresentation p;
  p.generators = a.arcs;
  p.meridian.assign(d.components(), 0);
  for (int c = 0; c < d.components(); ++c) p.meridian[c] = a.base_arc[c] + 1;

  // Crossing with over-arc o, incoming under-arc b, outgoing under-arc c,
  // sign s contributes the relator o^-s b o^s c^-1, i.e. c = o^-s b o^s.
  // The inverse conjugation pairs with the longitude letter o^s read at the
  // same underpass: together they make the zero-framed longitude of a split
  // component trivial and give mu(12) = lk on the positive Hopf link.
  for (const Crossing& x : d.crossings()) {
    int o = a.edge_arc[x.over_in()] + 1;
    int b = a.edge_arc[x.edge[0]] + 1;
    int c = a.edge_arc[x.edge[2]] + 1;
    FreeWord w = FreeWord::generator(o, -x.sign) * FreeWord::generator(b) *
                 FreeWord::generator(o, x.sign) * FreeWord::generator(c, -1);
    p.relators.push_back(w);
  }
  return p;
}

FreeWord longitude(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.components())
    throw std::invalid_argument("longitude: no such component");
  ArcStructure a = arc_structure(d);
  FreeWord w;
  for (const auto& u : a.walk[component])
    w = w * FreeWord::generator(u.over_arc + 1, u.sign);
  w = w * FreeWord::generator(a.base_arc[component] + 1)
              .power(-a.self_writhe[component]);
  return w;
}

std::vector<long long> abelianize_to_components(const LinkDiagram& d,
                                                const FreeWord& w) {
  ArcStructure a = arc_structure(d);
  std::vector<long long> out(d.components(), 0);
  for (int g : w.letters()) {
    int arc = std::abs(g) - 1;
    if (arc < 0 || arc >= a.arcs)
      throw std::invalid_argument("abelianize_to_components: generator out of range");
    out[a.arc_component[arc]] += g > 0 ? 1 : -1;
  }
  return out;
}

std::string presentation_text(const GroupPresentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (int i = 1; i <= p.generators; ++i) os << " x" << i;
  os << "\n";
  for (const FreeWord& r : p.relators) os << "rel: " << r.str() << "\n";
  os << "meridians:";
  for (int m : p.meridian) os << " x" << m;
  os << "\n";
  return os.str();
}

namespace {

// Canonical representative of a relator up to cyclic rotation and inversion.
std::vector<int> cyclic_canonical(const FreeWord& w) {
  FreeWord r = w.cyclically_reduced();
  std::vector<int> best;
  for (const FreeWord& v : {r, r.inverse()}) {
    const auto& ls = v.letters();
    int n = static_cast<int>(ls.size());
    for (int s = 0; s < std::max(n, 1); ++s) {
      std::vector<int> rot;
      rot.reserve(ls.size());
      for (int i = 0; i < n; ++i) rot.push_back(ls[(s + i) % n]);
      if (best.empty() || rot < best) best = rot;
    }
    if (n == 0) best = {};
  }
  return best;
}

}  // namespace

std::vector<FreeWord> dedup_relators(const std::vector<FreeWord>& relators) {
  std::vector<FreeWord> out;
  std::vector<std::vector<int>> seen;
  for (const FreeWord& r : relators) {
    if (r.empty()) continue;
    std::vector<int> key = cyclic_canonical(r);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.push_back(r);
  }
  return out;
}

}  // namespace linkcalc
