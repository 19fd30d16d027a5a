#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linkcalc {

/// One crossing of an oriented diagram. The four incident edge ids sit in
/// counterclockwise order starting from the incoming under-strand: edge[0]
/// is the under-strand entering, edge[2] the under-strand leaving, edge[1]
/// and edge[3] the over-strand. sign is +1 exactly when the over-strand
/// runs from edge[3] to edge[1] (right-handed crossing: the over-strand
/// sees the under-strand pass left to right).
struct Crossing {
  std::array<int, 4> edge{-1, -1, -1, -1};
  int sign = 0;

  bool involves(int e) const {
    return edge[0] == e || edge[1] == e || edge[2] == e || edge[3] == e;
  }
  int over_in_corner() const { return sign > 0 ? 3 : 1; }
  int over_out_corner() const { return sign > 0 ? 1 : 3; }
  int over_in() const { return edge[over_in_corner()]; }
  int over_out() const { return edge[over_out_corner()]; }
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // k stands for sigma_|k|^(sign k), 1 <= |k| < strands
};

/// Raw material for assembling a diagram. Corner tuples are counterclockwise
/// with the under-strand at positions 0 and 2, but flow directions are still
/// undetermined; finalize() orients every curve, rotates each tuple so that
/// position 0 is the incoming under-strand, and computes signs.
struct DiagramBuilder {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> free_loops;  // edge ids of crossing-free components
  // Direction seeds: edge id -> (crossing index, corner) it flows into.
  std::map<int, std::pair<int, int>> flows_into;
  // Strict PD convention: every corner 0 must come out as the incoming
  // under-strand (parser mode; finalize throws if the seeds conflict).
  bool corner0_in = false;
  // Optional component labels (edge id -> label). Curves are ordered by the
  // smallest label they carry, then by smallest edge id; unlabeled curves
  // come after labeled ones.
  std::map<int, int> component_label;
  std::optional<BraidWord> braid;
};

/// Oriented link diagram: a planar combinatorial map of crossings plus
/// crossing-free loop components. After finalize() edges are renumbered
/// 0..edge_count()-1 in traversal order, component by component.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  static LinkDiagram finalize(const DiagramBuilder& b);

  int components() const { return static_cast<int>(comp_edges_.size()); }
  int edge_count() const { return static_cast<int>(edge_component_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int component_of_edge(int e) const { return edge_component_.at(e); }
  const std::vector<int>& component_edges(int c) const { return comp_edges_.at(c); }
  bool is_free_loop(int e) const;

  /// Occurrences of an edge among crossing corners: 0 for a free loop,
  /// otherwise exactly 2 entries (crossing index, corner).
  const std::vector<std::pair<int, int>>& occurrences(int e) const { return occ_.at(e); }
  /// Corner the edge flows into / out of; empty for free loops.
  std::optional<std::pair<int, int>> head(int e) const;
  std::optional<std::pair<int, int>> tail(int e) const;
  /// Successor of e along its component's orientation.
  int next_edge(int e) const;

  const std::optional<BraidWord>& braid() const { return braid_; }
  void clear_braid() { braid_.reset(); }

  /// Consistency check: edge degrees, orientation/sign coherence, component
  /// traversals, and sphericity of every connected piece. Throws
  /// std::runtime_error with a description on failure.
  void validate() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> edge_component_;
  std::vector<std::vector<int>> comp_edges_;
  std::vector<std::vector<std::pair<int, int>>> occ_;
  std::optional<BraidWord> braid_;
};

int writhe(const LinkDiagram& d, int component);
int total_writhe(const LinkDiagram& d);

/// Signed count of crossings where component i passes under component j.
long long linking_number(const LinkDiagram& d, int i, int j);
std::vector<std::vector<long long>> linking_matrix(const LinkDiagram& d);
bool linking_matrix_zero(const LinkDiagram& d);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram delete_component(const LinkDiagram& d, int component);

namespace detail {

/// Faces of the combinatorial map as orbits of quadrants. Quadrant (c, q)
/// is the sector between corners q and q+1 of crossing c. `corners` lists
/// the corner tuples; every edge id must occur exactly twice. Returns one
/// face per orbit, each a list of (crossing, quadrant).
std::vector<std::vector<std::pair<int, int>>> quadrant_faces(
    const std::vector<std::array<int, 4>>& corners);

/// Euler check V - E + F = 2 on every connected piece of the map.
bool spherical(const std::vector<std::array<int, 4>>& corners);

}  // namespace detail

}  // namespace linkcalc
