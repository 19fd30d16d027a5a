#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkcalc/link_diagram.hpp"

namespace linkcalc {

/// Oriented string link on r strands in a box: strand i enters at bottom
/// position i and leaves at top position i (positions counted left to
/// right). Edges are renumbered 0..E-1 along strands after finalize.
class StringLinkDiagram {
 public:
  struct Raw {
    int strands = 0;
    std::vector<std::array<int, 4>> crossings;  // ccw, under at 0 and 2
    std::vector<int> bottom, top;  // one edge id per strand
    std::optional<BraidWord> braid;
  };

  StringLinkDiagram() = default;
  static StringLinkDiagram finalize(const Raw& raw);
  /// The word read as a box diagram; the permutation must be trivial.
  static StringLinkDiagram from_braid(const BraidWord& w);

  int strands() const { return static_cast<int>(bottom_.size()); }
  int edge_count() const { return static_cast<int>(edge_strand_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int bottom_edge(int s) const { return bottom_.at(s); }
  int top_edge(int s) const { return top_.at(s); }
  int strand_of_edge(int e) const { return edge_strand_.at(e); }
  const std::vector<int>& strand_edges(int s) const { return strand_edges_.at(s); }
  const std::vector<std::pair<int, int>>& occurrences(int e) const {
    return occ_.at(e);
  }
  const std::optional<BraidWord>& braid() const { return braid_; }

  /// Signed count of strand s crossing itself.
  int self_writhe(int s) const;

  /// Join top i to bottom i around the box. Components are labeled by
  /// strand index, so component i of the closure is strand i.
  LinkDiagram closure() const;

  std::string text() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> bottom_, top_, edge_strand_;
  std::vector<std::vector<int>> strand_edges_;
  std::vector<std::vector<std::pair<int, int>>> occ_;
  std::optional<BraidWord> braid_;
};

/// SL[r, bottom=[...], top=[...], X[a,b,c,d], ...].
StringLinkDiagram parse_sl(const std::string& text);

/// Dispatch: SL[...] or BR[...] (read as a box, not a closure).
StringLinkDiagram parse_string_link(const std::string& text);

long long strand_linking(const StringLinkDiagram& j, int s, int t);
bool pairwise_linking_zero(const StringLinkDiagram& j);

}  // namespace linkcalc
