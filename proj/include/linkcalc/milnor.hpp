#pragma once

#include <map>
#include <string>
#include <vector>

#include "linkcalc/free_word.hpp"
#include "linkcalc/link_diagram.hpp"
#include "linkcalc/series.hpp"

namespace linkcalc {

struct MilnorEntry {
  std::vector<int> index;  // 1-based component indices, length >= 2
  long long value = 0;     // residue in [0, delta) when delta > 0
  long long delta = 0;     // gcd of shorter invariants over cyclic subindices
};

struct MilnorTable {
  std::string link;
  int max_length = 0;
  std::vector<MilnorEntry> entries;  // ascending length, then lexicographic
};

/// Longitudes rewritten as words in the component meridians m_1..m_r,
/// correct modulo the q-th lower central series subgroup: arc generators are
/// replaced by conjugated meridians, with conjugators substituted from the
/// previous refinement round, q rounds in total.
std::vector<FreeWord> chen_milnor_longitudes(const LinkDiagram& d, int q);

/// Computes mu-bar invariants from Magnus expansions of the rewritten
/// longitudes. degree_cap bounds the index length that can be queried.
class MilnorEngine {
 public:
  explicit MilnorEngine(const LinkDiagram& d, int degree_cap = 8);

  int degree_cap() const { return cap_; }
  int components() const { return static_cast<int>(series_.size()); }

  /// Expansion of the meridian-form longitude of a component, truncated at
  /// degree degree_cap - 1. The coefficient of X_{i1}..X_{i(k-1)} in the
  /// series of component j is the raw invariant of the index (i1..i(k-1) j).
  const TruncatedSeries& longitude_series(int component) const;

  /// mu-bar of an index: the raw longitude coefficient reduced modulo the
  /// gcd of all shorter invariants over cyclic rotations of proper
  /// subsequences (delta = 0 and no reduction when those all vanish).
  MilnorEntry mu(const std::vector<int>& index);

  /// True when every invariant of length 2..max_length vanishes, checked in
  /// increasing length.
  bool vanish_up_to(int max_length);

  /// True when mu-bar vanishes for every index in which component i appears
  /// at most occurrence_bounds[i-1] times, all components at once.
  bool refined_vanish(const std::vector<int>& occurrence_bounds);

  /// Smallest length in 2..max_length carrying a nonzero invariant, or 0.
  int first_nonvanishing(int max_length);

 private:
  long long raw_coefficient(const std::vector<int>& index) const;
  void check_index(const std::vector<int>& index) const;

  int cap_;
  std::vector<TruncatedSeries> series_;  // one per component
  std::map<std::vector<int>, MilnorEntry> memo_;
};

MilnorEntry milnor_mu(const LinkDiagram& d, const std::vector<int>& index,
                      int degree_cap = 8);
bool mu_vanish_up_to(const LinkDiagram& d, int max_length, int degree_cap = 8);
bool refined_vanish(const LinkDiagram& d,
                    const std::vector<int>& occurrence_bounds,
                    int degree_cap = 8);
int first_nonvanishing_length(const LinkDiagram& d, int max_length);
MilnorTable milnor_table(const LinkDiagram& d, int max_length,
                         const std::string& link_name = "");

}  // namespace linkcalc
