#pragma once

#include <vector>

#include "linkcalc/laurent.hpp"
#include "linkcalc/link_diagram.hpp"

namespace linkcalc {

/// Seifert pairing of the canonical surface of a braid presentation: one
/// disk per strand, one half-twisted band per letter, loops running through
/// consecutive bands of a column. A column no letter uses is bridged by a
/// tube whose meridian loop links nothing, giving a zero row and column, so
/// split links come out singular.
struct SeifertData {
  std::vector<std::vector<long long>> matrix;  // V[i][j] = lk(l_i, l_j^+)
  int circles = 0;  // disks
  int bands = 0;
  int tubes = 0;
  int boundary_components = 0;

  int rank() const { return static_cast<int>(matrix.size()); }
  /// Genus of the connected surface: 2g = 2 - chi - boundary with
  /// chi = circles - bands - 2 tubes.
  int genus() const;
};

SeifertData seifert_matrix(const BraidWord& w);
SeifertData seifert_matrix(const LinkDiagram& d);

/// det(V - t V^T). Degree equals the rank, the value at -1 is det(V + V^T),
/// and up to units it matches the undivided Alexander determinant.
LaurentPoly seifert_poly(const SeifertData& s);

/// Signature of V + V^T, by exact symmetric reduction over the integers.
int signature(const SeifertData& s);
int signature(const LinkDiagram& d);

/// Bounds attached to a banding count c: the rational lower bound c/2 kept
/// unrounded (ceilings are the caller's business) and the integer upper
/// bound c.
struct G4Bounds {
  long long lower_num = 0;
  long long lower_den = 1;
  long long upper = 0;
};
G4Bounds g4_bounds_from_c(long long c);

}  // namespace linkcalc
