#pragma once

#include <utility>
#include <vector>

#include "linkcalc/free_word.hpp"

namespace linkcalc {

/// Image of a word in the free solvable group F/F^(d) of the given rank.
/// Depth 1 is the free abelian quotient, recorded by the exponent vector.
/// For depth d > 1 the element is written through the Magnus embedding into
/// the wreath product Z^rank wr F/F^(d-1): alongside the exponents it keeps,
/// per generator, the image of the Fox derivative in the integral group ring
/// of the depth-(d-1) group. Group ring elements are sorted coefficient
/// lists over depth-(d-1) normal forms. Two words agree in F/F^(d) exactly
/// when their normal forms are equal, and w lies in the derived subgroup
/// F^(d) exactly when its normal form is trivial.
struct SolvableNormalForm {
  using Ring = std::vector<std::pair<SolvableNormalForm, long long>>;

  int rank = 0;
  int depth = 1;
  std::vector<long long> exponents;
  std::vector<Ring> fox;  // one ring element per generator when depth > 1

  static SolvableNormalForm identity(int rank, int depth);
  static SolvableNormalForm letter(int letter, int rank, int depth);
  static SolvableNormalForm from_word(const FreeWord& w, int rank, int depth);

  SolvableNormalForm operator*(const SolvableNormalForm& rhs) const;
  SolvableNormalForm inverse() const;
  bool trivial() const;

  bool operator==(const SolvableNormalForm& rhs) const;
  bool operator<(const SolvableNormalForm& rhs) const;
};

inline constexpr int kDefaultDerivedDepthCap = 4;

/// Membership in the n-th derived subgroup F^(n) of the free group on the
/// generators appearing in w. n = 0 is the whole group. Depths beyond the
/// cap are rejected rather than silently truncated.
bool in_derived(const FreeWord& w, int n,
                int depth_cap = kDefaultDerivedDepthCap);

}  // namespace linkcalc
