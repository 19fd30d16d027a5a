#pragma once

#include <map>
#include <vector>

#include "linkcalc/free_word.hpp"

namespace linkcalc {

/// Element of the quotient of the ring of integer power series in
/// noncommuting variables X_1..X_r by all monomials of degree > cap.
/// Terms are stored sparsely; a key is the index sequence of a monomial
/// (empty key: constant term). Group elements land in the units.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int cap) : cap_(cap) {}

  static TruncatedSeries one(int cap);
  static TruncatedSeries variable(int index, int cap);

  int cap() const { return cap_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(const std::vector<int>& monomial) const;
  long long constant_term() const { return coeff({}); }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }

  void add_term(const std::vector<int>& monomial, long long c);

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  bool operator==(const TruncatedSeries& rhs) const;

  /// Multiplicative inverse; requires constant term +1 or -1.
  TruncatedSeries inverse() const;

 private:
  int cap_ = 0;
  std::map<std::vector<int>, long long> terms_;
};

/// Magnus expansion x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ...,
/// truncated above the given degree.
TruncatedSeries magnus_expand(const FreeWord& w, int cap);

}  // namespace linkcalc
