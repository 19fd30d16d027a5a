#pragma once

#include <map>
#include <string>

namespace linkcalc {

/// Integer Laurent polynomial in one variable t. Only nonzero coefficients
/// are stored. Invariants computed from presentations are defined up to a
/// unit +-t^k, so comparisons usually go through canonical_associate(),
/// which shifts the lowest exponent to zero and makes the leading
/// coefficient positive.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long long constant);
  static LaurentPoly monomial(long long coeff, int exp);

  const std::map<int, long long>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  long long coeff(int exp) const;
  int low() const;   // lowest exponent; requires a nonzero polynomial
  int high() const;  // highest exponent; requires a nonzero polynomial

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;

  long long evaluate(long long t) const;  // t must be a unit: +1 or -1
  LaurentPoly reciprocal() const;         // t -> 1/t

  LaurentPoly canonical_associate() const;
  bool associate_of(const LaurentPoly& rhs) const;

  std::string str() const;

  bool operator==(const LaurentPoly&) const = default;

  void add_term(int exp, long long coeff);

 private:
  std::map<int, long long> terms_;
};

/// Exact division; returns false and leaves quot untouched when den does not
/// divide num.
bool laurent_divide(const LaurentPoly& num, const LaurentPoly& den,
                    LaurentPoly& quot);

/// Gcd up to units, returned as a canonical associate. gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace linkcalc
