#include "linkcalc/series.hpp"

#include <cstdlib>
#include <stdexcept>

namespace linkcalc {

TruncatedSeries TruncatedSeries::one(int cap) {
  TruncatedSeries s(cap);
  s.add_term({}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int index, int cap) {
  if (index <= 0) throw std::invalid_argument("variable index must be positive");
  TruncatedSeries s(cap);
  if (cap >= 1) s.add_term({index}, 1);
  return s;
}

long long TruncatedSeries::coeff(const std::vector<int>& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? 0 : it->second;
}

void TruncatedSeries::add_term(const std::vector<int>& monomial, long long c) {
  if (c == 0 || static_cast<int>(monomial.size()) > cap_) return;
  long long& slot = terms_[monomial];
  slot += c;
  if (slot == 0) terms_.erase(monomial);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(cap_, rhs.cap_));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(cap_, rhs.cap_));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(cap_, rhs.cap_));
  for (const auto& [ma, ca] : terms_) {
    if (static_cast<int>(ma.size()) > out.cap_) continue;
    for (const auto& [mb, cb] : rhs.terms_) {
      if (static_cast<int>(ma.size() + mb.size()) > out.cap_) continue;
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
  return cap_ == rhs.cap_ && terms_ == rhs.terms_;
}

TruncatedSeries TruncatedSeries::inverse() const {
  long long c0 = constant_term();
  if (c0 != 1 && c0 != -1)
    throw std::invalid_argument("series is not a unit: constant term must be +-1");
  // s = c0 (1 + n) with n of positive degree, so s^-1 = c0 sum (-n)^k.
  TruncatedSeries n(cap_);
  for (const auto& [m, c] : terms_)
    if (!m.empty()) n.add_term(m, c0 * c);
  TruncatedSeries out = one(cap_);
  TruncatedSeries pw = one(cap_);
  for (int k = 1; k <= cap_; ++k) {
    pw = pw * n;
    if (pw.is_zero()) break;
    for (const auto& [m, c] : pw.terms_) out.add_term(m, k % 2 ? -c : c);
  }
  if (c0 == -1) {
    TruncatedSeries neg(cap_);
    for (const auto& [m, c] : out.terms_) neg.add_term(m, -c);
    return neg;
  }
  return out;
}

TruncatedSeries magnus_expand(const FreeWord& w, int cap) {
  TruncatedSeries out = TruncatedSeries::one(cap);
  for (int g : w.letters()) {
    TruncatedSeries f = TruncatedSeries::one(cap);
    if (g > 0) {
      f = f + TruncatedSeries::variable(g, cap);
    } else {
      // 1 - X + X^2 - ... inverts 1 + X within the truncation.
      std::vector<int> m;
      for (int k = 1; k <= cap; ++k) {
        m.push_back(-g);
        f.add_term(m, k % 2 ? -1 : 1);
      }
    }
    out = out * f;
  }
  return out;
}

}  // namespace linkcalc
