#include "linkcalc/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace linkcalc {

namespace {

// Dense coefficient vector c[0..deg], c[deg] != 0, plus helpers for the
// primitive-remainder Euclid below. Exponent offsets are units and never
// matter for gcd or divisibility.
using Dense = std::vector<long long>;

Dense to_dense(const LaurentPoly& p) {
  Dense c(p.high() - p.low() + 1, 0);
  for (const auto& [e, v] : p.terms()) c[e - p.low()] = v;
  return c;
}

void trim(Dense& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long long content(const Dense& c) {
  long long g = 0;
  for (long long v : c) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

void divide_scalar(Dense& c, long long s) {
  for (long long& v : c) v /= s;
}

// Pseudo-remainder of a by b, re-primitivized to keep coefficients small.
Dense prem_primitive(Dense a, const Dense& b) {
  long long lb = b.back();
  while (a.size() >= b.size()) {
    long long la = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < a.size(); ++i) a[i] *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
    if (long long g = content(a); g > 1) divide_scalar(a, g);
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

long long LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::low() const {
  if (zero()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::high() const {
  if (zero()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.emplace(exp, 0).first;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly p = *this;
  for (const auto& [e, v] : rhs.terms_) p.add_term(e, v);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly p = *this;
  for (const auto& [e, v] : rhs.terms_) p.add_term(e, -v);
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly p;
  for (const auto& [e1, v1] : terms_)
    for (const auto& [e2, v2] : rhs.terms_) p.add_term(e1 + e2, v1 * v2);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, v] : terms_) p.terms_[e] = -v;
  return p;
}

long long LaurentPoly::evaluate(long long t) const {
  if (t != 1 && t != -1)
    throw std::invalid_argument("only unit arguments stay integral");
  long long sum = 0;
  for (const auto& [e, v] : terms_) sum += (t == 1 || e % 2 == 0) ? v : -v;
  return sum;
}

LaurentPoly LaurentPoly::reciprocal() const {
  LaurentPoly p;
  for (const auto& [e, v] : terms_) p.terms_[-e] = v;
  return p;
}

LaurentPoly LaurentPoly::canonical_associate() const {
  if (zero()) return {};
  LaurentPoly p;
  int shift = low();
  long long lead = terms_.rbegin()->second;
  for (const auto& [e, v] : terms_) p.terms_[e - shift] = lead > 0 ? v : -v;
  return p;
}

bool LaurentPoly::associate_of(const LaurentPoly& rhs) const {
  return canonical_associate() == rhs.canonical_associate();
}

std::string LaurentPoly::str() const {
  if (zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, v] = *it;
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    long long a = v < 0 ? -v : v;
    if (a != 1 || e == 0) out += std::to_string(a);
    if (e != 0) {
      if (a != 1) out += "*";
      out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
  }
  return out;
}

bool laurent_divide(const LaurentPoly& num, const LaurentPoly& den,
                    LaurentPoly& quot) {
  if (den.zero()) return false;
  if (num.zero()) {
    quot = LaurentPoly{};
    return true;
  }
  Dense n = to_dense(num);
  Dense d = to_dense(den);
  Dense q(n.size() >= d.size() ? n.size() - d.size() + 1 : 0, 0);
  while (n.size() >= d.size()) {
    if (n.back() % d.back() != 0) return false;
    long long c = n.back() / d.back();
    size_t shift = n.size() - d.size();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) n[i + shift] -= c * d[i];
    trim(n);
    if (n.empty()) break;
  }
  if (!n.empty()) return false;
  LaurentPoly out;
  int base = num.low() - den.low();
  for (size_t i = 0; i < q.size(); ++i) out.add_term(base + (int)i, q[i]);
  quot = out;
  return true;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.zero()) return b.canonical_associate();
  if (b.zero()) return a.canonical_associate();
  Dense x = to_dense(a);
  Dense y = to_dense(b);
  long long scalar = std::gcd(content(x), content(y));
  divide_scalar(x, content(x));
  divide_scalar(y, content(y));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = prem_primitive(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  LaurentPoly g;
  for (size_t i = 0; i < x.size(); ++i) g.add_term((int)i, x[i] * scalar);
  return g.canonical_associate();
}

}  // namespace linkcalc
