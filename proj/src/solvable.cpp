#include "linkcalc/solvable.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkcalc {

namespace {

using Ring = SolvableNormalForm::Ring;

int cmp_nf(const SolvableNormalForm& a, const SolvableNormalForm& b);

int cmp_ring(const Ring& a, const Ring& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (int c = cmp_nf(a[i].first, b[i].first)) return c;
    if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int cmp_nf(const SolvableNormalForm& a, const SolvableNormalForm& b) {
  if (a.exponents != b.exponents) return a.exponents < b.exponents ? -1 : 1;
  size_t n = std::min(a.fox.size(), b.fox.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = cmp_ring(a.fox[i], b.fox[i])) return c;
  if (a.fox.size() != b.fox.size()) return a.fox.size() < b.fox.size() ? -1 : 1;
  return 0;
}

Ring canonical(Ring r) {
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) {
    return cmp_nf(a.first, b.first) < 0;
  });
  Ring out;
  for (auto& [g, c] : r) {
    if (!out.empty() && cmp_nf(out.back().first, g) == 0)
      out.back().second += c;
    else
      out.emplace_back(std::move(g), c);
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

Ring ring_sum(const Ring& a, const Ring& b) {
  Ring r = a;
  r.insert(r.end(), b.begin(), b.end());
  return canonical(std::move(r));
}

Ring translate(const SolvableNormalForm& g, const Ring& r, long long scale) {
  Ring out;
  out.reserve(r.size());
  for (const auto& [h, c] : r) out.emplace_back(g * h, scale * c);
  return canonical(std::move(out));
}

// The image one level down the tower: same exponents, Fox entries pushed
// through the quotient F/F^(d-1) -> F/F^(d-2).
SolvableNormalForm project(const SolvableNormalForm& nf) {
  SolvableNormalForm out;
  out.rank = nf.rank;
  out.depth = nf.depth - 1;
  out.exponents = nf.exponents;
  if (out.depth > 1) {
    out.fox.resize(nf.rank);
    for (int i = 0; i < nf.rank; ++i) {
      Ring r;
      r.reserve(nf.fox[i].size());
      for (const auto& [g, c] : nf.fox[i]) r.emplace_back(project(g), c);
      out.fox[i] = canonical(std::move(r));
    }
  }
  return out;
}

}  // namespace

SolvableNormalForm SolvableNormalForm::identity(int rank, int depth) {
  if (rank < 1 || depth < 1)
    throw std::invalid_argument("rank and depth must be positive");
  SolvableNormalForm nf;
  nf.rank = rank;
  nf.depth = depth;
  nf.exponents.assign(rank, 0);
  if (depth > 1) nf.fox.resize(rank);
  return nf;
}

SolvableNormalForm SolvableNormalForm::letter(int letter, int rank,
                                              int depth) {
  int g = letter > 0 ? letter : -letter;
  if (g < 1 || g > rank) throw std::invalid_argument("letter out of range");
  SolvableNormalForm nf = identity(rank, depth);
  nf.exponents[g - 1] = letter > 0 ? 1 : -1;
  if (depth > 1) {
    if (letter > 0)
      nf.fox[g - 1] = {{identity(rank, depth - 1), 1}};
    else
      nf.fox[g - 1] = {{SolvableNormalForm::letter(letter, rank, depth - 1),
                        -1}};
  }
  return nf;
}

SolvableNormalForm SolvableNormalForm::from_word(const FreeWord& w, int rank,
                                                 int depth) {
  if (w.max_generator() > rank)
    throw std::invalid_argument("word uses a generator beyond the rank");
  SolvableNormalForm nf = identity(rank, depth);
  for (int l : w.letters()) nf = nf * letter(l, rank, depth);
  return nf;
}

SolvableNormalForm SolvableNormalForm::operator*(
    const SolvableNormalForm& rhs) const {
  SolvableNormalForm out = *this;
  for (int i = 0; i < rank; ++i) out.exponents[i] += rhs.exponents[i];
  if (depth > 1) {
    // Wreath law: d(uv) = d(u) + u d(v), with u acting one level down.
    SolvableNormalForm u = project(*this);
    for (int i = 0; i < rank; ++i)
      out.fox[i] = ring_sum(fox[i], translate(u, rhs.fox[i], 1));
  }
  return out;
}

SolvableNormalForm SolvableNormalForm::inverse() const {
  SolvableNormalForm out = identity(rank, depth);
  for (int i = 0; i < rank; ++i) out.exponents[i] = -exponents[i];
  if (depth > 1) {
    SolvableNormalForm u = project(*this).inverse();
    for (int i = 0; i < rank; ++i) out.fox[i] = translate(u, fox[i], -1);
  }
  return out;
}

bool SolvableNormalForm::trivial() const {
  for (long long e : exponents)
    if (e != 0) return false;
  for (const Ring& r : fox)
    if (!r.empty()) return false;
  return true;
}

bool SolvableNormalForm::operator==(const SolvableNormalForm& rhs) const {
  return depth == rhs.depth && cmp_nf(*this, rhs) == 0;
}

bool SolvableNormalForm::operator<(const SolvableNormalForm& rhs) const {
  return cmp_nf(*this, rhs) < 0;
}

bool in_derived(const FreeWord& w, int n, int depth_cap) {
  if (n < 0) throw std::invalid_argument("derived depth must be nonnegative");
  if (n == 0) return true;
  if (n > depth_cap)
    throw std::invalid_argument("derived depth exceeds the configured cap");
  int rank = std::max(1, w.max_generator());
  return SolvableNormalForm::from_word(w, rank, n).trivial();
}

}  // namespace linkcalc
