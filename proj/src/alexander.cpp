#include "linkcalc/alexander.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "linkcalc/fox.hpp"
#include "linkcalc/wirtinger.hpp"

namespace linkcalc {

LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly den(1);
  for (int col = 0; col + 1 < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n && pivot < 0; ++r)
      if (!m[r][col].zero()) pivot = r;
    if (pivot < 0) return {};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c) {
        LaurentPoly num = m[col][col] * m[r][c] - m[r][col] * m[col][c];
        LaurentPoly q;
        if (!laurent_divide(num, den, q))
          throw std::logic_error("fraction-free elimination step failed");
        m[r][c] = std::move(q);
      }
      m[r][col] = LaurentPoly{};
    }
    den = m[col][col];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly alexander_poly(const LinkDiagram& d) {
  GroupPresentation p = wirtinger(d);
  int gens = p.generators;
  int k = gens - 1;  // minor size after deleting the first generator column
  if (k == 0) return LaurentPoly(1);
  int rows = static_cast<int>(p.relators.size());
  if (rows < k) return {};

  std::vector<std::vector<LaurentPoly>> jac(rows,
                                            std::vector<LaurentPoly>(k));
  for (int r = 0; r < rows; ++r)
    for (int g = 2; g <= gens; ++g) {
      LaurentPoly entry;
      for (const auto& [w, c] : fox_derivative(p.relators[r], g)) {
        int deg = 0;
        for (int l : w.letters()) deg += l > 0 ? 1 : -1;
        entry.add_term(deg, c);
      }
      jac[r][g - 2] = std::move(entry);
    }

  LaurentPoly acc;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<std::vector<LaurentPoly>> sub(k);
    for (int i = 0; i < k; ++i) sub[i] = jac[idx[i]];
    acc = laurent_gcd(acc, laurent_det(std::move(sub)));
    if (acc == LaurentPoly(1)) break;
    int i = k - 1;
    while (i >= 0 && idx[i] == rows - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }

  LaurentPoly t_minus_1 = LaurentPoly::monomial(1, 1) - LaurentPoly(1);
  for (int i = 1; i < d.components() && !acc.zero(); ++i) {
    LaurentPoly q;
    if (!laurent_divide(acc, t_minus_1, q)) break;
    acc = std::move(q);
  }
  return acc.canonical_associate();
}

}  // namespace linkcalc
