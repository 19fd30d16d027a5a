#include "linkcalc/seifert.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "linkcalc/alexander.hpp"
#include "linkcalc/braiding.hpp"

namespace linkcalc {

namespace {

// Loop through two bands of one column: band times t1 < t2 with signs s1, s2.
struct Loop {
  int col;
  int t1, t2;
  int s1, s2;
};

// Linking of loops in adjacent columns whose time intervals interleave,
// left column's loop starting first: (V[left][right], V[right][left]).
// Starting second negates both slots. Nested or disjoint intervals do not
// link. Pinned against the determinant identity
// det(V - tV^T) = unit * undivided Alexander over a corpus of closures.
constexpr long long kAcrossFirst = 1;
constexpr long long kAcrossSecond = 0;

int closure_components(const BraidWord& w) {
  std::vector<int> who(w.strands);
  for (int i = 0; i < w.strands; ++i) who[i] = i;
  for (int l : w.letters) std::swap(who[std::abs(l) - 1], who[std::abs(l)]);
  std::vector<char> done(w.strands, 0);
  int cycles = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (done[i]) continue;
    ++cycles;
    for (int j = i; !done[j]; j = who[j]) done[j] = 1;
  }
  return cycles;
}

}  // namespace

int SeifertData::genus() const {
  int chi = circles - bands - 2 * tubes;
  int twice = 2 - chi - boundary_components;
  if (twice < 0 || twice % 2)
    throw std::logic_error("surface bookkeeping out of joint");
  return twice / 2;
}

SeifertData seifert_matrix(const BraidWord& w) {
  if (w.strands < 1) throw std::invalid_argument("braid needs a strand");
  for (int l : w.letters)
    if (l == 0 || std::abs(l) >= w.strands)
      throw std::invalid_argument("braid letter outside the strand range");

  std::vector<std::vector<std::pair<int, int>>> occ(w.strands - 1);
  for (int t = 0; t < static_cast<int>(w.letters.size()); ++t) {
    int l = w.letters[t];
    occ[std::abs(l) - 1].push_back({t, l > 0 ? 1 : -1});
  }

  std::vector<Loop> loops;
  int tubes = 0;
  for (int c = 0; c < w.strands - 1; ++c) {
    if (occ[c].empty()) ++tubes;
    for (size_t j = 0; j + 1 < occ[c].size(); ++j)
      loops.push_back({c, occ[c][j].first, occ[c][j + 1].first,
                       occ[c][j].second, occ[c][j + 1].second});
  }

  int r = static_cast<int>(loops.size());
  SeifertData s;
  s.matrix.assign(r + tubes, std::vector<long long>(r + tubes, 0));
  s.circles = w.strands;
  s.bands = static_cast<int>(w.letters.size());
  s.tubes = tubes;
  s.boundary_components = closure_components(w);

  for (int a = 0; a < r; ++a) {
    s.matrix[a][a] = -(loops[a].s1 + loops[a].s2) / 2;
    for (int b = a + 1; b < r; ++b) {
      const Loop &la = loops[a], &lb = loops[b];
      if (la.col == lb.col) {
        if (la.t2 == lb.t1) {  // consecutive, shared band is la's later one
          s.matrix[a][b] = (la.s2 + 1) / 2;
          s.matrix[b][a] = (la.s2 - 1) / 2;
        }
        continue;
      }
      if (std::abs(la.col - lb.col) != 1) continue;
      const Loop& left = la.col < lb.col ? la : lb;
      const Loop& right = la.col < lb.col ? lb : la;
      long long lr = 0, rl = 0;
      if (left.t1 < right.t1 && right.t1 < left.t2 && left.t2 < right.t2) {
        lr = kAcrossFirst;
        rl = kAcrossSecond;
      } else if (right.t1 < left.t1 && left.t1 < right.t2 && right.t2 < left.t2) {
        lr = -kAcrossFirst;
        rl = -kAcrossSecond;
      } else {
        continue;  // nested or disjoint intervals do not link
      }
      if (&left == &la) {
        s.matrix[a][b] = lr;
        s.matrix[b][a] = rl;
      } else {
        s.matrix[a][b] = rl;
        s.matrix[b][a] = lr;
      }
    }
  }
  return s;
}

SeifertData seifert_matrix(const LinkDiagram& d) {
  SeifertData s = seifert_matrix(braid_presentation(d));
  if (s.boundary_components != d.components())
    throw std::logic_error("surface boundary disagrees with the diagram");
  return s;
}

LaurentPoly seifert_poly(const SeifertData& s) {
  int n = s.rank();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = LaurentPoly(s.matrix[i][j]) - t * LaurentPoly(s.matrix[j][i]);
  return laurent_det(m);
}

namespace {

using Wide = __int128;

int sign_of(Wide v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

int signature(const SeifertData& s) {
  int n = s.rank();
  std::vector<std::vector<Wide>> m(n, std::vector<Wide>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = static_cast<Wide>(s.matrix[i][j]) + s.matrix[j][i];

  const Wide kCap = static_cast<Wide>(1) << 100;
  Wide prev = 1;
  int sig = 0;
  for (int i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      int piv = -1;
      for (int j = i + 1; j < n && piv < 0; ++j)
        if (m[j][j] != 0) piv = j;
      if (piv >= 0) {
        std::swap(m[i], m[piv]);
        for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][piv]);
      } else {
        int off = -1;
        for (int j = i + 1; j < n && off < 0; ++j)
          if (m[i][j] != 0) off = j;
        if (off < 0) continue;  // zero row and column: null direction
        for (int c = 0; c < n; ++c) m[i][c] += m[off][c];
        for (int r = 0; r < n; ++r) m[r][i] += m[r][off];
      }
    }
    Wide p = m[i][i];
    sig += sign_of(p);
    Wide ap = p < 0 ? -p : p;
    int sp = sign_of(p);
    // Congruence row_r <- |p| row_r - sign(p) m[r][i] row_i keeps every
    // diagonal scale positive; dividing the block by the previous pivot
    // afterwards (when exact) keeps the entries minor-sized.
    bool divisible = true;
    for (int r = i + 1; r < n; ++r)
      for (int c = i + 1; c < n; ++c) {
        m[r][c] = m[r][c] * ap - sp * m[r][i] * m[i][c];
        if (m[r][c] % prev != 0) divisible = false;
        if (m[r][c] > kCap || m[r][c] < -kCap)
          throw std::logic_error("signature reduction overflow");
      }
    if (divisible && prev != 1)
      for (int r = i + 1; r < n; ++r)
        for (int c = i + 1; c < n; ++c) m[r][c] /= prev;
    prev = divisible ? ap : ap * prev;
  }
  return sig;
}

int signature(const LinkDiagram& d) { return signature(seifert_matrix(d)); }

G4Bounds g4_bounds_from_c(long long c) {
  if (c < 0) throw std::invalid_argument("banding count cannot be negative");
  G4Bounds b;
  b.lower_num = c % 2 == 0 ? c / 2 : c;
  b.lower_den = c % 2 == 0 ? 1 : 2;
  b.upper = c;
  return b;
}

}  // namespace linkcalc
