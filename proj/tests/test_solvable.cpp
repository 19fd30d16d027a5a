#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "linkcalc/fox.hpp"
#include "linkcalc/solvable.hpp"

using namespace linkcalc;

namespace {

FreeWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> letters;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int g = gen(rng);
    letters.push_back(coin(rng) ? g : -g);
  }
  return free_reduce(letters);
}

// Independent check for membership in the second derived subgroup: the free
// metabelian group embeds into two-by-two upper triangular matrices
// [[t_g, e_g], [0, 1]] over Laurent polynomials in commuting variables, with
// the corner entry in a free module. A word lies in F'' exactly when its
// matrix is the identity. Plain commutative polynomial arithmetic, sharing
// no code with the recursive normal forms.
using MPoly = std::map<std::vector<int>, long long>;

void mpoly_accumulate(MPoly& p, const std::vector<int>& mono, long long c) {
  auto it = p.emplace(mono, 0).first;
  it->second += c;
  if (it->second == 0) p.erase(it);
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b, int rank) {
  MPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(rank);
      for (int i = 0; i < rank; ++i) m[i] = ma[i] + mb[i];
      mpoly_accumulate(out, m, ca * cb);
    }
  return out;
}

bool metabelian_trivial(const FreeWord& w, int rank) {
  MPoly unit = {{std::vector<int>(rank, 0), 1}};
  std::vector<MPoly> corner(rank);
  for (int l : w.letters()) {
    int g = (l > 0 ? l : -l) - 1;
    std::vector<int> t(rank, 0);
    t[g] = l > 0 ? 1 : -1;
    MPoly lu = {{t, 1}};
    std::vector<MPoly> lc(rank);
    if (l > 0)
      lc[g] = {{std::vector<int>(rank, 0), 1}};
    else
      lc[g] = {{t, -1}};
    for (int i = 0; i < rank; ++i) {
      MPoly shifted = mpoly_mul(unit, lc[i], rank);
      for (const auto& [m, c] : shifted) mpoly_accumulate(corner[i], m, c);
    }
    unit = mpoly_mul(unit, lu, rank);
  }
  if (unit != MPoly{{std::vector<int>(rank, 0), 1}}) return false;
  for (const MPoly& p : corner)
    if (!p.empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("Fox derivatives of the commutator, frozen") {
  FreeWord c = commutator(FreeWord::generator(1), FreeWord::generator(2));
  FreeRing dx = {{FreeWord{}, 1}, {parse_word("x1 x2 x1^-1"), -1}};
  FreeRing dy = {{parse_word("x1"), 1}, {c, -1}};
  CHECK(fox_derivative(c, 1) == dx);
  CHECK(fox_derivative(c, 2) == dy);
  CHECK(fox_derivative(c, 3).empty());
}

TEST_CASE("Fox derivatives of powers telescope") {
  FreeWord x = FreeWord::generator(1);
  CHECK(fox_derivative(x.power(3), 1) ==
        FreeRing{{FreeWord{}, 1}, {x, 1}, {x.power(2), 1}});
  CHECK(fox_derivative(x.power(-2), 1) ==
        FreeRing{{x.power(-1), -1}, {x.power(-2), -1}});
}

TEST_CASE("fundamental identity of the free calculus") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    FreeWord w = random_word(rng, 3, 9);
    FreeRing sum;
    for (int g = 1; g <= 3; ++g) {
      FreeRing factor = {{FreeWord::generator(g), 1}, {FreeWord{}, -1}};
      sum = ring_add(sum, ring_multiply(fox_derivative(w, g), factor));
    }
    FreeRing expected = ring_canonical({{w, 1}, {FreeWord{}, -1}});
    CHECK(sum == expected);
  }
}

TEST_CASE("frozen derived-series memberships") {
  FreeWord x = FreeWord::generator(1);
  FreeWord y = FreeWord::generator(2);
  FreeWord z = FreeWord::generator(3);
  FreeWord c = commutator(x, y);

  CHECK(in_derived(c, 0));
  CHECK(in_derived(c, 1));
  CHECK_FALSE(in_derived(c, 2));

  FreeWord cc = commutator(commutator(x, y), commutator(x, z));
  CHECK(in_derived(cc, 1));
  CHECK(in_derived(cc, 2));
  CHECK_FALSE(in_derived(cc, 3));

  CHECK_FALSE(in_derived(x * y, 1));
  CHECK(in_derived(FreeWord{}, 4));
}

TEST_CASE("commutators of deeper terms descend one level per bracket") {
  FreeWord x = FreeWord::generator(1);
  FreeWord y = FreeWord::generator(2);
  FreeWord z = FreeWord::generator(3);
  FreeWord a = commutator(commutator(x, y), commutator(x, z));
  FreeWord b = commutator(commutator(y, z), commutator(y, x));
  FreeWord w = commutator(a, b);
  CHECK(in_derived(w, 3));
  CHECK_FALSE(in_derived(w, 4));
}

TEST_CASE("normal forms multiply by the wreath law") {
  std::mt19937 rng(57);
  for (int depth = 1; depth <= 3; ++depth) {
    for (int trial = 0; trial < 12; ++trial) {
      FreeWord u = random_word(rng, 3, 6);
      FreeWord v = random_word(rng, 3, 6);
      auto nu = SolvableNormalForm::from_word(u, 3, depth);
      auto nv = SolvableNormalForm::from_word(v, 3, depth);
      CHECK(nu * nv == SolvableNormalForm::from_word(u * v, 3, depth));
      CHECK(nu.inverse() == SolvableNormalForm::from_word(u.inverse(), 3, depth));
      CHECK((nu * nu.inverse()).trivial());
    }
  }
}

TEST_CASE("derived subgroups are normal") {
  std::mt19937 rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    FreeWord w = random_word(rng, 3, 6);
    FreeWord u = random_word(rng, 3, 4);
    for (int n = 1; n <= 2; ++n)
      CHECK(in_derived(w, n) == in_derived(w.conjugated_by(u), n));
  }
}

TEST_CASE("level two agrees with the metabelian matrix oracle") {
  std::mt19937 rng(7);
  int inside = 0;
  for (int trial = 0; trial < 400; ++trial) {
    FreeWord w = random_word(rng, 3, 8);
    bool ours = in_derived(w, 2);
    CHECK(ours == metabelian_trivial(w, 3));
    inside += ours;
  }
  // Random words almost never land in F''; seed some that do.
  FreeWord x = FreeWord::generator(1);
  FreeWord y = FreeWord::generator(2);
  FreeWord z = FreeWord::generator(3);
  std::vector<FreeWord> members = {
      FreeWord{},
      commutator(commutator(x, y), commutator(x, z)),
      commutator(commutator(x, y), commutator(y, z)),
      commutator(commutator(x * y, z), commutator(z, y)),
  };
  for (const FreeWord& w : members) {
    CHECK(in_derived(w, 2));
    CHECK(metabelian_trivial(w, 3));
    FreeWord conj = w.conjugated_by(x * z.inverse());
    CHECK(in_derived(conj, 2));
    CHECK(metabelian_trivial(conj, 3));
  }
  CHECK(inside >= 0);
}

TEST_CASE("depth requests beyond the cap are rejected") {
  FreeWord c = commutator(FreeWord::generator(1), FreeWord::generator(2));
  CHECK_THROWS_AS(in_derived(c, 5), std::invalid_argument);
  CHECK_THROWS_AS(in_derived(c, -1), std::invalid_argument);
  CHECK_FALSE(in_derived(c, 4, 5));
  CHECK_THROWS_AS(
      SolvableNormalForm::from_word(parse_word("x3"), 2, 2),
      std::invalid_argument);
  CHECK_THROWS_AS(SolvableNormalForm::identity(0, 1), std::invalid_argument);
}
