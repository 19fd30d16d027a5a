#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linkcalc/series.hpp"

using namespace linkcalc;

TEST_CASE("expansion of a commutator starts at degree two") {
  FreeWord w = commutator(FreeWord::generator(1), FreeWord::generator(2));
  TruncatedSeries s = magnus_expand(w, 2);
  CHECK(s.coeff({}) == 1);
  CHECK(s.coeff({1}) == 0);
  CHECK(s.coeff({2}) == 0);
  CHECK(s.coeff({1, 2}) == 1);
  CHECK(s.coeff({2, 1}) == -1);
  CHECK(s.coeff({1, 1}) == 0);
  CHECK(s.coeff({2, 2}) == 0);
  CHECK(s.terms().size() == 3);
}

TEST_CASE("generator expansions") {
  TruncatedSeries s = magnus_expand(FreeWord::generator(1), 3);
  CHECK(s.coeff({}) == 1);
  CHECK(s.coeff({1}) == 1);
  CHECK(s.terms().size() == 2);

  TruncatedSeries t = magnus_expand(FreeWord::generator(1, -1), 3);
  CHECK(t.coeff({}) == 1);
  CHECK(t.coeff({1}) == -1);
  CHECK(t.coeff({1, 1}) == 1);
  CHECK(t.coeff({1, 1, 1}) == -1);
  CHECK(s * t == TruncatedSeries::one(3));
}

TEST_CASE("multiplication truncates at the cap") {
  TruncatedSeries x = TruncatedSeries::variable(1, 2);
  TruncatedSeries p = (TruncatedSeries::one(2) + x) * (TruncatedSeries::one(2) + x);
  CHECK(p.coeff({1}) == 2);
  CHECK(p.coeff({1, 1}) == 1);
  CHECK((p * p).coeff({1, 1}) == 6);  // degree-3+ terms discarded
}

TEST_CASE("expansion is multiplicative and sends inverses to inverses") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 7), gen(1, 3), coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    auto random_word = [&]() {
      std::vector<int> ls;
      int n = len(rng);
      for (int i = 0; i < n; ++i) ls.push_back(gen(rng) * (coin(rng) ? 1 : -1));
      return free_reduce(ls);
    };
    FreeWord u = random_word(), w = random_word();
    int cap = 1 + trial % 6;
    CHECK(magnus_expand(u * w, cap) == magnus_expand(u, cap) * magnus_expand(w, cap));
    CHECK(magnus_expand(u.inverse(), cap) == magnus_expand(u, cap).inverse());
    CHECK(magnus_expand(u, cap) * magnus_expand(u.inverse(), cap) ==
          TruncatedSeries::one(cap));
  }
}

TEST_CASE("units invert, non-units are rejected") {
  TruncatedSeries s = TruncatedSeries::one(4) - TruncatedSeries::variable(2, 4);
  TruncatedSeries inv = s.inverse();
  CHECK(inv.coeff({2, 2, 2}) == 1);
  CHECK(s * inv == TruncatedSeries::one(4));
  CHECK(inv * s == TruncatedSeries::one(4));

  TruncatedSeries two(3);
  two.add_term({}, 2);
  CHECK_THROWS_AS(two.inverse(), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(3).inverse(), std::invalid_argument);
}
