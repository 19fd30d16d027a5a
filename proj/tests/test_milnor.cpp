#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "linkcalc/milnor.hpp"
#include "linkcalc/parse.hpp"

using namespace linkcalc;

namespace {

// Whitehead link: closure of the alternating three-strand braid
// s2 s1^-1 s2 s1^-1 s2. Linking number zero, first nonvanishing
// invariant at length four.
const char* kWhitehead = "BR[3, [2, -1, 2, -1, 2]]";

void check_word_series_agreement(const LinkDiagram& d, int q) {
  auto words = chen_milnor_longitudes(d, q);
  MilnorEngine e(d, q);
  for (int c = 0; c < d.components(); ++c) {
    TruncatedSeries w = magnus_expand(words[c], q - 1);
    const TruncatedSeries& s = e.longitude_series(c);
    for (const auto& [m, coef] : w.terms()) CHECK(s.coeff(m) == coef);
    for (const auto& [m, coef] : s.terms())
      if (static_cast<int>(m.size()) <= q - 1) CHECK(w.coeff(m) == coef);
  }
}

}  // namespace

TEST_CASE("Hopf link: the length-two invariant is the linking number") {
  LinkDiagram d = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  auto words = chen_milnor_longitudes(d, 2);
  CHECK(words[0] == FreeWord::generator(2));
  CHECK(words[1] == FreeWord::generator(1));

  MilnorEngine e(d, 4);
  CHECK(e.mu({1, 2}).value == 1);
  CHECK(e.mu({1, 2}).delta == 0);
  CHECK(e.mu({2, 1}).value == 1);
  CHECK_FALSE(e.vanish_up_to(2));
  CHECK(e.first_nonvanishing(4) == 2);
}

TEST_CASE("mirror Hopf flips the sign") {
  LinkDiagram d = mirror(parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]"));
  MilnorEngine e(d, 2);
  CHECK(e.mu({1, 2}).value == -1);
}

TEST_CASE("knots carry no invariants: nilpotent quotients are cyclic") {
  for (const char* text : {"BR[2, [1, 1, 1]]", "PD[O[1]]", "BR[2, [1]]",
                           "BR[2, [1, 1, 1, -1, 1]]"}) {
    LinkDiagram d = parse_link(text);
    REQUIRE(d.components() == 1);
    MilnorEngine e(d, 8);
    CHECK(e.vanish_up_to(8));
    CHECK(e.first_nonvanishing(8) == 0);
  }
}

TEST_CASE("Borromean rings: first nonvanishing at length three") {
  LinkDiagram d = parse_br("BR[3, [1, -2, 1, -2, 1, -2]]");
  REQUIRE(d.components() == 3);
  MilnorEngine e(d, 6);
  CHECK(e.vanish_up_to(2));
  CHECK_FALSE(e.vanish_up_to(3));
  CHECK(e.first_nonvanishing(6) == 3);

  MilnorEntry m123 = e.mu({1, 2, 3});
  CHECK(std::abs(m123.value) == 1);
  CHECK(m123.delta == 0);
  // Cyclic symmetry and antisymmetry under reversal.
  CHECK(e.mu({2, 3, 1}).value == m123.value);
  CHECK(e.mu({3, 1, 2}).value == m123.value);
  CHECK(e.mu({1, 3, 2}).value == -m123.value);
}

TEST_CASE("full twists: linking numbers and indeterminacy") {
  LinkDiagram once = parse_br("BR[3, [1, 2, 1, 2, 1, 2]]");
  MilnorEngine e1(once, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) CHECK(e1.mu({i, j}).value == 1);

  LinkDiagram twice = parse_br("BR[3, [1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2]]");
  MilnorEngine e2(twice, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) CHECK(e2.mu({i, j}).value == 2);
  MilnorEntry m = e2.mu({1, 2, 3});
  CHECK(m.delta == 2);
  CHECK(m.value >= 0);
  CHECK(m.value < 2);
}

TEST_CASE("Whitehead link: vanishing through three, detected at four") {
  LinkDiagram d = parse_br(kWhitehead);
  REQUIRE(d.components() == 2);
  CHECK(linking_number(d, 0, 1) == 0);
  CHECK(total_writhe(d) == 1);

  MilnorEngine e(d, 5);
  CHECK(e.vanish_up_to(3));
  CHECK_FALSE(e.vanish_up_to(4));
  CHECK(e.first_nonvanishing(5) == 4);
  MilnorEntry m = e.mu({1, 1, 2, 2});
  CHECK(std::abs(m.value) == 1);
  CHECK(m.delta == 0);

  CHECK(e.refined_vanish({1, 1}));
  CHECK_FALSE(e.refined_vanish({2, 2}));
}

TEST_CASE("split links vanish at every computable length") {
  LinkDiagram d = parse_pd("PD[O[1], O[2], O[3]]");
  MilnorEngine e(d, 8);
  CHECK(e.vanish_up_to(8));
  CHECK(e.refined_vanish({3, 3, 2}));
}

TEST_CASE("deleting a component preserves vanishing") {
  LinkDiagram borromean = parse_br("BR[3, [1, -2, 1, -2, 1, -2]]");
  CHECK(mu_vanish_up_to(borromean, 2));
  for (int c = 0; c < 3; ++c) {
    LinkDiagram sub = delete_component(borromean, c);
    CHECK(mu_vanish_up_to(sub, 8));
  }
}

TEST_CASE("word and series routes agree below the nilpotence class") {
  for (const char* text :
       {"PD[X[1,3,2,4], X[3,1,4,2]]", "BR[2, [1, 1, 1]]",
        "BR[3, [1, -2, 1, -2, 1, -2]]", "PD[X[1,3,2,4], X[2,3,1,4]]",
        "BR[3, [1, 1, 2, 1, 1, -2, -1, -1, 2, -1, -1, -2]]"}) {
    LinkDiagram d = parse_link(text);
    for (int q = 2; q <= 4; ++q) check_word_series_agreement(d, q);
  }
  check_word_series_agreement(parse_br(kWhitehead), 5);
}

TEST_CASE("Borromean longitudes are commutators modulo class three") {
  LinkDiagram d = parse_br("BR[3, [1, -2, 1, -2, 1, -2]]");
  auto words = chen_milnor_longitudes(d, 3);
  TruncatedSeries s = magnus_expand(words[2], 2);
  CHECK(s.coeff({1}) == 0);
  CHECK(s.coeff({2}) == 0);
  CHECK(std::abs(s.coeff({1, 2})) == 1);
  CHECK(s.coeff({1, 2}) == -s.coeff({2, 1}));
}

TEST_CASE("first nonvanishing coefficients survive conjugation") {
  LinkDiagram d = parse_br("BR[3, [1, -2, 1, -2, 1, -2]]");
  auto words = chen_milnor_longitudes(d, 3);
  FreeWord conj = words[2].conjugated_by(parse_word("x1 x3^-1 x2"));
  TruncatedSeries a = magnus_expand(words[2], 2);
  TruncatedSeries b = magnus_expand(conj, 2);
  CHECK(a.coeff({1, 2}) == b.coeff({1, 2}));
  CHECK(a.coeff({2, 1}) == b.coeff({2, 1}));
}

TEST_CASE("tables enumerate indices by length then lexicographically") {
  LinkDiagram d = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  MilnorTable t = milnor_table(d, 3, "hopf");
  CHECK(t.link == "hopf");
  CHECK(t.entries.size() == 4 + 8);
  CHECK(t.entries[0].index == std::vector<int>{1, 1});
  CHECK(t.entries[1].index == std::vector<int>{1, 2});
  CHECK(t.entries[1].value == 1);
  CHECK(t.entries[4].index == std::vector<int>{1, 1, 1});
  // With linking number one, every mixed length-three invariant is dead
  // modulo delta = 1; single-component indices have no subinvariants at all.
  for (size_t i = 4; i < t.entries.size(); ++i) {
    const MilnorEntry& m = t.entries[i];
    bool mixed = false;
    for (int x : m.index)
      if (x != m.index[0]) mixed = true;
    CHECK(m.delta == (mixed ? 1 : 0));
    CHECK(m.value == 0);
  }
}

TEST_CASE("engine rejects malformed queries") {
  LinkDiagram d = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  MilnorEngine e(d, 4);
  CHECK_THROWS_AS(e.mu({1}), std::invalid_argument);
  CHECK_THROWS_AS(e.mu({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(e.mu({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(e.mu({1, 2, 1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(e.vanish_up_to(5), std::invalid_argument);
  CHECK_THROWS_AS(e.refined_vanish({1}), std::invalid_argument);
  CHECK_THROWS_AS(e.refined_vanish({4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(mu_vanish_up_to(d, 9, 8), std::invalid_argument);
  CHECK_THROWS_AS(chen_milnor_longitudes(d, 0), std::invalid_argument);
}
