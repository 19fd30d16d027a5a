#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "linkcalc/alexander.hpp"
#include "linkcalc/braiding.hpp"
#include "linkcalc/laurent.hpp"
#include "linkcalc/moves.hpp"
#include "linkcalc/parse.hpp"
#include "linkcalc/seifert.hpp"

using namespace linkcalc;

namespace {

BraidWord word(int strands, std::vector<int> letters) {
  BraidWord w;
  w.strands = strands;
  w.letters = std::move(letters);
  return w;
}

BraidWord random_word(std::mt19937& rng, int min_strands, int max_strands,
                      int max_len) {
  int strands = min_strands + static_cast<int>(rng() % (max_strands - min_strands + 1));
  int len = static_cast<int>(rng() % (max_len + 1));
  BraidWord w;
  w.strands = strands;
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % (strands - 1));
    w.letters.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

// det(V - tV^T) must be a unit multiple of (t-1)^(m-1) * alexander_poly,
// the undivided first-ideal generator.
void check_det_identity(const LinkDiagram& d) {
  LaurentPoly lhs = seifert_poly(seifert_matrix(d));
  LaurentPoly rhs = alexander_poly(d);
  LaurentPoly tm1 = LaurentPoly::monomial(1, 1) - LaurentPoly(1);
  for (int i = 1; i < d.components(); ++i) rhs = rhs * tm1;
  if (rhs == LaurentPoly()) {
    CHECK(lhs == LaurentPoly());
  } else {
    CHECK(lhs.associate_of(rhs));
  }
}

}  // namespace

TEST_CASE("frozen matrices for the smallest closures") {
  SeifertData tre = seifert_matrix(word(2, {1, 1, 1}));
  CHECK(tre.matrix ==
        std::vector<std::vector<long long>>{{-1, 1}, {0, -1}});
  CHECK(tre.circles == 2);
  CHECK(tre.bands == 3);
  CHECK(tre.tubes == 0);
  CHECK(tre.boundary_components == 1);
  CHECK(tre.genus() == 1);

  SeifertData mir = seifert_matrix(word(2, {-1, -1, -1}));
  CHECK(mir.matrix == std::vector<std::vector<long long>>{{1, 0}, {-1, 1}});

  SeifertData hopf = seifert_matrix(word(2, {1, 1}));
  CHECK(hopf.matrix == std::vector<std::vector<long long>>{{-1}});
  CHECK(hopf.genus() == 0);

  SeifertData unknot = seifert_matrix(word(1, {}));
  CHECK(unknot.matrix.empty());
  CHECK(unknot.rank() == 0);
  CHECK(unknot.genus() == 0);
}

TEST_CASE("split closures get a tube per empty column") {
  // 2-strand identity braid: two nested circles, no band, one tube.
  SeifertData unlink = seifert_matrix(word(2, {}));
  CHECK(unlink.tubes == 1);
  CHECK(unlink.matrix == std::vector<std::vector<long long>>{{0}});
  CHECK(seifert_poly(unlink) == LaurentPoly());
  CHECK(signature(unlink) == 0);

  // Hopf link split from a trefoil: middle column empty.
  SeifertData split = seifert_matrix(word(4, {1, 1, 3, 3, 3}));
  CHECK(split.tubes == 1);
  CHECK(split.boundary_components == 3);
  CHECK(seifert_poly(split) == LaurentPoly());
  CHECK(signature(split) == signature(seifert_matrix(word(2, {1, 1}))) +
                                signature(seifert_matrix(word(2, {1, 1, 1}))));
}

TEST_CASE("signature anchors") {
  CHECK(signature(seifert_matrix(word(2, {1, 1, 1}))) == -2);
  CHECK(signature(seifert_matrix(word(2, {-1, -1, -1}))) == 2);
  CHECK(signature(seifert_matrix(word(2, {1, 1}))) == -1);
  CHECK(signature(seifert_matrix(word(3, {1, -2, 1, -2}))) == 0);
  CHECK(signature(seifert_matrix(word(2, {1, 1, 1, 1}))) == -3);
  CHECK(signature(seifert_matrix(word(2, {1, 1, 1, 1, 1, 1}))) == -5);
  CHECK(signature(seifert_matrix(word(3, {2, -1, 2, -1, 2}))) == -1);
  CHECK(signature(seifert_matrix(word(3, {1, -2, 1, -2, 1, -2}))) == 0);
  CHECK(signature(seifert_matrix(word(3, {1, 2, 1, 2, 1, 2}))) == -4);
  CHECK(signature(seifert_matrix(word(1, {}))) == 0);
}

TEST_CASE("mirror negates the signature") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord w = random_word(rng, 2, 4, 9);
    BraidWord m = w;
    for (int& l : m.letters) l = -l;
    CHECK(signature(seifert_matrix(w)) == -signature(seifert_matrix(m)));
  }
}

TEST_CASE("knot signatures are even") {
  std::mt19937 rng(6);
  int knots = 0;
  for (int trial = 0; trial < 200 && knots < 40; ++trial) {
    BraidWord w = random_word(rng, 2, 4, 9);
    SeifertData s = seifert_matrix(w);
    if (s.boundary_components != 1) continue;
    ++knots;
    CHECK(signature(s) % 2 == 0);
  }
  CHECK(knots == 40);
}

TEST_CASE("genus bookkeeping") {
  CHECK(seifert_matrix(word(2, {1, 1, 1})).genus() == 1);        // trefoil
  CHECK(seifert_matrix(word(3, {1, -2, 1, -2})).genus() == 1);   // figure 8
  CHECK(seifert_matrix(word(2, {1, 1, 1, 1})).genus() == 1);     // T(2,4)
  CHECK(seifert_matrix(word(2, {1, 1, 1, 1, 1})).genus() == 2);  // T(2,5)
  CHECK(seifert_matrix(word(2, {1, 1})).genus() == 0);           // hopf
  CHECK(seifert_matrix(word(2, {1, 1, 1, 1, 1, 1})).genus() == 2);
  CHECK(seifert_matrix(word(2, {})).genus() == 0);  // split unlink, tube
  SeifertData tre = seifert_matrix(word(2, {1, 1, 1}));
  CHECK(tre.rank() == 2);
  CHECK(tre.rank() == static_cast<int>(tre.matrix.size()));
}

TEST_CASE("determinant identity against the Fox route") {
  for (const char* br : {
           "BR[2, [1, 1, 1]]",
           "BR[2, [-1, -1, -1]]",
           "BR[2, [1, 1]]",
           "BR[2, [1, 1, 1, 1]]",
           "BR[2, [1, 1, 1, 1, 1, 1]]",
           "BR[3, [1, -2, 1, -2]]",
           "BR[3, [2, -1, 2, -1, 2]]",
           "BR[3, [1, -2, 1, -2, 1, -2]]",
           "BR[3, [1, 2, 1, 2, 1, 2]]",
           "BR[3, [1, 1, 2, 2]]",
           "BR[3, [1, 2, 2, 1]]",
           "BR[1, []]",
           "BR[2, []]",
       }) {
    CAPTURE(br);
    check_det_identity(parse_br(br));
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord w = random_word(rng, 2, 4, 8);
    check_det_identity(braid_closure(w));
  }
}

TEST_CASE("alexander determinant matches the symmetrised matrix") {
  // |delta(-1)| equals |det(V + V^T)| whenever the closure is a knot.
  std::mt19937 rng(7);
  int knots = 0;
  for (int trial = 0; trial < 200 && knots < 30; ++trial) {
    BraidWord w = random_word(rng, 2, 4, 9);
    SeifertData s = seifert_matrix(w);
    if (s.boundary_components != 1) continue;
    ++knots;
    LinkDiagram d = braid_closure(w);
    LaurentPoly delta = alexander_poly(d);
    long long det_sym = seifert_poly(s).evaluate(-1);
    long long at_minus_one = delta.evaluate(-1);
    CHECK(std::abs(at_minus_one) == std::abs(det_sym));
    // and the polynomial is reciprocal-symmetric
    CHECK(delta.associate_of(delta.reciprocal()));
  }
  CHECK(knots == 30);
}

TEST_CASE("seifert circles of a braid closure") {
  LinkDiagram tre = braid_closure(word(2, {1, 1, 1}));
  int n = 0;
  seifert_circles(tre, &n);
  CHECK(n == 2);
  CHECK(incoherent_pairs(tre) == 0);

  LinkDiagram fig8 = braid_closure(word(3, {1, -2, 1, -2}));
  seifert_circles(fig8, &n);
  CHECK(n == 3);
  CHECK(incoherent_pairs(fig8) == 0);
}

TEST_CASE("braid presentation read back from stripped closures") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    BraidWord w = random_word(rng, 2, 4, 8);
    LinkDiagram d = braid_closure(w);
    LaurentPoly alex = alexander_poly(d);
    int sig = signature(d);

    LinkDiagram stripped = d;
    stripped.clear_braid();
    BraidWord back = braid_presentation(stripped);
    LinkDiagram redrawn = braid_closure(back);

    CHECK(redrawn.components() == d.components());
    LaurentPoly alex2 = alexander_poly(redrawn);
    if (alex == LaurentPoly()) {
      CHECK(alex2 == LaurentPoly());
    } else {
      CHECK(alex.associate_of(alex2));
    }
    CHECK(signature(seifert_matrix(back)) == sig);
  }
}

TEST_CASE("braid presentation of hand-drawn diagrams") {
  LinkDiagram tre = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(total_writhe(tre) == -3);  // left-handed picture
  CHECK(signature(tre) == 2);
  CHECK(seifert_matrix(tre).genus() == 1);

  LinkDiagram hopf = parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]");
  CHECK(linking_number(hopf, 0, 1) == 1);
  CHECK(signature(hopf) == -1);

  LinkDiagram wh = parse_pd(
      "PD[X[7,5,8,4],X[1,8,2,9],X[5,3,6,2],X[9,6,10,1],X[3,7,4,10]]");
  CHECK(wh.components() == 2);
  LaurentPoly sq = (LaurentPoly::monomial(1, 1) - LaurentPoly(1)) *
                   (LaurentPoly::monomial(1, 1) - LaurentPoly(1));
  CHECK(alexander_poly(wh).associate_of(sq));
  CHECK(signature(wh) == -1);
  check_det_identity(wh);

  // r2-reducible unlink picture braids to two clean strands
  LinkDiagram unl = parse_pd("PD[X[1,3,2,4],X[2,3,1,4]]");
  CHECK(unl.components() == 2);
  BraidWord w = braid_presentation(unl);
  LinkDiagram redrawn = braid_closure(w);
  CHECK(redrawn.components() == 2);
  CHECK(alexander_poly(redrawn) == LaurentPoly());
}

TEST_CASE("invariants survive diagram noise") {
  std::mt19937 rng(31);
  int done = 0;
  for (int trial = 0; trial < 120 && done < 20; ++trial) {
    BraidWord w = random_word(rng, 2, 3, 6);
    if (w.letters.empty()) continue;
    LinkDiagram d = braid_closure(w);
    LaurentPoly alex = alexander_poly(d);
    int sig = signature(d);

    LinkDiagram noisy = d;
    noisy.clear_braid();
    bool noised = false;
    int steps = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < steps; ++s) {
      if (rng() % 2) {
        int e = static_cast<int>(rng() % noisy.edge_count());
        noisy = r1_kink(noisy, e, rng() % 2 ? 1 : -1);
        noised = true;
      } else {
        int a = static_cast<int>(rng() % noisy.edge_count());
        int b = static_cast<int>(rng() % noisy.edge_count());
        try {
          auto pushes = r2_pushes(noisy, a, b);
          if (!pushes.empty()) {
            noisy = pushes[rng() % pushes.size()];
            noised = true;
          }
        } catch (const std::exception&) {
          // the two edges share no face; fine, try another pair
        }
      }
    }
    if (!noised) continue;
    ++done;

    BraidWord back = braid_presentation(noisy);
    LinkDiagram redrawn = braid_closure(back);
    CHECK(redrawn.components() == d.components());
    LaurentPoly alex2 = alexander_poly(redrawn);
    if (alex == LaurentPoly()) {
      CHECK(alex2 == LaurentPoly());
    } else {
      CHECK(alex.associate_of(alex2));
    }
    CHECK(signature(seifert_matrix(back)) == sig);
  }
  CHECK(done == 20);
}

TEST_CASE("banding distance bounds") {
  G4Bounds b0 = g4_bounds_from_c(0);
  CHECK(b0.lower_num == 0);
  CHECK(b0.lower_den == 1);
  CHECK(b0.upper == 0);

  G4Bounds b4 = g4_bounds_from_c(4);
  CHECK(b4.lower_num == 2);
  CHECK(b4.lower_den == 1);
  CHECK(b4.upper == 4);

  G4Bounds b3 = g4_bounds_from_c(3);
  CHECK(b3.lower_num == 3);
  CHECK(b3.lower_den == 2);
  CHECK(b3.upper == 3);

  CHECK_THROWS_AS(g4_bounds_from_c(-1), std::invalid_argument);
}

TEST_CASE("braid letters outside the strand range are rejected") {
  CHECK_THROWS_AS(seifert_matrix(word(2, {2})), std::invalid_argument);
  CHECK_THROWS_AS(seifert_matrix(word(3, {0})), std::invalid_argument);
  CHECK_THROWS_AS(seifert_matrix(word(0, {})), std::invalid_argument);
}
