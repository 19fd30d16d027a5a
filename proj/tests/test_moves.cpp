#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "linkcalc/moves.hpp"
#include "linkcalc/parse.hpp"

using namespace linkcalc;

TEST_CASE("curl on a round circle") {
  LinkDiagram u = parse_pd("PD[O[1]]");
  LinkDiagram plus = r1_kink(u, 0, 1);
  CHECK(plus.components() == 1);
  CHECK(total_writhe(plus) == 1);
  CHECK(to_pd_text(plus) == "PD[X[1,1,2,2]]");
  LinkDiagram minus = r1_kink(u, 0, -1);
  CHECK(total_writhe(minus) == -1);
  CHECK(to_pd_text(minus) == "PD[X[1,2,2,1]]");
}

TEST_CASE("curls adjust writhe and nothing else") {
  LinkDiagram hopf = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  for (int e = 0; e < hopf.edge_count(); ++e) {
    for (int s = -1; s <= 1; s += 2) {
      LinkDiagram k = r1_kink(hopf, e, s);
      CHECK(k.components() == 2);
      CHECK(k.crossings().size() == 3);
      CHECK(total_writhe(k) == total_writhe(hopf) + s);
      CHECK(linking_matrix(k) == linking_matrix(hopf));
    }
  }
  LinkDiagram tref = parse_br("BR[2, [1, 1, 1]]");
  LinkDiagram twice = r1_kink(r1_kink(tref, 0, -1), 0, -1);
  CHECK(twice.components() == 1);
  CHECK(total_writhe(twice) == 1);
}

TEST_CASE("poking one circle over another") {
  LinkDiagram unlink = parse_pd("PD[O[1], O[2]]");
  std::vector<LinkDiagram> pokes = r2_pushes(unlink, 0, 1);
  REQUIRE(!pokes.empty());
  for (const LinkDiagram& p : pokes) {
    CHECK(p.components() == 2);
    CHECK(p.crossings().size() == 2);
    CHECK(total_writhe(p) == 0);
    CHECK(linking_number(p, 0, 1) == 0);
    CHECK(p.crossings()[0].sign + p.crossings()[1].sign == 0);
  }
}

TEST_CASE("pushing across a clasp face") {
  LinkDiagram hopf = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  // Every face of the clasp is a bigon with one arc of each circle, so the
  // two arcs of one circle have no face in common.
  CHECK(r2_pushes(hopf, 0, 1).empty());
  LinkDiagram pushed = r2_push(hopf, 0, 2);
  CHECK(pushed.components() == 2);
  CHECK(pushed.crossings().size() == 4);
  CHECK(total_writhe(pushed) == total_writhe(hopf));
  CHECK(linking_number(pushed, 0, 1) == linking_number(hopf, 0, 1));
}

TEST_CASE("push move rejects bad arguments") {
  LinkDiagram u = parse_pd("PD[O[1]]");
  CHECK_THROWS_AS(r2_pushes(u, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(r2_pushes(u, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(r1_kink(u, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(r1_kink(u, 3, 1), std::invalid_argument);
}
