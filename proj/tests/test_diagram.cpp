#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "linkcalc/link_diagram.hpp"
#include "linkcalc/parse.hpp"
#include "linkcalc/string_link.hpp"

using namespace linkcalc;

TEST_CASE("positive Hopf link from PD") {
  LinkDiagram d = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  CHECK(d.components() == 2);
  CHECK(d.edge_count() == 4);
  REQUIRE(d.crossings().size() == 2);
  CHECK(d.crossings()[0].sign == 1);
  CHECK(d.crossings()[1].sign == 1);
  CHECK(linking_number(d, 0, 1) == 1);
  CHECK(linking_number(d, 1, 0) == 1);
  CHECK(total_writhe(d) == 2);
  CHECK(writhe(d, 0) == 0);
  CHECK(writhe(d, 1) == 0);
}

TEST_CASE("table trefoil is the negative one") {
  LinkDiagram d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
  CHECK(d.components() == 1);
  CHECK(d.edge_count() == 6);
  CHECK(total_writhe(d) == -3);
  for (const Crossing& x : d.crossings()) CHECK(x.sign == -1);
}

TEST_CASE("braid closures") {
  LinkDiagram tref = parse_br("BR[2, [1, 1, 1]]");
  CHECK(tref.components() == 1);
  CHECK(total_writhe(tref) == 3);
  CHECK(tref.braid().has_value());
  CHECK(tref.braid()->strands == 2);

  LinkDiagram hopf = parse_br("BR[2, [1, 1]]");
  CHECK(hopf.components() == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);

  LinkDiagram borromean = parse_br("BR[3, [1, -2, 1, -2, 1, -2]]");
  CHECK(borromean.components() == 3);
  CHECK(total_writhe(borromean) == 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(linking_number(borromean, i, j) == 0);

  LinkDiagram unlink = parse_br("BR[3, []]");
  CHECK(unlink.components() == 3);
  CHECK(unlink.crossings().empty());
  for (int e = 0; e < 3; ++e) CHECK(unlink.is_free_loop(e));

  CHECK_THROWS_AS(parse_br("BR[2, [2]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_br("BR[2, [0]]"), std::invalid_argument);
}

TEST_CASE("crossing-free unknot") {
  LinkDiagram d = parse_pd("PD[O[1]]");
  CHECK(d.components() == 1);
  CHECK(d.edge_count() == 1);
  CHECK(d.is_free_loop(0));
  CHECK(to_pd_text(d) == "PD[O[1]]");
}

TEST_CASE("single kink") {
  LinkDiagram d = parse_pd("PD[X[1,1,2,2]]");
  CHECK(d.components() == 1);
  CHECK(total_writhe(d) == 1);
}

TEST_CASE("component passing over twice carries no linking") {
  LinkDiagram d = parse_pd("PD[X[1,3,2,4], X[2,3,1,4]]");
  CHECK(d.components() == 2);
  CHECK(linking_number(d, 0, 1) == 0);
  std::multiset<int> signs;
  for (const Crossing& x : d.crossings()) signs.insert(x.sign);
  CHECK(signs == std::multiset<int>{-1, 1});
}

TEST_CASE("nonplanar data is rejected") {
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,1,2]]"), std::runtime_error);
}

TEST_CASE("degree errors are rejected") {
  CHECK_THROWS(parse_pd("PD[X[1,2,3,4]]"));
  CHECK_THROWS(parse_pd("PD[X[1,1,1,1]]"));
  CHECK_THROWS(parse_pd("PD[X[1,3,2,4], X[3,1,4,2], O[3]]"));
}

TEST_CASE("mirror flips signs and linking") {
  LinkDiagram tref = parse_br("BR[2, [1, 1, 1]]");
  LinkDiagram m = mirror(tref);
  CHECK(total_writhe(m) == -3);
  CHECK(m.braid().has_value());
  CHECK(total_writhe(mirror(m)) == 3);

  LinkDiagram hopf = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  CHECK(linking_number(mirror(hopf), 0, 1) == -1);
}

TEST_CASE("component deletion") {
  LinkDiagram hopf = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  LinkDiagram u = delete_component(hopf, 0);
  CHECK(u.components() == 1);
  CHECK(u.crossings().empty());
  CHECK(u.is_free_loop(0));

  LinkDiagram borromean = parse_br("BR[3, [1, -2, 1, -2, 1, -2]]");
  for (int k = 0; k < 3; ++k) {
    LinkDiagram two = delete_component(borromean, k);
    CHECK(two.components() == 2);
    CHECK(two.crossings().size() == 2);
    CHECK(linking_number(two, 0, 1) == 0);
  }

  CHECK_THROWS_AS(delete_component(parse_pd("PD[O[1]]"), 0),
                  std::runtime_error);
}

TEST_CASE("planar text round trip") {
  for (const char* text :
       {"PD[X[1,3,2,4], X[3,1,4,2]]", "BR[2, [1, 1, 1]]",
        "BR[3, [1, -2, 1, -2, 1, -2]]", "PD[X[1,1,2,2]]"}) {
    LinkDiagram d = parse_link(text);
    LinkDiagram back = parse_link(to_pd_text(d));
    CHECK(back.components() == d.components());
    CHECK(back.crossings().size() == d.crossings().size());
    CHECK(total_writhe(back) == total_writhe(d));
    CHECK(linking_matrix(back) == linking_matrix(d));
    CHECK(to_pd_text(back) == to_pd_text(d));
  }
}

TEST_CASE("edge traversal order") {
  LinkDiagram tref = parse_br("BR[2, [1, 1, 1]]");
  int e = 0;
  std::set<int> seen;
  for (int i = 0; i < tref.edge_count(); ++i) {
    seen.insert(e);
    e = tref.next_edge(e);
  }
  CHECK(e == 0);
  CHECK(static_cast<int>(seen.size()) == tref.edge_count());
}

TEST_CASE("faces of the combinatorial map") {
  LinkDiagram hopf = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  std::vector<std::array<int, 4>> t;
  for (const Crossing& x : hopf.crossings()) t.push_back(x.edge);
  CHECK(detail::quadrant_faces(t).size() == 4);

  LinkDiagram tref = parse_br("BR[2, [1, 1, 1]]");
  t.clear();
  for (const Crossing& x : tref.crossings()) t.push_back(x.edge);
  CHECK(detail::quadrant_faces(t).size() == 5);
}

TEST_CASE("DT codes for knots") {
  LinkDiagram tref = parse_dt("DT[4, 6, 2]");
  CHECK(tref.components() == 1);
  CHECK(tref.crossings().size() == 3);
  CHECK(std::abs(total_writhe(tref)) == 3);

  LinkDiagram fig8 = parse_dt("DT[4, 6, 8, 2]");
  CHECK(fig8.components() == 1);
  CHECK(fig8.crossings().size() == 4);
  CHECK(total_writhe(fig8) == 0);

  LinkDiagram doubled_kink = parse_dt("DT[2, 4]");
  CHECK(doubled_kink.components() == 1);
  CHECK(doubled_kink.crossings().size() == 2);

  CHECK_THROWS_AS(parse_dt("DT[3, 6, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dt("DT[4, 4, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dt("DT[4, 6, 2, 8, 10, 12, 14, 16, 18, 20, 22, 24, "
                           "26, 28, 30, 32, 34]"),
                  std::invalid_argument);
}

TEST_CASE("string links") {
  StringLinkDiagram j = parse_string_link("BR[2, [1, 1]]");
  CHECK(j.strands() == 2);
  CHECK(j.crossings().size() == 2);
  CHECK(strand_linking(j, 0, 1) == 1);
  CHECK(j.self_writhe(0) == 0);

  LinkDiagram hopf = j.closure();
  CHECK(hopf.components() == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);

  StringLinkDiagram back = parse_sl(j.text());
  CHECK(back.strands() == 2);
  CHECK(back.crossings().size() == 2);
  CHECK(strand_linking(back, 0, 1) == 1);
  CHECK(back.text() == j.text());

  // sigma_1 alone permutes the endpoints.
  CHECK_THROWS_AS(parse_string_link("BR[2, [1]]"), std::invalid_argument);

  StringLinkDiagram trivial = parse_string_link("BR[3, []]");
  CHECK(trivial.strands() == 3);
  CHECK(trivial.closure().components() == 3);
  CHECK(pairwise_linking_zero(trivial));

  // A positive kink followed by a negative one.
  StringLinkDiagram kinks =
      parse_sl("SL[1, bottom=[1], top=[5], X[1,3,2,2], X[3,4,4,5]]");
  CHECK(kinks.strands() == 1);
  CHECK(kinks.crossings().size() == 2);
  CHECK(kinks.self_writhe(0) == 0);
  CHECK(parse_sl("SL[1, bottom=[1], top=[3], X[1,3,2,2]]").self_writhe(0) == 1);
}

TEST_CASE("pure braid commutator has zero pairwise linking") {
  // [A12, A13] written in band generators sigma_i.
  StringLinkDiagram j = parse_string_link(
      "BR[3, [1, 1, 2, 1, 1, -2, -1, -1, 2, -1, -1, -2]]");
  CHECK(j.strands() == 3);
  CHECK(pairwise_linking_zero(j));
}
