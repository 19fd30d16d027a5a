#include <cstdio>
#include <vector>

#include "linkcalc/alexander.hpp"
#include "linkcalc/family.hpp"
#include "linkcalc/milnor.hpp"
#include "linkcalc/moves.hpp"
#include "linkcalc/parse.hpp"
#include "linkcalc/seifert.hpp"

using namespace linkcalc;

static int fails = 0;

static void check(bool ok, const char* what) {
  std::printf("%s  %s\n", ok ? "pass" : "FAIL", what);
  if (!ok) ++fails;
}

static bool unit_alex(const LinkDiagram& d) {
  return alexander_poly(d).associate_of(LaurentPoly(1));
}

int main() {
  // 1. doubles of unknots stay unknots
  LinkDiagram u0 = parse_link("PD[]");  // hmm: free loop unknot
  (void)u0;
  LinkDiagram kp = braid_closure(BraidWord{2, {1, 1, -1}});  // unknot, w +1? no
  // kinked unknots via r1 on a crossingless loop is not available; use braids
  LinkDiagram tref = braid_closure(BraidWord{2, {1, 1, 1}});
  LinkDiagram fig8 = braid_closure(BraidWord{3, {1, -2, 1, -2}});
  for (int clasp : {1, -1}) {
    check(unit_alex(whitehead_double(tref, 0, clasp)),
          clasp > 0 ? "trefoil double clasp+ alex 1" : "trefoil double clasp- alex 1");
    check(unit_alex(whitehead_double(fig8, 0, clasp)),
          clasp > 0 ? "fig8 double clasp+ alex 1" : "fig8 double clasp- alex 1");
  }
  check(signature(whitehead_double(tref, 0, 1)) == 0, "trefoil double sig 0");

  // 2. hopf double = whitehead link, both components, both chiralities
  for (int word : {1, -1}) {
    LinkDiagram hopf = braid_closure(BraidWord{2, {word, word}});
    for (int comp : {0, 1}) {
      LinkDiagram d = whitehead_double(hopf, comp, 1);
      MilnorEngine e(d, 5);
      char buf[80];
      std::snprintf(buf, sizeof buf, "W(hopf %+d, comp %d): first==4", word, comp);
      check(e.first_nonvanishing(5) == 4, buf);
      int a = comp == 0 ? 2 : 1, b = comp == 0 ? 1 : 2;
      auto m = e.mu({a, a, b, b});
      std::snprintf(buf, sizeof buf, "W(hopf %+d, comp %d): |mu(aabb)|==1", word, comp);
      check(m.delta == 0 && (m.value == 1 || m.value == -1), buf);
    }
  }

  // 3. R2 probes stay trivial
  {
    LinkDiagram un2 = parse_link("PD[]");
    // build 2-component unlink from braid: sigma_1 sigma_1^{-1}
    LinkDiagram unl = braid_closure(BraidWord{2, {1, -1}});
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 2}, {2, 0}}) {
      LinkDiagram pushed = r2_push(unl, a, b);
      LinkDiagram d = whitehead_double(pushed, 1, 1);
      MilnorEngine e(d, 5);
      check(e.vanish_up_to(5), "R2 probe double vanishes through 5");
    }
    (void)un2;
  }

  // 4. bing(hopf) = borromean rings
  {
    LinkDiagram hopf = braid_closure(BraidWord{2, {1, 1}});
    LinkDiagram d = bing_double(hopf, 1, 1);
    check(linking_matrix_zero(d), "bing(hopf) lk zero");
    MilnorEngine e(d, 4);
    check(e.first_nonvanishing(4) == 3, "bing(hopf) first==3");
    auto m = e.mu({1, 2, 3});
    check(m.delta == 0 && (m.value == 1 || m.value == -1), "bing(hopf) |mu(123)|==1");
  }

  // 5. bing(unknot) = 2-unlink
  {
    LinkDiagram unk = braid_closure(BraidWord{2, {1, 1, -1}});
    // closure of sigma sigma sigma^-1 = unknot with writhe +1: 2 comps? no.
    // perm of {1,1,-1} = transposition: 1 component, good.
    LinkDiagram d = bing_double(unk, 0, 1);
    MilnorEngine e(d, 5);
    check(d.components() == 2 && e.vanish_up_to(5), "bing(kinked unknot) unlink");
  }

  std::printf("== %d failures ==\n", fails);
  return fails;
}
