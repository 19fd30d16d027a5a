#pragma once

#include <string>
#include <vector>

#include "linkcalc/link_diagram.hpp"
#include "linkcalc/string_link.hpp"

namespace linkcalc {

/// Untwisted Whitehead double of one component: the component is replaced by
/// two antiparallel zero-framed parallel copies joined by a clasp of the
/// given sign. Kinks of the doubled component are compensated by inserting
/// |writhe| twists between the copies, so the framing is the Seifert framing.
/// The doubled curve keeps the component's index; the other components are
/// untouched.
LinkDiagram whitehead_double(const LinkDiagram& d, int component,
                             int clasp_sign = 1);

/// Untwisted Bing double: same two parallel copies, but joined by two clasps
/// of opposite signs, which splits the satellite into two curves. The curve
/// running along both full copies keeps the component's index; the short
/// curve between the clasps becomes the last component.
LinkDiagram bing_double(const LinkDiagram& d, int component,
                        int clasp_sign = 1);

/// Cut a closed diagram open into a string link, one cut edge per component
/// (cut_edges[i] must lie on component i). Strand i of the result is
/// component i, and closure() restores the diagram up to edge renumbering.
StringLinkDiagram cut_open(const LinkDiagram& d,
                           const std::vector<int>& cut_edges);

/// cut_open at the first edge of every component.
StringLinkDiagram cut_open(const LinkDiagram& d);

/// One member of an iterated-doubling family, together with the invariant
/// bookkeeping computed from its closure.
struct FamilyResult {
  std::string kind;
  int level = 0;
  StringLinkDiagram j;
  LinkDiagram closure;
  int strands = 0;
  bool linking_matrix_zero = false;
  int degree_cap = 8;
  // Milnor invariants of the closure vanish for all lengths <= vanish_through.
  int vanish_through = 0;
  // Smallest length with a nonzero invariant, or 0 if none up to degree_cap.
  int first_nonvanishing = 0;
  // True when the search hit degree_cap without finding a nonzero invariant.
  bool cap_hit = false;
};

/// Builds level k of a doubling family and measures it.
///   "whitehead-iterate": start from the Hopf link and Whitehead-double the
///     second component k times (level 0 is the Hopf link itself).
///   "bing-style": start from the Hopf link and Bing-double the newest
///     component k times (level 1 gives the Borromean rings).
/// The crossing count grows geometrically with the level.
FamilyResult gen_family(const std::string& kind, int level, int degree_cap = 8);

}  // namespace linkcalc
