#pragma once

#include <vector>

#include "linkcalc/string_link.hpp"

namespace linkcalc {

/// Remove one strand; crossings it participated in are spliced through.
StringLinkDiagram delete_strand(const StringLinkDiagram& j, int strand);

/// Braid word for `turns` full twists on `strands` parallel strands,
/// one full twist being (sigma_1 ... sigma_{s-1})^s. Negative turns give
/// the inverse word.
std::vector<int> full_twist_word(int strands, int turns);

/// Replace strand t by widths[t] parallel copies with framing zero: the
/// blackboard parallel plus -self_writhe(t) full twists at the bottom of
/// each bundle. Width 0 deletes the strand, width 1 leaves it alone.
/// Copy k of strand t becomes strand (sum of earlier widths) + k; copies
/// are ordered left to right at the boundary.
StringLinkDiagram cable_strands(const StringLinkDiagram& j,
                                const std::vector<int>& widths);

}  // namespace linkcalc
