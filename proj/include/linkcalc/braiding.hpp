#pragma once

#include <vector>

#include "linkcalc/link_diagram.hpp"

namespace linkcalc {

/// Seifert circle id of every edge under the orientation-respecting
/// smoothing: the incoming under-strand continues into the outgoing
/// over-strand. Ids are dense starting at 0; a free loop is a circle of its
/// own. The number of circles lands in *count when given.
std::vector<int> seifert_circles(const LinkDiagram& d, int* count = nullptr);

/// Number of unordered pairs of distinct Seifert circles that run the same
/// way along some common face. Zero exactly when every connected piece of
/// the diagram is a stack of coherently nested annuli, i.e. braid position.
int incoherent_pairs(const LinkDiagram& d);

/// A braid word whose closure is the link of d. The word the diagram was
/// built from is reused when present; otherwise incoherent faces are
/// removed by writhe-neutral pushes of one arc across another and the word
/// is read off the nested result. Split pieces stack onto disjoint strand
/// ranges, so some columns may carry no letter.
BraidWord braid_presentation(const LinkDiagram& d);

}  // namespace linkcalc
