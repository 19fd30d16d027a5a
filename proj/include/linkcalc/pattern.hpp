#pragma once

#include <string>
#include <vector>

#include "linkcalc/link_diagram.hpp"
#include "linkcalc/string_link.hpp"

namespace linkcalc {

/// One passage of the link through an infection disk: the edge that is
/// cut and the direction of the passage relative to the disk (+1 with the
/// infection strand's own orientation, -1 against it).
struct SiteEntry {
  int edge = -1;
  int dir = 1;
};

/// An embedded disk in the link complement. The entries list the cut
/// points in order along the disk; an edge may be cut several times by
/// one site (cut points taken in listing order along the edge's
/// orientation), but no edge may be shared between two sites.
struct InfectionSite {
  std::vector<SiteEntry> entries;
};

/// A link together with one disk per strand of the infecting string link.
struct MultiDiskPattern {
  LinkDiagram link;
  std::vector<InfectionSite> sites;
};

/// Infection: strand t of j is cabled to |sites[t].entries| zero-framed
/// parallel copies and spliced into the cuts of site t, copy k through
/// entry k. Component labels are inherited from the pattern, so component
/// i of the result corresponds to component i of pattern.link. A site
/// with no entries deletes its strand. Throws if the spliced diagram is
/// not planar (the sites do not describe flat disks).
LinkDiagram multi_infect(const MultiDiskPattern& pat, const StringLinkDiagram& j);

}  // namespace linkcalc
