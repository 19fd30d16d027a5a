#pragma once

#include <vector>

#include "linkcalc/link_diagram.hpp"

namespace linkcalc {

/// Insert a curl on edge e (writhe changes by sign, the link type does not).
LinkDiagram r1_kink(const LinkDiagram& d, int e, int sign);

/// All planar ways to push edge a across a face and over edge b, creating
/// one positive and one negative crossing between them. Candidates differ
/// in which end of b meets the new over-arc first and in which of the two
/// crossings is the positive one; gluings that do not embed in the sphere
/// are dropped.
std::vector<LinkDiagram> r2_pushes(const LinkDiagram& d, int a, int b);

/// First result of r2_pushes, or throws std::runtime_error if the arcs do
/// not share a face along which the push closes up.
LinkDiagram r2_push(const LinkDiagram& d, int a, int b);

}  // namespace linkcalc
