#pragma once

#include <string>

#include "linkcalc/link_diagram.hpp"

namespace linkcalc {

/// Dispatch on the leading tag: PD[...], BR[...], or DT[...].
LinkDiagram parse_link(const std::string& text);

/// PD[X[a,b,c,d], ..., O[e], ...]. Corner tuples are counterclockwise with
/// the incoming under-strand first; O[e] is a crossing-free loop. Each edge
/// id must appear exactly twice among the X entries (never for O entries).
LinkDiagram parse_pd(const std::string& text);

/// BR[s, [i1, i2, ...]]: closure of the braid word, letter k standing for
/// sigma_|k|^(sign k) on s strands.
LinkDiagram parse_br(const std::string& text);

/// DT[a1, ..., an]: knots only. Realizes the code by search; throws
/// "non-planar or unclosable code" when no planar diagram fits. The two
/// mirror realizations are not distinguished.
LinkDiagram parse_dt(const std::string& text);

LinkDiagram braid_closure(const BraidWord& w);

std::string to_pd_text(const LinkDiagram& d);
std::string to_br_text(const BraidWord& w);

}  // namespace linkcalc
