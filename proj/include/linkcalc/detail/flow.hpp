#pragma once

#include <array>
#include <deque>
#include <map>
#include <utility>
#include <vector>

// Shared direction-propagation machinery for assembling diagrams and
// string links out of raw counterclockwise corner tuples (under-strand at
// positions 0 and 2, flow not yet determined).

namespace linkcalc::detail {

using Occ = std::map<int, std::vector<std::pair<int, int>>>;

Occ occurrence_table(const std::vector<std::array<int, 4>>& crossings);

// Per crossing: u = corner where the under-strand enters (0 or 2),
// o = corner where the over-strand enters (1 or 3), -1 unknown.
struct FlowState {
  std::vector<int> u, o;
};

// Breadth-first constraint propagation along strands. Throws on conflict.
void propagate_flows(const std::vector<std::array<int, 4>>& crossings,
                     const Occ& occ, FlowState& st,
                     std::deque<std::pair<int, char>>& work);

bool edge_direction_known(const Occ& occ, const FlowState& st, int e);

// Cyclic curve through e0 (every edge of the curve has degree 2).
std::vector<int> trace_curve(const std::vector<std::array<int, 4>>& crossings,
                             const Occ& occ, const FlowState& st, int e0);

// Open strand starting at boundary edge e0, following flow until an edge
// with no head among the crossings (a top boundary edge).
std::vector<int> trace_strand(const std::vector<std::array<int, 4>>& crossings,
                              const Occ& occ, const FlowState& st, int e0);

}  // namespace linkcalc::detail
