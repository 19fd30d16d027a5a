#pragma once

#include <map>
#include <utility>
#include <vector>

namespace linkcalc {

/// Intersection counts of a system of immersed disks, attested by the user:
/// self[i] self-intersections of disk i+1 and mixed[{i,j}] intersections
/// between disks i and j (1-based, i < j). The total c feeds the length
/// thresholds.
struct IntersectionLedger {
  int r = 0;
  std::vector<long long> self;
  std::map<std::pair<int, int>, long long> mixed;

  long long c() const;
  /// Throws std::invalid_argument when the shape is off: r < 1, self size
  /// not r, negative counts, or a pair outside 1 <= i < j <= r.
  void validate() const;
};

/// Length threshold c + r.
long long required_length_thm14(const IntersectionLedger& ledger);

/// Length threshold 2c.
long long required_length_thm15(const IntersectionLedger& ledger);

inline constexpr long long kDefaultChoiceCap = 4096;

/// All occurrence-bound vectors (l_1, ..., l_r) reachable by starting from
/// all ones, adding each self-intersection of disk i to l_i, and assigning
/// each mixed intersection of disks {i, j} to either l_i or l_j. Sorted,
/// deduplicated; every vector sums to r + c. Throws std::runtime_error when
/// the number of distinct vectors would exceed the cap.
std::vector<std::vector<long long>> refined_bounds_choices(
    const IntersectionLedger& ledger, long long cap = kDefaultChoiceCap);

}  // namespace linkcalc
