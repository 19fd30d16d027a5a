#include "linkcalc/ledger.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linkcalc {

long long IntersectionLedger::c() const {
  long long total = 0;
  for (long long s : self) total += s;
  for (const auto& [pair, count] : mixed) total += count;
  return total;
}

void IntersectionLedger::validate() const {
  if (r < 1) throw std::invalid_argument("ledger needs at least one disk");
  if (static_cast<int>(self.size()) != r)
    throw std::invalid_argument("self-intersection list does not match disk count");
  for (long long s : self)
    if (s < 0) throw std::invalid_argument("negative self-intersection count");
  for (const auto& [pair, count] : mixed) {
    auto [i, j] = pair;
    if (i < 1 || j <= i || j > r)
      throw std::invalid_argument("mixed pair {" + std::to_string(i) + "," +
                                  std::to_string(j) + "} out of range");
    if (count < 0) throw std::invalid_argument("negative mixed intersection count");
  }
}

long long required_length_thm14(const IntersectionLedger& ledger) {
  ledger.validate();
  return ledger.c() + ledger.r;
}

long long required_length_thm15(const IntersectionLedger& ledger) {
  ledger.validate();
  return 2 * ledger.c();
}

std::vector<std::vector<long long>> refined_bounds_choices(
    const IntersectionLedger& ledger, long long cap) {
  ledger.validate();
  std::vector<long long> base(ledger.r, 1);
  for (int i = 0; i < ledger.r; ++i) base[i] += ledger.self[i];

  // Only the split of each pair's count matters, so enumerate per pair how
  // many of its intersections land on the first disk. The distinct-vector
  // count is the product of (count + 1) over pairs, checked against the cap
  // before anything is built.
  long long distinct = 1;
  for (const auto& [pair, count] : ledger.mixed) {
    if (count == 0) continue;
    if (count + 1 > cap || (distinct *= count + 1) > cap)
      throw std::runtime_error("refined choice enumeration exceeds cap of " +
                               std::to_string(cap) + " vectors");
  }

  std::vector<std::vector<long long>> out = {base};
  for (const auto& [pair, count] : ledger.mixed) {
    if (count == 0) continue;
    auto [i, j] = pair;
    std::vector<std::vector<long long>> next;
    next.reserve(out.size() * (count + 1));
    for (const auto& v : out)
      for (long long to_i = 0; to_i <= count; ++to_i) {
        std::vector<long long> w = v;
        w[i - 1] += to_i;
        w[j - 1] += count - to_i;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace linkcalc
