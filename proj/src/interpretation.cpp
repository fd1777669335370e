#include "treealign/interpretation.hpp"

#include <algorithm>

namespace treealign {

unsigned interpretation_cost(std::span<const std::string> sigma, const Characteristics& c) {
  const std::size_t n = sigma.size();
  const bool overlap = c.has_start_end_overlap();

  if (n == 0) {
    if (c.accepts_empty) return 0;
    return overlap ? 1 : 2;
  }

  // Main branch: one start activity, alphabet activities, one end activity.
  // Indicator costs price the mismatching positions.
  unsigned best;
  if (n == 1) {
    best = (c.is_start(sigma[0]) ? 0u : 1u) + (c.is_end(sigma[0]) ? 0u : 1u);
  } else {
    best = (c.is_start(sigma.front()) ? 0u : 1u) + (c.is_end(sigma.back()) ? 0u : 1u);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (!c.in_alphabet(sigma[i])) ++best;
    }
  }

  // Deleting everything reaches the empty trace when accepted.
  if (c.accepts_empty) best = std::min(best, static_cast<unsigned>(n));

  // Editing down to a single activity that is both start and end. Only ever
  // cheaper than the main branch for |sigma| = 1.
  if (overlap) {
    bool hit = false;
    for (const auto& a : sigma) {
      if (c.is_start_and_end(a)) {
        hit = true;
        break;
      }
    }
    best = std::min(best, static_cast<unsigned>(n) - (hit ? 1u : 0u));
  }
  return best;
}

}  // namespace treealign
