#pragma once

#include <span>
#include <string>

#include "treealign/characteristics.hpp"
#include "treealign/trace.hpp"

namespace treealign {

// Minimal Levenshtein distance between sigma and the closest trace accepted
// by the most liberal interpretation of a subtree with characteristics c,
// evaluated in closed form. The interpretation accepts every trace that
// starts with a start activity, ends with an end activity and has arbitrary
// alphabet activities in between; additionally single activities that are
// both start and end, and the empty trace when the subtree accepts it.
unsigned interpretation_cost(std::span<const std::string> sigma, const Characteristics& c);

inline unsigned interpretation_cost(const Trace& sigma, const Characteristics& c) {
  return interpretation_cost(std::span<const std::string>(sigma), c);
}

}  // namespace treealign
