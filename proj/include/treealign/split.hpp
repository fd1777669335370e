#pragma once

#include <vector>

#include "treealign/characteristics.hpp"
#include "treealign/trace.hpp"
#include "treealign/tree.hpp"

namespace treealign {

struct SplitPart {
  Trace sub_trace;
  int child;  // 1 or 2
};

// Ordered trace splitting/assignment for the children of an operator node.
// Shape per operator: xor one part; seq two parts in child order with
// concatenation preserved; and two complementary subsequences (one per
// child); loop an odd number of contiguous parts alternating 1,2,1,...,1.
struct SplitAssignment {
  std::vector<SplitPart> parts;
  unsigned objective{0};  // summed interpretation cost of the parts
  // For the and-operator: owning child (1/2) per trace position.
  std::vector<int> owners;
};

// `chars` is the node-indexed characteristics table of `tree`; `v` is the
// operator node being split. Each splitter minimizes the summed
// interpretation cost over all valid splittings of its shape, exactly.
// Tie-breaks: xor prefers child 1; seq the leftmost split position; and
// child 1 per position scanning left to right; loop fewest segments, then
// leftmost cuts.
SplitAssignment split_xor(const Trace& sigma, const ProcessTree& tree, int v,
                          const std::vector<Characteristics>& chars);
SplitAssignment split_seq(const Trace& sigma, const ProcessTree& tree, int v,
                          const std::vector<Characteristics>& chars);
SplitAssignment split_and(const Trace& sigma, const ProcessTree& tree, int v,
                          const std::vector<Characteristics>& chars);
SplitAssignment split_loop(const Trace& sigma, const ProcessTree& tree, int v,
                           const std::vector<Characteristics>& chars);

// Dispatch on the operator of node v.
SplitAssignment split_trace(const Trace& sigma, const ProcessTree& tree, int v,
                            const std::vector<Characteristics>& chars);

}  // namespace treealign
