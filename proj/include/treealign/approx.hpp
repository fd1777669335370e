#pragma once

#include "treealign/align.hpp"
#include "treealign/characteristics.hpp"
#include "treealign/split.hpp"
#include "treealign/trace.hpp"
#include "treealign/tree.hpp"

namespace treealign {

// Recursion thresholds: at or below either bound the exact aligner is used.
struct ApproxParams {
  unsigned max_trace_length{1};  // TL >= 1
  unsigned max_tree_height{1};   // TH >= 1
};

// Reassembles child sub-alignments into an alignment for the operator node v.
// xor returns the single sub-alignment, seq and loop concatenate in part
// order, and interleaves by scanning sigma and emitting from the owning
// child's alignment through the move that explains each activity, then
// appending both remainders. Validates its output in debug builds; a failure
// signals an internal bug.
Alignment compose(const ProcessTree& tree, int v, const Trace& sigma,
                  const SplitAssignment& split, std::vector<Alignment> subs);

// Recursive split/align/compose approximation. Whenever the trace is no
// longer than TL or the subtree no higher than TH, the exact optimal aligner
// is invoked; the result is always a valid alignment with cost >= optimal.
Alignment approximate_align(const Trace& sigma, const ProcessTree& tree, int root,
                            const ApproxParams& params,
                            const std::vector<Characteristics>& chars);
inline Alignment approximate_align(const Trace& sigma, const ProcessTree& tree,
                                   const ApproxParams& params,
                                   const std::vector<Characteristics>& chars) {
  return approximate_align(sigma, tree, tree.root(), params, chars);
}

}  // namespace treealign
