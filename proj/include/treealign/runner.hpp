#pragma once

#include <cstdint>
#include <vector>

#include "treealign/approx.hpp"
#include "treealign/log.hpp"

namespace treealign {

enum class AlignMode { Optimal, Approx };

struct VariantResult {
  std::size_t index{0};
  std::uint64_t count{1};
  unsigned cost{0};
  double seconds{0.0};
  Alignment alignment;
};

// Aligns every variant of the log against the tree. `params` is ignored in
// optimal mode. Results are ordered by variant index regardless of the
// execution schedule.
std::vector<VariantResult> run_alignments_serial(const ProcessTree& tree,
                                                 const std::vector<Characteristics>& chars,
                                                 const EventLog& log, AlignMode mode,
                                                 const ApproxParams& params);

// OpenMP variant-level parallel version; identical results to the serial
// reference (alignments are pure functions of immutable inputs). Falls back
// to the serial path for jobs <= 1 or builds without OpenMP.
std::vector<VariantResult> run_alignments(const ProcessTree& tree,
                                          const std::vector<Characteristics>& chars,
                                          const EventLog& log, AlignMode mode,
                                          const ApproxParams& params, int jobs);

struct GridRow {
  bool is_optimal{false};
  unsigned tl{0};
  unsigned th{0};
  double avg_cost{0.0};
  double avg_time_seconds{0.0};
  std::uint64_t n_traces{0};
};

// One row per (TL, TH) cell plus a leading optimal reference row. Verifies
// the dominance invariant per variant (approximate cost >= optimal cost) and
// throws if it is violated, which would indicate an invalid alignment.
std::vector<GridRow> run_grid(const ProcessTree& tree, const std::vector<Characteristics>& chars,
                              const EventLog& log, const std::vector<unsigned>& tl_values,
                              const std::vector<unsigned>& th_values, int jobs);

}  // namespace treealign
