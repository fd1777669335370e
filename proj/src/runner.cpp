#include "treealign/runner.hpp"

#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treealign {

namespace {

VariantResult align_variant(const ProcessTree& tree, const std::vector<Characteristics>& chars,
                            const Variant& variant, std::size_t index, AlignMode mode,
                            const ApproxParams& params) {
  VariantResult result;
  result.index = index;
  result.count = variant.count;
  const auto start = std::chrono::steady_clock::now();
  result.alignment = mode == AlignMode::Optimal
                         ? optimal_align(variant.trace, tree)
                         : approximate_align(variant.trace, tree, params, chars);
  const auto stop = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(stop - start).count();
  result.cost = result.alignment.cost;
  return result;
}

}  // namespace

std::vector<VariantResult> run_alignments_serial(const ProcessTree& tree,
                                                 const std::vector<Characteristics>& chars,
                                                 const EventLog& log, AlignMode mode,
                                                 const ApproxParams& params) {
  std::vector<VariantResult> results(log.variants.size());
  for (std::size_t i = 0; i < log.variants.size(); ++i) {
    results[i] = align_variant(tree, chars, log.variants[i], i, mode, params);
  }
  return results;
}

std::vector<VariantResult> run_alignments(const ProcessTree& tree,
                                          const std::vector<Characteristics>& chars,
                                          const EventLog& log, AlignMode mode,
                                          const ApproxParams& params, int jobs) {
#ifdef _OPENMP
  if (jobs > 1) {
    std::vector<VariantResult> results(log.variants.size());
    const auto n = static_cast<std::ptrdiff_t>(log.variants.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      results[i] = align_variant(tree, chars, log.variants[i],
                                 static_cast<std::size_t>(i), mode, params);
    }
    return results;
  }
#else
  (void)jobs;
#endif
  return run_alignments_serial(tree, chars, log, mode, params);
}

namespace {

GridRow summarize(const std::vector<VariantResult>& results) {
  GridRow row;
  double cost_sum = 0.0;
  double time_sum = 0.0;
  for (const auto& r : results) {
    row.n_traces += r.count;
    cost_sum += static_cast<double>(r.cost) * static_cast<double>(r.count);
    time_sum += r.seconds * static_cast<double>(r.count);
  }
  if (row.n_traces > 0) {
    cost_sum /= static_cast<double>(row.n_traces);
    time_sum /= static_cast<double>(row.n_traces);
  }
  row.avg_cost = cost_sum;
  row.avg_time_seconds = time_sum;
  return row;
}

}  // namespace

std::vector<GridRow> run_grid(const ProcessTree& tree, const std::vector<Characteristics>& chars,
                              const EventLog& log, const std::vector<unsigned>& tl_values,
                              const std::vector<unsigned>& th_values, int jobs) {
  if (tl_values.empty() || th_values.empty()) {
    throw std::invalid_argument("TL and TH lists must be non-empty");
  }
  const auto optimal = run_alignments(tree, chars, log, AlignMode::Optimal, {}, jobs);
  std::vector<GridRow> rows;
  GridRow opt_row = summarize(optimal);
  opt_row.is_optimal = true;
  rows.push_back(opt_row);

  for (unsigned tl : tl_values) {
    for (unsigned th : th_values) {
      const ApproxParams params{tl, th};
      const auto approx = run_alignments(tree, chars, log, AlignMode::Approx, params, jobs);
      for (std::size_t i = 0; i < approx.size(); ++i) {
        if (approx[i].cost < optimal[i].cost) {
          throw std::runtime_error("dominance violated for variant " + std::to_string(i) +
                                   ": approximate cost below optimal (internal bug)");
        }
      }
      GridRow row = summarize(approx);
      row.tl = tl;
      row.th = th;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace treealign
