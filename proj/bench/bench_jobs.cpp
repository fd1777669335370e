// Throughput comparison of the serial runner against the OpenMP runner on a
// synthesized corpus. Build-only utility, not part of the test suite.
#include <chrono>
#include <iostream>

#include "treealign/runner.hpp"
#include "treealign/synth.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace treealign;

namespace {

double time_run(const ProcessTree& tree, const std::vector<Characteristics>& chars,
                const EventLog& log, const ApproxParams& params, int jobs,
                std::vector<VariantResult>& out) {
  const auto start = std::chrono::steady_clock::now();
  out = jobs <= 0 ? run_alignments_serial(tree, chars, log, AlignMode::Approx, params)
                  : run_alignments(tree, chars, log, AlignMode::Approx, params, jobs);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main() {
  SynthesisParams sp;
  sp.seed = 17;
  sp.n_trees = 1;
  sp.tree_size = 31;
  sp.n_traces = 400;
  sp.noise_prob = 0.3;
  const auto corpus = synthesize(sp);
  const auto& tree = corpus[0].tree;
  const auto& log = corpus[0].log;
  const auto chars = compute_characteristics(tree);
  const ApproxParams params{3, 3};

  std::vector<VariantResult> serial, parallel;
  const double t_serial = time_run(tree, chars, log, params, 0, serial);
  std::cout << "variants," << log.variants.size() << "\nserial_seconds," << t_serial << '\n';

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  const double t_par = time_run(tree, chars, log, params, threads, parallel);
  std::cout << "openmp_threads," << threads << "\nopenmp_seconds," << t_par
            << "\nspeedup," << t_serial / t_par << '\n';
#else
  const double t_par = time_run(tree, chars, log, params, 2, parallel);
  std::cout << "openmp,unavailable\nfallback_seconds," << t_par << '\n';
#endif

  for (std::size_t i = 0; i < serial.size(); ++i) {
    if (serial[i].cost != parallel[i].cost ||
        serial[i].alignment.moves != parallel[i].alignment.moves) {
      std::cerr << "mismatch between serial and parallel results at variant " << i << '\n';
      return 1;
    }
  }
  std::cout << "results,identical\n";
  return 0;
}
