#include "doctest.h"

#include "treealign/runner.hpp"
#include "treealign/synth.hpp"

using namespace treealign;

namespace {

SynthesizedInstance make_instance(std::uint64_t seed) {
  SynthesisParams sp;
  sp.seed = seed;
  sp.n_trees = 1;
  sp.tree_size = 13;
  sp.n_traces = 60;
  sp.noise_prob = 0.25;
  return synthesize(sp)[0];
}

}  // namespace

TEST_CASE("synthesis is deterministic in the seed") {
  const auto a = make_instance(42);
  const auto b = make_instance(42);
  CHECK(a.tree == b.tree);
  REQUIRE(a.log.variants.size() == b.log.variants.size());
  for (std::size_t i = 0; i < a.log.variants.size(); ++i) {
    CHECK(a.log.variants[i].trace == b.log.variants[i].trace);
    CHECK(a.log.variants[i].count == b.log.variants[i].count);
  }
  CHECK(make_instance(43).tree != a.tree);
}

TEST_CASE("parallel runner matches the serial reference") {
  const auto inst = make_instance(7);
  const auto chars = compute_characteristics(inst.tree);
  const ApproxParams params{3, 3};
  const auto serial =
      run_alignments_serial(inst.tree, chars, inst.log, AlignMode::Approx, params);
  const auto parallel =
      run_alignments(inst.tree, chars, inst.log, AlignMode::Approx, params, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(parallel[i].index == i);
    CHECK(serial[i].cost == parallel[i].cost);
    CHECK(serial[i].count == parallel[i].count);
    CHECK(serial[i].alignment.moves == parallel[i].alignment.moves);
  }
}

TEST_CASE("grid has one optimal row plus one row per cell") {
  const auto inst = make_instance(9);
  const auto chars = compute_characteristics(inst.tree);
  const auto rows = run_grid(inst.tree, chars, inst.log, {1, 3, 5}, {1, 3, 5}, 2);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].is_optimal);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK_FALSE(rows[i].is_optimal);
    CHECK(rows[i].avg_cost >= rows[0].avg_cost);
    CHECK(rows[i].n_traces == rows[0].n_traces);
  }
  CHECK(rows[0].n_traces == inst.log.total_traces());
}

TEST_CASE("noise-free corpora align at zero cost") {
  // Always true for optimal mode. Approximate mode can overestimate at very
  // small thresholds (the splitters price parts by the liberal
  // interpretation, which admits sub-traces outside the child language);
  // moderate thresholds keep sampled traces at zero.
  SynthesisParams sp;
  sp.seed = 3;
  sp.n_trees = 2;
  sp.tree_size = 11;
  sp.n_traces = 25;
  sp.noise_prob = 0.0;
  for (const auto& inst : synthesize(sp)) {
    const auto chars = compute_characteristics(inst.tree);
    for (const auto mode : {AlignMode::Optimal, AlignMode::Approx}) {
      const auto results =
          run_alignments(inst.tree, chars, inst.log, mode, ApproxParams{5, 5}, 2);
      for (const auto& r : results) CHECK(r.cost == 0);
    }
  }
}
