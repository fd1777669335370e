#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "treealign/log.hpp"
#include "treealign/trace.hpp"
#include "treealign/tree.hpp"

namespace treealign {

// Random binary process tree with roughly `target_nodes` nodes. Operator
// choice is uniform over seq/xor/and with the loop probability capped at 0.2
// to keep state spaces bounded.
ProcessTree random_tree(std::mt19937_64& rng, int target_nodes,
                        const std::vector<std::string>& activities);

// Samples a trace from L(tree) by random execution; loop redo rounds are
// taken with probability `redo_prob` each.
Trace sample_trace(const ProcessTree& tree, std::mt19937_64& rng, double redo_prob = 0.3);

// Applies per-event noise: with probability `noise_prob` an event is deleted,
// relabeled, or preceded by an inserted event (equal conditional probability).
Trace apply_noise(const Trace& trace, std::mt19937_64& rng, double noise_prob,
                  const std::vector<std::string>& activities);

struct SynthesisParams {
  std::uint64_t seed{0};
  int n_trees{1};
  int tree_size{15};
  int n_traces{50};
  double noise_prob{0.2};
};

struct SynthesizedInstance {
  ProcessTree tree;
  EventLog log;
};

// Deterministic function of the seed.
std::vector<SynthesizedInstance> synthesize(const SynthesisParams& params);

// Writes tree_<i>.ptree / log_<i>.variants under out_dir.
void write_corpus(const std::vector<SynthesizedInstance>& corpus, const std::string& out_dir);

}  // namespace treealign
