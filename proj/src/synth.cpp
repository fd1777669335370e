#include "treealign/synth.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace treealign {

namespace {

// Distribution helpers on top of the (standardized) mt19937_64 stream, so
// output is identical across standard library implementations.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ProcessTree build_random(std::mt19937_64& rng, int budget,
                         const std::vector<std::string>& activities) {
  if (budget < 3) {
    if (next_unit(rng) < 0.1) return ProcessTree::tau_leaf();
    return ProcessTree::activity_leaf(activities[next_below(rng, activities.size())]);
  }
  Operator op;
  if (next_unit(rng) < 0.2) {
    op = Operator::Loop;
  } else {
    constexpr Operator kOps[] = {Operator::Seq, Operator::Xor, Operator::And};
    op = kOps[next_below(rng, 3)];
  }
  const int remaining = budget - 1;
  const int left = 1 + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(remaining - 1)));
  std::vector<ProcessTree> children;
  children.push_back(build_random(rng, left, activities));
  children.push_back(build_random(rng, remaining - left, activities));
  return ProcessTree::make(op, std::move(children));
}

void sample_node(const ProcessTree& tree, int v, std::mt19937_64& rng, double redo_prob,
                 Trace& out) {
  const auto& node = tree.node(v);
  if (node.is_tau()) return;
  if (node.is_activity()) {
    out.push_back(node.activity);
    return;
  }
  const int c1 = node.children[0];
  const int c2 = node.children[1];
  switch (node.op) {
    case Operator::Seq:
      sample_node(tree, c1, rng, redo_prob, out);
      sample_node(tree, c2, rng, redo_prob, out);
      break;
    case Operator::Xor:
      sample_node(tree, next_below(rng, 2) == 0 ? c1 : c2, rng, redo_prob, out);
      break;
    case Operator::And: {
      Trace left, right;
      sample_node(tree, c1, rng, redo_prob, left);
      sample_node(tree, c2, rng, redo_prob, right);
      std::size_t i = 0, j = 0;
      while (i < left.size() || j < right.size()) {
        const std::uint64_t total = (left.size() - i) + (right.size() - j);
        if (next_below(rng, total) < left.size() - i) {
          out.push_back(left[i++]);
        } else {
          out.push_back(right[j++]);
        }
      }
      break;
    }
    case Operator::Loop:
      sample_node(tree, c1, rng, redo_prob, out);
      while (next_unit(rng) < redo_prob) {
        sample_node(tree, c2, rng, redo_prob, out);
        sample_node(tree, c1, rng, redo_prob, out);
      }
      break;
  }
}

}  // namespace

ProcessTree random_tree(std::mt19937_64& rng, int target_nodes,
                        const std::vector<std::string>& activities) {
  if (activities.empty()) throw std::invalid_argument("activity pool must be non-empty");
  return build_random(rng, target_nodes, activities);
}

Trace sample_trace(const ProcessTree& tree, std::mt19937_64& rng, double redo_prob) {
  Trace out;
  sample_node(tree, tree.root(), rng, redo_prob, out);
  return out;
}

Trace apply_noise(const Trace& trace, std::mt19937_64& rng, double noise_prob,
                  const std::vector<std::string>& activities) {
  Trace out;
  for (const auto& activity : trace) {
    if (next_unit(rng) < noise_prob) {
      switch (next_below(rng, 3)) {
        case 0:  // delete
          break;
        case 1:  // relabel
          out.push_back(activities[next_below(rng, activities.size())]);
          break;
        case 2:  // insert before
          out.push_back(activities[next_below(rng, activities.size())]);
          out.push_back(activity);
          break;
      }
    } else {
      out.push_back(activity);
    }
  }
  return out;
}

std::vector<SynthesizedInstance> synthesize(const SynthesisParams& params) {
  if (params.noise_prob < 0.0 || params.noise_prob > 1.0) {
    throw std::invalid_argument("noise_prob must be in [0,1]");
  }
  if (params.n_trees < 1 || params.tree_size < 1 || params.n_traces < 1) {
    throw std::invalid_argument("n_trees, tree_size and n_traces must be >= 1");
  }
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::mt19937_64 rng(params.seed);
  std::vector<SynthesizedInstance> corpus;
  for (int t = 0; t < params.n_trees; ++t) {
    SynthesizedInstance inst{random_tree(rng, params.tree_size, pool), {}};
    for (int i = 0; i < params.n_traces; ++i) {
      Trace trace = sample_trace(inst.tree, rng);
      trace = apply_noise(trace, rng, params.noise_prob, pool);
      inst.log.add(trace);
    }
    corpus.push_back(std::move(inst));
  }
  return corpus;
}

void write_corpus(const std::vector<SynthesizedInstance>& corpus, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string stem = out_dir + "/";
    std::ofstream tree_out(stem + "tree_" + std::to_string(i) + ".ptree");
    if (!tree_out) throw std::runtime_error("cannot write to " + out_dir);
    tree_out << corpus[i].tree.render() << '\n';
    save_variants(corpus[i].log, stem + "log_" + std::to_string(i) + ".variants");
  }
}

}  // namespace treealign
