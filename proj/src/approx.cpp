#include "treealign/approx.hpp"

#include <cassert>
#include <stdexcept>

namespace treealign {

namespace {

bool explains_activity(const Move& m) {
  return m.kind == MoveKind::Sync || m.kind == MoveKind::Log;
}

Alignment compose_and(const Trace& sigma, const SplitAssignment& split,
                      std::vector<Alignment>& subs) {
  if (split.owners.size() != sigma.size()) {
    throw std::logic_error("and-composition requires per-position owners");
  }
  Alignment out;
  std::size_t cursor[2] = {0, 0};
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const int j = split.owners[i] - 1;
    auto& moves = subs[j].moves;
    std::size_t& c = cursor[j];
    while (c < moves.size()) {
      const Move& m = moves[c++];
      out.moves.push_back(m);
      if (explains_activity(m)) {
        if (*m.activity != sigma[i]) {
          throw std::logic_error("and-composition out of sync with sub-alignment");
        }
        break;
      }
    }
  }
  // Remaining pure model moves.
  for (int j = 0; j < 2; ++j) {
    auto& moves = subs[j].moves;
    for (std::size_t c = cursor[j]; c < moves.size(); ++c) out.moves.push_back(moves[c]);
  }
  return out;
}

}  // namespace

Alignment compose(const ProcessTree& tree, int v, const Trace& sigma,
                  const SplitAssignment& split, std::vector<Alignment> subs) {
  if (subs.size() != split.parts.size()) {
    throw std::logic_error("compose: one sub-alignment per part required");
  }
  const auto& node = tree.node(v);
  Alignment out;
  switch (node.op) {
    case Operator::Xor:
      out = std::move(subs[0]);
      break;
    case Operator::Seq:
    case Operator::Loop:
      for (auto& sub : subs) {
        out.moves.insert(out.moves.end(), sub.moves.begin(), sub.moves.end());
      }
      break;
    case Operator::And:
      out = compose_and(sigma, split, subs);
      break;
  }
  out.cost = alignment_cost(out.moves);
#ifndef NDEBUG
  assert(validate_alignment(sigma, tree, v, out));
#endif
  return out;
}

Alignment approximate_align(const Trace& sigma, const ProcessTree& tree, int root,
                            const ApproxParams& params,
                            const std::vector<Characteristics>& chars) {
  if (params.max_trace_length < 1 || params.max_tree_height < 1) {
    throw std::invalid_argument("TL and TH must be >= 1");
  }
  if (sigma.size() <= params.max_trace_length ||
      static_cast<unsigned>(tree.height(root)) <= params.max_tree_height) {
    return optimal_align(sigma, tree, root);
  }
  // height > TH >= 1, so the root is an operator node.
  const SplitAssignment split = split_trace(sigma, tree, root, chars);
  std::vector<Alignment> subs;
  subs.reserve(split.parts.size());
  for (const SplitPart& part : split.parts) {
    const int child = tree.node(root).children[part.child - 1];
    subs.push_back(approximate_align(part.sub_trace, tree, child, params, chars));
  }
  return compose(tree, root, sigma, split, std::move(subs));
}

}  // namespace treealign
