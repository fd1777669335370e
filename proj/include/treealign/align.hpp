#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treealign/semantics.hpp"
#include "treealign/trace.hpp"
#include "treealign/tree.hpp"

namespace treealign {

enum class MoveKind : uint8_t { Sync, Log, VisibleModel, InvisibleModel };

// One alignment move. Sync carries both parts, Log only the activity,
// model moves only the leaf (visible: activity leaf, invisible: tau leaf).
struct Move {
  MoveKind kind;
  std::optional<std::string> activity;
  std::optional<int> leaf;

  static Move sync(std::string a, int leaf) { return {MoveKind::Sync, std::move(a), leaf}; }
  static Move log(std::string a) { return {MoveKind::Log, std::move(a), std::nullopt}; }
  static Move visible(int leaf) { return {MoveKind::VisibleModel, std::nullopt, leaf}; }
  static Move invisible(int leaf) { return {MoveKind::InvisibleModel, std::nullopt, leaf}; }

  bool operator==(const Move& other) const = default;
};

struct Alignment {
  std::vector<Move> moves;
  // Standard cost function: log and visible-model moves cost 1, others 0.
  unsigned cost{0};
};

unsigned alignment_cost(const std::vector<Move>& moves);

// Optimal alignment of `trace` against the subtree of `tree` rooted at
// `root`, by uniform-cost search over the synchronous product of trace
// positions and execution states. Deterministic: among equal-cost optima the
// one with fewer moves found first in expansion order is returned.
Alignment optimal_align(const Trace& trace, const ProcessTree& tree, int root);
inline Alignment optimal_align(const Trace& trace, const ProcessTree& tree) {
  return optimal_align(trace, tree, tree.root());
}

// Checks the three alignment conditions: log projection equals the trace,
// the model leaf sequence replays to completion on the execution-state
// machine, and every move is well-formed for the tree's leaves.
bool validate_alignment(const Trace& trace, const ProcessTree& tree, int root,
                        const Alignment& alignment);
inline bool validate_alignment(const Trace& trace, const ProcessTree& tree,
                               const Alignment& alignment) {
  return validate_alignment(trace, tree, tree.root(), alignment);
}

// Compact single-line form, e.g. "a|a >>|tau(n2) a|>> >>|b(n3)".
std::string serialize_alignment(const Alignment& alignment, const ProcessTree& tree);

// Two-row table (log row / model row).
std::string alignment_table(const Alignment& alignment, const ProcessTree& tree);

// JSON records form: [{"kind": "...", "activity": ..., "leaf": ...}, ...].
std::string alignment_json(const Alignment& alignment, const ProcessTree& tree);

}  // namespace treealign
