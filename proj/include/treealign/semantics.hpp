#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "treealign/tree.hpp"

namespace treealign {

// Per-node execution phase of a (sub)tree run.
enum class Phase : uint8_t { Future = 0, Open = 1, Closed = 2 };

// Execution state of a subtree: one phase per node of the subtree range.
// Hashable and equality-comparable; loop bookkeeping is encoded purely in the
// phases (redo rounds reset the loop's subtree), so the state space is finite.
class ExecutionState {
 public:
  ExecutionState() = default;
  explicit ExecutionState(std::size_t n) : phases_(n, static_cast<uint8_t>(Phase::Future)) {}

  Phase phase(int local) const { return static_cast<Phase>(phases_[local]); }
  void set_phase(int local, Phase p) { phases_[local] = static_cast<uint8_t>(p); }
  std::size_t size() const { return phases_.size(); }

  bool operator==(const ExecutionState& other) const { return phases_ == other.phases_; }
  bool operator<(const ExecutionState& other) const { return phases_ < other.phases_; }

  std::size_t hash() const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(phases_.data()), phases_.size()));
  }

 private:
  std::vector<uint8_t> phases_;
};

struct ExecutionStateHash {
  std::size_t operator()(const ExecutionState& s) const { return s.hash(); }
};

// A leaf firing together with the successor state. The leaf index is global
// (relative to the full tree the semantics were built on).
struct FiringStep {
  int leaf;
  ExecutionState next;
};

// Labeled-transition-system view of a subtree's execution. Steps are leaf
// firings (activity or tau); the silent control plumbing between them
// (opening/closing operators, choice commits, loop redo resets) is absorbed,
// so successors() enumerates exactly the firable leaves of each state.
//
// seq runs its children left to right, xor commits to exactly one child, and
// interleaves both children, loop runs child 1 and then zero or more
// (child 2, child 1) redo rounds before closing.
class Semantics {
 public:
  Semantics(const ProcessTree& tree, int root);
  explicit Semantics(const ProcessTree& tree) : Semantics(tree, tree.root()) {}

  const ProcessTree& tree() const { return *tree_; }
  int root() const { return root_; }

  ExecutionState initial() const { return ExecutionState(static_cast<std::size_t>(size_)); }

  // All (leaf firing, successor) pairs reachable from s by any sequence of
  // silent control steps followed by one leaf firing. Deterministically
  // ordered and deduplicated.
  std::vector<FiringStep> successors(const ExecutionState& s) const;

  // True iff the run can be completed from s by control steps alone.
  bool is_final(const ExecutionState& s) const;

 private:
  int local(int v) const { return v - root_; }
  void collect(const ExecutionState& s, int v, std::vector<ExecutionState>& controls,
               std::vector<FiringStep>& fires) const;
  void close_subtree(ExecutionState& s, int v) const;
  void reset_subtree(ExecutionState& s, int v) const;

  const ProcessTree* tree_;
  int root_;
  int size_;
};

}  // namespace treealign
