#include "treealign/semantics.hpp"

#include <algorithm>
#include <set>

namespace treealign {

Semantics::Semantics(const ProcessTree& tree, int root)
    : tree_(&tree), root_(root), size_(tree.subtree_size(root)) {
  if (!tree.contains(root)) throw std::out_of_range("unknown root node");
}

void Semantics::close_subtree(ExecutionState& s, int v) const {
  const int end = v + tree_->subtree_size(v);
  for (int u = v; u < end; ++u) s.set_phase(local(u), Phase::Closed);
}

void Semantics::reset_subtree(ExecutionState& s, int v) const {
  const int end = v + tree_->subtree_size(v);
  for (int u = v; u < end; ++u) s.set_phase(local(u), Phase::Future);
}

// Enumerates the single micro-steps available inside the subtree at v:
// control steps (silent) into `controls`, leaf firings into `fires`.
void Semantics::collect(const ExecutionState& s, int v, std::vector<ExecutionState>& controls,
                        std::vector<FiringStep>& fires) const {
  const auto& node = tree_->node(v);
  const Phase ph = s.phase(local(v));

  if (node.is_leaf()) {
    if (ph == Phase::Future) {
      ExecutionState next = s;
      next.set_phase(local(v), Phase::Closed);
      fires.push_back({v, std::move(next)});
    }
    return;
  }

  if (ph == Phase::Future) {
    ExecutionState next = s;
    next.set_phase(local(v), Phase::Open);
    controls.push_back(std::move(next));
    return;
  }
  if (ph == Phase::Closed) return;

  const int c1 = node.children[0];
  const int c2 = node.children[1];
  const Phase p1 = s.phase(local(c1));
  const Phase p2 = s.phase(local(c2));

  auto push_close = [&] {
    ExecutionState next = s;
    close_subtree(next, v);
    controls.push_back(std::move(next));
  };

  switch (node.op) {
    case Operator::Seq:
      if (p1 != Phase::Closed) {
        collect(s, c1, controls, fires);
      } else if (p2 != Phase::Closed) {
        collect(s, c2, controls, fires);
      } else {
        push_close();
      }
      break;
    case Operator::And: {
      bool active = false;
      if (p1 != Phase::Closed) {
        collect(s, c1, controls, fires);
        active = true;
      }
      if (p2 != Phase::Closed) {
        collect(s, c2, controls, fires);
        active = true;
      }
      if (!active) push_close();
      break;
    }
    case Operator::Xor:
      if (p1 == Phase::Future && p2 == Phase::Future) {
        // Commit to one child by skipping the other.
        ExecutionState pick1 = s;
        close_subtree(pick1, c2);
        controls.push_back(std::move(pick1));
        ExecutionState pick2 = s;
        close_subtree(pick2, c1);
        controls.push_back(std::move(pick2));
      } else if (p1 != Phase::Closed) {
        collect(s, c1, controls, fires);
      } else if (p2 != Phase::Closed) {
        collect(s, c2, controls, fires);
      } else {
        push_close();
      }
      break;
    case Operator::Loop:
      if (p1 != Phase::Closed) {
        collect(s, c1, controls, fires);
      } else if (p2 == Phase::Closed) {
        // Redo word finished: start the next body round.
        ExecutionState next = s;
        reset_subtree(next, c1);
        reset_subtree(next, c2);
        controls.push_back(std::move(next));
      } else {
        if (p2 == Phase::Future) push_close();
        collect(s, c2, controls, fires);
      }
      break;
  }
}

std::vector<FiringStep> Semantics::successors(const ExecutionState& s) const {
  std::set<ExecutionState> seen;
  std::vector<ExecutionState> queue{s};
  seen.insert(s);
  std::vector<FiringStep> fires;
  std::vector<ExecutionState> controls;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ExecutionState current = queue[head];
    if (current.phase(local(root_)) == Phase::Closed) continue;
    controls.clear();
    collect(current, root_, controls, fires);
    for (auto& next : controls) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::sort(fires.begin(), fires.end(), [](const FiringStep& a, const FiringStep& b) {
    return a.leaf != b.leaf ? a.leaf < b.leaf : a.next < b.next;
  });
  fires.erase(std::unique(fires.begin(), fires.end(),
                          [](const FiringStep& a, const FiringStep& b) {
                            return a.leaf == b.leaf && a.next == b.next;
                          }),
              fires.end());
  return fires;
}

bool Semantics::is_final(const ExecutionState& s) const {
  if (s.phase(local(root_)) == Phase::Closed) return true;
  std::set<ExecutionState> seen;
  std::vector<ExecutionState> queue{s};
  seen.insert(s);
  std::vector<FiringStep> fires;
  std::vector<ExecutionState> controls;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ExecutionState current = queue[head];
    if (current.phase(local(root_)) == Phase::Closed) return true;
    controls.clear();
    fires.clear();
    collect(current, root_, controls, fires);
    for (auto& next : controls) {
      if (next.phase(local(root_)) == Phase::Closed) return true;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace treealign
