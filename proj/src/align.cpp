#include "treealign/align.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "json.hpp"

namespace treealign {

unsigned alignment_cost(const std::vector<Move>& moves) {
  unsigned cost = 0;
  for (const auto& m : moves) {
    if (m.kind == MoveKind::Log || m.kind == MoveKind::VisibleModel) ++cost;
  }
  return cost;
}

namespace {

struct ProductKey {
  int pos;
  ExecutionState state;
  bool operator==(const ProductKey& other) const {
    return pos == other.pos && state == other.state;
  }
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const {
    return k.state.hash() * 1000003u + static_cast<std::size_t>(k.pos);
  }
};

struct SearchNode {
  unsigned cost = 0;
  unsigned nmoves = 0;
  int parent = -1;
  Move move = Move::log("");
  bool has_move = false;
  bool closed = false;
};

}  // namespace

Alignment optimal_align(const Trace& trace, const ProcessTree& tree, int root) {
  const Semantics sem(tree, root);
  const int n = static_cast<int>(trace.size());

  std::vector<ProductKey> keys;
  std::vector<SearchNode> nodes;
  std::unordered_map<ProductKey, int, ProductKeyHash> index;
  std::map<ExecutionState, std::vector<FiringStep>> successor_cache;
  std::map<ExecutionState, bool> final_cache;

  auto intern = [&](ProductKey key) {
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(keys.size());
    index.emplace(key, id);
    keys.push_back(std::move(key));
    nodes.emplace_back();
    nodes.back().cost = ~0u;
    return id;
  };

  using PqEntry = std::tuple<unsigned, unsigned, int>;  // (cost, nmoves, id)
  std::priority_queue<PqEntry, std::vector<PqEntry>, std::greater<>> pq;

  auto relax = [&](ProductKey key, unsigned cost, unsigned nmoves, int parent, Move move,
                   bool has_move) {
    const int id = intern(std::move(key));
    SearchNode& node = nodes[id];
    if (node.closed) return;
    if (std::tie(cost, nmoves) < std::tie(node.cost, node.nmoves)) {
      node.cost = cost;
      node.nmoves = nmoves;
      node.parent = parent;
      node.move = std::move(move);
      node.has_move = has_move;
      pq.emplace(cost, nmoves, id);
    }
  };

  relax({0, sem.initial()}, 0, 0, -1, Move::log(""), false);

  while (!pq.empty()) {
    const auto [cost, nmoves, id] = pq.top();
    pq.pop();
    if (nodes[id].closed || cost != nodes[id].cost || nmoves != nodes[id].nmoves) continue;
    nodes[id].closed = true;
    const ProductKey key = keys[id];  // copy: keys may reallocate below

    auto fin = final_cache.find(key.state);
    if (fin == final_cache.end()) {
      fin = final_cache.emplace(key.state, sem.is_final(key.state)).first;
    }
    if (key.pos == n && fin->second) {
      Alignment result;
      for (int cur = id; cur >= 0 && nodes[cur].has_move; cur = nodes[cur].parent) {
        result.moves.push_back(nodes[cur].move);
      }
      std::reverse(result.moves.begin(), result.moves.end());
      result.cost = alignment_cost(result.moves);
      return result;
    }

    if (key.pos < n) {
      relax({key.pos + 1, key.state}, cost + 1, nmoves + 1, id, Move::log(trace[key.pos]), true);
    }
    auto it = successor_cache.find(key.state);
    if (it == successor_cache.end()) {
      it = successor_cache.emplace(key.state, sem.successors(key.state)).first;
    }
    for (const FiringStep& step : it->second) {
      const auto& leaf = tree.node(step.leaf);
      if (leaf.is_tau()) {
        relax({key.pos, step.next}, cost, nmoves + 1, id, Move::invisible(step.leaf), true);
      } else {
        relax({key.pos, step.next}, cost + 1, nmoves + 1, id, Move::visible(step.leaf), true);
        if (key.pos < n && trace[key.pos] == leaf.activity) {
          relax({key.pos + 1, step.next}, cost, nmoves + 1, id,
                Move::sync(leaf.activity, step.leaf), true);
        }
      }
    }
  }
  // Unreachable: an all-log-moves prefix plus any model completion always
  // exists for a valid tree.
  throw std::logic_error("alignment search exhausted without reaching a final state");
}

bool validate_alignment(const Trace& trace, const ProcessTree& tree, int root,
                        const Alignment& alignment) {
  const int end = root + tree.subtree_size(root);

  // Condition 3: every move is well-formed.
  for (const auto& m : alignment.moves) {
    switch (m.kind) {
      case MoveKind::Sync:
        if (!m.activity || !m.leaf) return false;
        if (*m.leaf < root || *m.leaf >= end) return false;
        if (!tree.node(*m.leaf).is_activity()) return false;
        if (tree.node(*m.leaf).activity != *m.activity) return false;
        break;
      case MoveKind::Log:
        if (!m.activity || m.leaf) return false;
        break;
      case MoveKind::VisibleModel:
        if (m.activity || !m.leaf) return false;
        if (*m.leaf < root || *m.leaf >= end) return false;
        if (!tree.node(*m.leaf).is_activity()) return false;
        break;
      case MoveKind::InvisibleModel:
        if (m.activity || !m.leaf) return false;
        if (*m.leaf < root || *m.leaf >= end) return false;
        if (!tree.node(*m.leaf).is_tau()) return false;
        break;
    }
  }

  // Condition 1: the log projection equals the trace.
  Trace projected;
  for (const auto& m : alignment.moves) {
    if (m.kind == MoveKind::Sync || m.kind == MoveKind::Log) projected.push_back(*m.activity);
  }
  if (projected != trace) return false;

  // Condition 2: the visible model leaf sequence replays to completion. The
  // model projection drops tau, so tau firings are absorbed like control
  // steps here and explicit invisible moves impose no replay constraint.
  const Semantics sem(tree, root);
  std::set<ExecutionState> frontier{sem.initial()};
  auto expand_tau = [&](std::set<ExecutionState>& states) {
    std::vector<ExecutionState> queue(states.begin(), states.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const FiringStep& step : sem.successors(queue[head])) {
        if (tree.node(step.leaf).is_tau() && states.insert(step.next).second) {
          queue.push_back(step.next);
        }
      }
    }
  };
  for (const auto& m : alignment.moves) {
    if (!m.leaf || tree.node(*m.leaf).is_tau()) continue;
    expand_tau(frontier);
    std::set<ExecutionState> next;
    for (const auto& s : frontier) {
      for (const FiringStep& step : sem.successors(s)) {
        if (step.leaf == *m.leaf) next.insert(step.next);
      }
    }
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  expand_tau(frontier);
  for (const auto& s : frontier) {
    if (sem.is_final(s)) return true;
  }
  return false;
}

namespace {

std::string move_log_part(const Move& m) {
  return m.activity ? *m.activity : ">>";
}

std::string move_model_part(const Move& m, const ProcessTree& tree) {
  if (!m.leaf) return ">>";
  const auto& leaf = tree.node(*m.leaf);
  const std::string label = leaf.is_tau() ? "tau" : leaf.activity;
  return label + "(n" + std::to_string(*m.leaf) + ")";
}

}  // namespace

std::string serialize_alignment(const Alignment& alignment, const ProcessTree& tree) {
  std::string out;
  for (std::size_t i = 0; i < alignment.moves.size(); ++i) {
    if (i > 0) out += ' ';
    out += move_log_part(alignment.moves[i]);
    out += '|';
    out += move_model_part(alignment.moves[i], tree);
  }
  return out;
}

std::string alignment_table(const Alignment& alignment, const ProcessTree& tree) {
  std::vector<std::string> top, bottom;
  for (const auto& m : alignment.moves) {
    top.push_back(move_log_part(m));
    bottom.push_back(move_model_part(m, tree));
  }
  std::ostringstream out;
  auto emit_row = [&](const char* name, const std::vector<std::string>& row,
                      const std::vector<std::string>& other) {
    out << name;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::size_t width = std::max(row[i].size(), other[i].size());
      out << " | " << row[i] << std::string(width - row[i].size(), ' ');
    }
    out << " |\n";
  };
  emit_row("trace", top, bottom);
  emit_row("model", bottom, top);
  return out.str();
}

std::string alignment_json(const Alignment& alignment, const ProcessTree& tree) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& m : alignment.moves) {
    nlohmann::json rec;
    switch (m.kind) {
      case MoveKind::Sync: rec["kind"] = "sync"; break;
      case MoveKind::Log: rec["kind"] = "log"; break;
      case MoveKind::VisibleModel: rec["kind"] = "visible_model"; break;
      case MoveKind::InvisibleModel: rec["kind"] = "invisible_model"; break;
    }
    if (m.activity) rec["activity"] = *m.activity;
    if (m.leaf) {
      rec["leaf"] = *m.leaf;
      const auto& leaf = tree.node(*m.leaf);
      rec["leaf_label"] = leaf.is_tau() ? "tau" : leaf.activity;
    }
    records.push_back(std::move(rec));
  }
  return records.dump();
}

}  // namespace treealign
