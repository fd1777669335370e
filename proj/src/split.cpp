#include "treealign/split.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <span>

#include "treealign/interpretation.hpp"

namespace treealign {

namespace {

constexpr unsigned kInf = std::numeric_limits<unsigned>::max() / 4;

std::span<const std::string> slice(const Trace& sigma, std::size_t begin, std::size_t end) {
  return std::span<const std::string>(sigma).subspan(begin, end - begin);
}

}  // namespace

SplitAssignment split_xor(const Trace& sigma, const ProcessTree& tree, int v,
                          const std::vector<Characteristics>& chars) {
  const auto& node = tree.node(v);
  const unsigned cost1 = interpretation_cost(sigma, chars[node.children[0]]);
  const unsigned cost2 = interpretation_cost(sigma, chars[node.children[1]]);
  SplitAssignment out;
  out.parts.push_back({sigma, cost1 <= cost2 ? 1 : 2});
  out.objective = std::min(cost1, cost2);
  return out;
}

SplitAssignment split_seq(const Trace& sigma, const ProcessTree& tree, int v,
                          const std::vector<Characteristics>& chars) {
  const auto& node = tree.node(v);
  const Characteristics& c1 = chars[node.children[0]];
  const Characteristics& c2 = chars[node.children[1]];
  const std::size_t n = sigma.size();

  std::size_t best_pos = 0;
  unsigned best_cost = kInf;
  for (std::size_t p = 0; p <= n; ++p) {
    const unsigned cost =
        interpretation_cost(slice(sigma, 0, p), c1) + interpretation_cost(slice(sigma, p, n), c2);
    if (cost < best_cost) {
      best_cost = cost;
      best_pos = p;
    }
  }

  SplitAssignment out;
  out.parts.push_back({Trace(sigma.begin(), sigma.begin() + best_pos), 1});
  out.parts.push_back({Trace(sigma.begin() + best_pos, sigma.end()), 2});
  out.objective = best_cost;
  return out;
}

namespace {

// Per-child DP state for the parallel splitter. The pending last character's
// end/alphabet indicator costs are deferred until we know whether another
// character follows.
//   0      : no character assigned yet
//   1..4   : exactly one character z: 1 + 2*[z in SA] + [z in EA]
//   5..8   : two or more, last character z: 5 + 2*[z in EA] + [z in A]
struct AndChild {
  bool accepts_empty;
  bool overlap;
  unsigned empty_cost;
};

unsigned and_final_cost(int state, const AndChild& c) {
  if (state == 0) return c.empty_cost;
  if (state <= 4) {
    const bool sa = ((state - 1) & 2) != 0;
    const bool ea = ((state - 1) & 1) != 0;
    unsigned cost = (sa ? 0u : 1u) + (ea ? 0u : 1u);
    // A lone off-alphabet character can instead be substituted into the
    // singleton branch or deleted toward the empty trace.
    if (c.overlap || c.accepts_empty) cost = std::min(cost, 1u);
    return cost;
  }
  const bool ea = ((state - 5) & 2) != 0;
  return ea ? 0u : 1u;
}

// Appending a character with flags (sa, ea, a) to a child in `state`:
// returns the new state and the cost paid now.
std::pair<int, unsigned> and_transition(int state, bool sa, bool ea, bool a) {
  if (state == 0) return {1 + (sa ? 2 : 0) + (ea ? 1 : 0), 0};
  if (state <= 4) {
    const bool prev_sa = ((state - 1) & 2) != 0;
    return {5 + (ea ? 2 : 0) + (a ? 1 : 0), prev_sa ? 0u : 1u};
  }
  const bool prev_a = ((state - 5) & 1) != 0;
  return {5 + (ea ? 2 : 0) + (a ? 1 : 0), prev_a ? 0u : 1u};
}

}  // namespace

SplitAssignment split_and(const Trace& sigma, const ProcessTree& tree, int v,
                          const std::vector<Characteristics>& chars) {
  const auto& node = tree.node(v);
  const std::array<const Characteristics*, 2> cs = {&chars[node.children[0]],
                                                    &chars[node.children[1]]};
  std::array<AndChild, 2> info;
  for (int j = 0; j < 2; ++j) {
    info[j] = {cs[j]->accepts_empty, cs[j]->has_start_end_overlap(),
               interpretation_cost(std::span<const std::string>(), *cs[j])};
  }

  const std::size_t n = sigma.size();
  // Flags of each position against each child, precomputed.
  struct Flags {
    bool sa, ea, a;
  };
  std::vector<std::array<Flags, 2>> flags(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < 2; ++j) {
      flags[i][j] = {cs[j]->is_start(sigma[i]), cs[j]->is_end(sigma[i]),
                     cs[j]->in_alphabet(sigma[i])};
    }
  }

  // Suffix DP over (position, state of child 1, state of child 2).
  std::vector<std::array<std::array<unsigned, 9>, 9>> best(n + 1);
  for (int s1 = 0; s1 < 9; ++s1) {
    for (int s2 = 0; s2 < 9; ++s2) {
      best[n][s1][s2] = and_final_cost(s1, info[0]) + and_final_cost(s2, info[1]);
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (int s1 = 0; s1 < 9; ++s1) {
      for (int s2 = 0; s2 < 9; ++s2) {
        const auto [t1, pay1] = and_transition(s1, flags[i][0].sa, flags[i][0].ea, flags[i][0].a);
        const auto [t2, pay2] = and_transition(s2, flags[i][1].sa, flags[i][1].ea, flags[i][1].a);
        best[i][s1][s2] =
            std::min(pay1 + best[i + 1][t1][s2], pay2 + best[i + 1][s1][t2]);
      }
    }
  }

  // Greedy forward walk; ties prefer child 1.
  SplitAssignment out;
  out.objective = best[0][0][0];
  out.owners.resize(n);
  Trace sub1, sub2;
  int s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [t1, pay1] = and_transition(s1, flags[i][0].sa, flags[i][0].ea, flags[i][0].a);
    const auto [t2, pay2] = and_transition(s2, flags[i][1].sa, flags[i][1].ea, flags[i][1].a);
    if (pay1 + best[i + 1][t1][s2] <= pay2 + best[i + 1][s1][t2]) {
      out.owners[i] = 1;
      sub1.push_back(sigma[i]);
      s1 = t1;
    } else {
      out.owners[i] = 2;
      sub2.push_back(sigma[i]);
      s2 = t2;
    }
  }
  out.parts.push_back({std::move(sub1), 1});
  out.parts.push_back({std::move(sub2), 2});
  return out;
}

namespace {

struct LoopValue {
  unsigned cost = kInf;
  unsigned nseg = kInf;
  bool operator<(const LoopValue& other) const {
    return std::tie(cost, nseg) < std::tie(other.cost, other.nseg);
  }
  bool operator==(const LoopValue& other) const {
    return cost == other.cost && nseg == other.nseg;
  }
};

}  // namespace

SplitAssignment split_loop(const Trace& sigma, const ProcessTree& tree, int v,
                           const std::vector<Characteristics>& chars) {
  const auto& node = tree.node(v);
  const Characteristics& c1 = chars[node.children[0]];
  const Characteristics& c2 = chars[node.children[1]];
  const std::size_t n = sigma.size();

  // Segment costs for every contiguous slice, per child.
  std::vector<std::vector<unsigned>> seg1(n + 1, std::vector<unsigned>(n + 1, 0));
  std::vector<std::vector<unsigned>> seg2 = seg1;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      seg1[i][j] = interpretation_cost(slice(sigma, i, j), c1);
      seg2[i][j] = interpretation_cost(slice(sigma, i, j), c2);
    }
  }

  // g1[i]: best (cost, segments) covering sigma[i..n) starting with a body
  // segment and ending on a body segment; g2[i]: starting with a redo
  // segment. Zero-cost cycles through empty segments strictly increase the
  // segment count, so Bellman iteration over the lexicographic values
  // reaches a fixpoint.
  std::vector<LoopValue> g1(n + 1), g2(n + 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = n + 1; i-- > 0;) {
      LoopValue v2 = g2[i];
      for (std::size_t k = i; k <= n; ++k) {
        if (g1[k].cost >= kInf) continue;
        v2 = std::min(v2, LoopValue{seg2[i][k] + g1[k].cost, 1 + g1[k].nseg});
      }
      if (v2 < g2[i]) {
        g2[i] = v2;
        changed = true;
      }
      LoopValue v1 = std::min(g1[i], LoopValue{seg1[i][n], 1});
      for (std::size_t j = i; j <= n; ++j) {
        if (g2[j].cost >= kInf) continue;
        v1 = std::min(v1, LoopValue{seg1[i][j] + g2[j].cost, 1 + g2[j].nseg});
      }
      if (v1 < g1[i]) {
        g1[i] = v1;
        changed = true;
      }
    }
  }

  SplitAssignment out;
  out.objective = g1[0].cost;
  std::size_t i = 0;
  int child = 1;
  while (true) {
    if (child == 1) {
      if (LoopValue{seg1[i][n], 1} == g1[i]) {
        out.parts.push_back({Trace(sigma.begin() + i, sigma.end()), 1});
        break;
      }
      for (std::size_t j = i; j <= n; ++j) {
        if (g2[j].cost < kInf && LoopValue{seg1[i][j] + g2[j].cost, 1 + g2[j].nseg} == g1[i]) {
          out.parts.push_back({Trace(sigma.begin() + i, sigma.begin() + j), 1});
          i = j;
          child = 2;
          break;
        }
      }
    } else {
      for (std::size_t k = i; k <= n; ++k) {
        if (g1[k].cost < kInf && LoopValue{seg2[i][k] + g1[k].cost, 1 + g1[k].nseg} == g2[i]) {
          out.parts.push_back({Trace(sigma.begin() + i, sigma.begin() + k), 2});
          i = k;
          child = 1;
          break;
        }
      }
    }
  }
  return out;
}

SplitAssignment split_trace(const Trace& sigma, const ProcessTree& tree, int v,
                            const std::vector<Characteristics>& chars) {
  const auto& node = tree.node(v);
  if (node.is_leaf()) throw std::invalid_argument("cannot split on a leaf node");
  switch (node.op) {
    case Operator::Xor: return split_xor(sigma, tree, v, chars);
    case Operator::Seq: return split_seq(sigma, tree, v, chars);
    case Operator::And: return split_and(sigma, tree, v, chars);
    case Operator::Loop: return split_loop(sigma, tree, v, chars);
  }
  throw std::logic_error("unknown operator");
}

}  // namespace treealign
