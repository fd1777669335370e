// Independent brute-force reference implementations used only by the tests.
// Everything here is exponential and meant for small instances.
#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "treealign/characteristics.hpp"
#include "treealign/interpretation.hpp"
#include "treealign/trace.hpp"
#include "treealign/tree.hpp"

namespace oracles {

using treealign::Characteristics;
using treealign::Trace;

inline unsigned levenshtein(const Trace& a, const Trace& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<unsigned> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<unsigned>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<unsigned>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const unsigned sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// Edit distance with insertions and deletions only (no substitutions). This
// is the alignment cost between a trace and a fixed model word: a mismatch
// needs a log move plus a model move.
inline unsigned indel_distance(const Trace& a, const Trace& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<unsigned> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<unsigned>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<unsigned>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1]
                                    : std::min(prev[j], cur[j - 1]) + 1;
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// Language of the subtree at v with every loop unrolled 0..`unroll` redo
// rounds. Exact for loop-free trees. Returns an empty optional-like flag via
// the `overflow` out-parameter when the set exceeds `cap`.
inline bool enumerate_language(const treealign::ProcessTree& tree, int v, int unroll,
                               std::set<Trace>& out, std::size_t cap = 20000) {
  const auto& node = tree.node(v);
  out.clear();
  if (node.is_tau()) {
    out.insert(Trace{});
    return true;
  }
  if (node.is_activity()) {
    out.insert(Trace{node.activity});
    return true;
  }
  std::set<Trace> l1, l2;
  if (!enumerate_language(tree, node.children[0], unroll, l1, cap)) return false;
  if (!enumerate_language(tree, node.children[1], unroll, l2, cap)) return false;

  auto concat = [&](const std::set<Trace>& xs, const std::set<Trace>& ys,
                    std::set<Trace>& into) {
    for (const auto& x : xs)
      for (const auto& y : ys) {
        Trace w = x;
        w.insert(w.end(), y.begin(), y.end());
        into.insert(std::move(w));
        if (into.size() > cap) return false;
      }
    return true;
  };

  switch (node.op) {
    case treealign::Operator::Seq:
      return concat(l1, l2, out);
    case treealign::Operator::Xor:
      out = l1;
      out.insert(l2.begin(), l2.end());
      return out.size() <= cap;
    case treealign::Operator::And: {
      // All interleavings of each pair.
      std::vector<std::string> buf;
      auto shuffle = [&](auto&& self, const Trace& x, std::size_t i, const Trace& y,
                         std::size_t j) -> bool {
        if (i == x.size() && j == y.size()) {
          out.insert(Trace(buf.begin(), buf.end()));
          return out.size() <= cap;
        }
        if (i < x.size()) {
          buf.push_back(x[i]);
          if (!self(self, x, i + 1, y, j)) return false;
          buf.pop_back();
        }
        if (j < y.size()) {
          buf.push_back(y[j]);
          if (!self(self, x, i, y, j + 1)) return false;
          buf.pop_back();
        }
        return true;
      };
      for (const auto& x : l1)
        for (const auto& y : l2) {
          buf.clear();
          if (!shuffle(shuffle, x, 0, y, 0)) return false;
        }
      return true;
    }
    case treealign::Operator::Loop: {
      std::set<Trace> rounds = l1;  // body, then 0..unroll redo rounds
      out = l1;
      for (int r = 0; r < unroll; ++r) {
        std::set<Trace> next;
        std::set<Trace> tmp;
        if (!concat(rounds, l2, tmp)) return false;
        if (!concat(tmp, l1, next)) return false;
        out.insert(next.begin(), next.end());
        if (out.size() > cap) return false;
        rounds = std::move(next);
      }
      return true;
    }
  }
  return false;
}

// The trace set accepted by the liberal interpretation of characteristics c,
// cut off at `max_len` events.
inline std::set<Trace> interpretation_cut(const Characteristics& c, std::size_t max_len) {
  std::set<Trace> out;
  if (c.accepts_empty) out.insert(Trace{});
  const std::vector<std::string> alpha(c.alphabet.begin(), c.alphabet.end());
  for (const auto& s : c.starts) {
    if (c.ends.count(s)) out.insert(Trace{s});
  }
  for (std::size_t len = 2; len <= max_len; ++len) {
    const std::size_t mid = len - 2;
    std::vector<std::size_t> idx(mid, 0);
    while (true) {
      Trace middle;
      for (std::size_t k = 0; k < mid; ++k) middle.push_back(alpha[idx[k]]);
      for (const auto& s : c.starts)
        for (const auto& e : c.ends) {
          Trace w{s};
          w.insert(w.end(), middle.begin(), middle.end());
          w.push_back(e);
          out.insert(std::move(w));
        }
      if (mid == 0 || alpha.empty()) break;
      std::size_t k = 0;
      while (k < mid && ++idx[k] == alpha.size()) idx[k++] = 0;
      if (k == mid) break;
    }
    if (alpha.empty() && mid > 0) break;
  }
  return out;
}

inline unsigned min_levenshtein_to(const Trace& sigma, const std::set<Trace>& words) {
  unsigned best = static_cast<unsigned>(sigma.size()) + 2;  // delete all, insert s,e
  for (const auto& w : words) best = std::min(best, levenshtein(sigma, w));
  return best;
}

// Minimum summed interpretation cost over all complementary-subsequence
// splittings (one subsequence per child), by exhaustive subset enumeration.
inline unsigned brute_and_objective(const Trace& sigma, const Characteristics& c1,
                                    const Characteristics& c2) {
  const std::size_t n = sigma.size();
  unsigned best = ~0u;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Trace s1, s2;
    for (std::size_t i = 0; i < n; ++i) {
      (mask >> i & 1 ? s2 : s1).push_back(sigma[i]);
    }
    best = std::min(best, treealign::interpretation_cost(s1, c1) +
                              treealign::interpretation_cost(s2, c2));
  }
  return best;
}

// Minimum summed interpretation cost over all odd contiguous segmentations
// alternating child 1, child 2, child 1, ... (possibly empty segments, at
// most 2n+1 of them).
inline unsigned brute_loop_objective(const Trace& sigma, const Characteristics& c1,
                                     const Characteristics& c2) {
  const std::size_t n = sigma.size();
  unsigned best = ~0u;
  std::vector<std::size_t> cuts;
  auto eval = [&]() {
    unsigned total = 0;
    std::size_t from = 0;
    for (std::size_t k = 0; k <= cuts.size(); ++k) {
      const std::size_t to = k < cuts.size() ? cuts[k] : n;
      const std::span<const std::string> part(sigma.data() + from, to - from);
      total += treealign::interpretation_cost(part, k % 2 == 0 ? c1 : c2);
      from = to;
    }
    best = std::min(best, total);
  };
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t low) -> void {
    if (remaining == 0) {
      eval();
      return;
    }
    for (std::size_t p = low; p <= n; ++p) {
      cuts.push_back(p);
      self(self, remaining - 1, p);
      cuts.pop_back();
    }
  };
  for (std::size_t j = 0; j <= n; ++j) rec(rec, 2 * j, 0);
  return best;
}

}  // namespace oracles
