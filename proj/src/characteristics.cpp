#include "treealign/characteristics.hpp"

#include <algorithm>

namespace treealign {

bool Characteristics::has_start_end_overlap() const {
  for (const auto& a : starts) {
    if (ends.count(a)) return true;
  }
  return false;
}

namespace {

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<Characteristics> compute_characteristics(const ProcessTree& tree) {
  if (!tree.is_binary()) {
    throw std::invalid_argument("characteristics require a binary tree; binarize first");
  }
  std::vector<Characteristics> table(tree.size());
  // Pre-order indexing: children have larger indices, so a reverse sweep is
  // bottom-up.
  for (int v = tree.size() - 1; v >= 0; --v) {
    const auto& node = tree.node(v);
    Characteristics& c = table[v];
    if (node.is_tau()) {
      c.accepts_empty = true;
      continue;
    }
    if (node.is_activity()) {
      c.alphabet = {node.activity};
      c.starts = {node.activity};
      c.ends = {node.activity};
      c.accepts_empty = false;
      continue;
    }
    const Characteristics& c1 = table[node.children[0]];
    const Characteristics& c2 = table[node.children[1]];
    c.alphabet = set_union(c1.alphabet, c2.alphabet);
    switch (node.op) {
      case Operator::Seq:
        c.starts = c1.accepts_empty ? set_union(c1.starts, c2.starts) : c1.starts;
        c.ends = c2.accepts_empty ? set_union(c1.ends, c2.ends) : c2.ends;
        c.accepts_empty = c1.accepts_empty && c2.accepts_empty;
        break;
      case Operator::Xor:
        c.starts = set_union(c1.starts, c2.starts);
        c.ends = set_union(c1.ends, c2.ends);
        c.accepts_empty = c1.accepts_empty || c2.accepts_empty;
        break;
      case Operator::And:
        c.starts = set_union(c1.starts, c2.starts);
        c.ends = set_union(c1.ends, c2.ends);
        c.accepts_empty = c1.accepts_empty && c2.accepts_empty;
        break;
      case Operator::Loop:
        c.starts = c1.accepts_empty ? set_union(c1.starts, c2.starts) : c1.starts;
        c.ends = c1.accepts_empty ? set_union(c1.ends, c2.ends) : c1.ends;
        c.accepts_empty = c1.accepts_empty;
        break;
    }
  }
  return table;
}

}  // namespace treealign
