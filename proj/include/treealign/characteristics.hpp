#pragma once

#include <set>
#include <string>
#include <vector>

#include "treealign/tree.hpp"

namespace treealign {

// Gray-box summary of a subtree: its activity alphabet, the possible start
// and end activities of traces in its language, and whether the empty trace
// is accepted.
struct Characteristics {
  std::set<std::string> alphabet;
  std::set<std::string> starts;
  std::set<std::string> ends;
  bool accepts_empty{false};

  bool in_alphabet(const std::string& a) const { return alphabet.count(a) > 0; }
  bool is_start(const std::string& a) const { return starts.count(a) > 0; }
  bool is_end(const std::string& a) const { return ends.count(a) > 0; }
  bool is_start_and_end(const std::string& a) const { return is_start(a) && is_end(a); }
  bool has_start_end_overlap() const;
};

// One entry per node, computed bottom-up. Requires a binary tree.
std::vector<Characteristics> compute_characteristics(const ProcessTree& tree);

}  // namespace treealign
