#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treealign {

enum class Operator : uint8_t { Seq, Xor, And, Loop };

// ASCII token of an operator: "->", "X", "+", "*".
std::string_view operator_token(Operator op);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Rooted, ordered tree over seq/xor/and/loop operators with activity and tau
// leaves. Nodes are indexed in depth-first pre-order, so the subtree rooted at
// v occupies the contiguous index range [v, v + subtree_size(v)).
//
// Trees are immutable after construction and safe to share across threads.
class ProcessTree {
 public:
  struct Node {
    enum class Kind : uint8_t { Op, Activity, Tau };
    Kind kind{Kind::Tau};
    Operator op{Operator::Seq};  // meaningful only for Kind::Op
    std::string activity;        // meaningful only for Kind::Activity
    std::vector<int> children;

    bool is_leaf() const { return kind != Kind::Op; }
    bool is_tau() const { return kind == Kind::Tau; }
    bool is_activity() const { return kind == Kind::Activity; }
  };

  static ProcessTree activity_leaf(std::string name);
  static ProcessTree tau_leaf();
  static ProcessTree make(Operator op, std::vector<ProcessTree> children);

  int root() const { return 0; }
  int size() const { return static_cast<int>(nodes_.size()); }
  bool contains(int v) const { return v >= 0 && v < size(); }
  const Node& node(int v) const;

  // Number of nodes in the subtree rooted at v.
  int subtree_size(int v) const;
  // Height in edges on the longest root-leaf path; a single leaf has height 0.
  int height(int v = 0) const;
  // Every operator node has exactly two children.
  bool is_binary() const;
  // Leaf node indices of the subtree rooted at v, in pre-order.
  std::vector<int> leaves(int v = 0) const;

  // Extracted copy of the subtree rooted at v, reindexed in pre-order.
  ProcessTree subtree(int v) const;

  // Canonical textual form (ASCII operator tokens, no whitespace).
  std::string render(int v = 0) const;

  bool operator==(const ProcessTree& other) const;

 private:
  ProcessTree() = default;
  void finalize();

  std::vector<Node> nodes_;
  std::vector<int> sizes_;
  std::vector<int> heights_;

  friend ProcessTree parse_tree(std::string_view);
  friend ProcessTree binarize(const ProcessTree&);
};

// Grammar: tree := leaf | op '(' tree (',' tree)+ ')'
//          op   := '->' | 'X' | '+' | '*'       (seq, xor, and, loop)
//          leaf := 'tau' | identifier | quoted-string
// Whitespace is insignificant. The Unicode glyphs for the operators and tau
// are accepted as input aliases. Loop nodes must have exactly two children.
ProcessTree parse_tree(std::string_view text);

// Language-preserving conversion to a binary tree; n-ary seq/xor/and nodes
// fold left-deep: op(c1,c2,c3) -> op(op(c1,c2),c3).
ProcessTree binarize(const ProcessTree& tree);

// One tree per non-empty line.
std::vector<ProcessTree> load_tree_file(const std::string& path);

}  // namespace treealign
