#include "treealign/tree.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>

namespace treealign {

namespace {

struct TempNode {
  ProcessTree::Node::Kind kind{ProcessTree::Node::Kind::Tau};
  Operator op{Operator::Seq};
  std::string activity;
  std::vector<std::unique_ptr<TempNode>> children;
};

void flatten(const TempNode& t, std::vector<ProcessTree::Node>& out) {
  ProcessTree::Node n;
  n.kind = t.kind;
  n.op = t.op;
  n.activity = t.activity;
  const int self = static_cast<int>(out.size());
  out.push_back(std::move(n));
  for (const auto& child : t.children) {
    out[self].children.push_back(static_cast<int>(out.size()));
    flatten(*child, out);
  }
}

bool needs_quoting(std::string_view name) {
  if (name.empty() || name == "tau") return true;
  for (char c : name) {
    if (c == '(' || c == ')' || c == ',' || c == '"' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view operator_token(Operator op) {
  switch (op) {
    case Operator::Seq: return "->";
    case Operator::Xor: return "X";
    case Operator::And: return "+";
    case Operator::Loop: return "*";
  }
  return "?";
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

const ProcessTree::Node& ProcessTree::node(int v) const {
  if (!contains(v)) throw std::out_of_range("unknown node index " + std::to_string(v));
  return nodes_[v];
}

int ProcessTree::subtree_size(int v) const {
  if (!contains(v)) throw std::out_of_range("unknown node index " + std::to_string(v));
  return sizes_[v];
}

int ProcessTree::height(int v) const {
  if (!contains(v)) throw std::out_of_range("unknown node index " + std::to_string(v));
  return heights_[v];
}

bool ProcessTree::is_binary() const {
  for (const auto& n : nodes_) {
    if (!n.is_leaf() && n.children.size() != 2) return false;
  }
  return true;
}

std::vector<int> ProcessTree::leaves(int v) const {
  const int end = v + subtree_size(v);
  std::vector<int> out;
  for (int u = v; u < end; ++u) {
    if (nodes_[u].is_leaf()) out.push_back(u);
  }
  return out;
}

ProcessTree ProcessTree::subtree(int v) const {
  const int n = subtree_size(v);
  ProcessTree out;
  out.nodes_.reserve(n);
  for (int u = v; u < v + n; ++u) {
    Node copy = nodes_[u];
    for (int& c : copy.children) c -= v;
    out.nodes_.push_back(std::move(copy));
  }
  out.finalize();
  return out;
}

std::string ProcessTree::render(int v) const {
  const Node& n = node(v);
  if (n.is_tau()) return "tau";
  if (n.is_activity()) {
    if (!needs_quoting(n.activity)) return n.activity;
    std::string quoted = "\"";
    for (char c : n.activity) {
      if (c == '"' || c == '\\') quoted += '\\';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }
  std::string out{operator_token(n.op)};
  out += '(';
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i > 0) out += ',';
    out += render(n.children[i]);
  }
  out += ')';
  return out;
}

bool ProcessTree::operator==(const ProcessTree& other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& a = nodes_[i];
    const Node& b = other.nodes_[i];
    if (a.kind != b.kind || a.children != b.children) return false;
    if (a.kind == Node::Kind::Op && a.op != b.op) return false;
    if (a.kind == Node::Kind::Activity && a.activity != b.activity) return false;
  }
  return true;
}

void ProcessTree::finalize() {
  const int n = size();
  sizes_.assign(n, 1);
  heights_.assign(n, 0);
  for (int v = n - 1; v >= 0; --v) {
    const Node& node = nodes_[v];
    if (node.is_leaf()) {
      if (!node.children.empty()) throw std::invalid_argument("leaf node with children");
      continue;
    }
    if (node.children.size() < 2) {
      throw std::invalid_argument("operator node with fewer than 2 children");
    }
    if (node.op == Operator::Loop && node.children.size() != 2) {
      throw std::invalid_argument("loop node must have exactly 2 children");
    }
    for (int c : node.children) {
      sizes_[v] += sizes_[c];
      heights_[v] = std::max(heights_[v], heights_[c] + 1);
    }
  }
}

ProcessTree ProcessTree::activity_leaf(std::string name) {
  ProcessTree t;
  Node n;
  n.kind = Node::Kind::Activity;
  n.activity = std::move(name);
  t.nodes_.push_back(std::move(n));
  t.finalize();
  return t;
}

ProcessTree ProcessTree::tau_leaf() {
  ProcessTree t;
  t.nodes_.emplace_back();
  t.finalize();
  return t;
}

ProcessTree ProcessTree::make(Operator op, std::vector<ProcessTree> children) {
  ProcessTree t;
  Node root;
  root.kind = Node::Kind::Op;
  root.op = op;
  t.nodes_.push_back(std::move(root));
  for (const ProcessTree& child : children) {
    const int offset = t.size();
    t.nodes_[0].children.push_back(offset);
    for (int u = 0; u < child.size(); ++u) {
      Node copy = child.nodes_[u];
      for (int& c : copy.children) c += offset;
      t.nodes_.push_back(std::move(copy));
    }
  }
  t.finalize();
  return t;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<TempNode> parse() {
    auto node = parse_tree();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input after tree", pos_);
    return node;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  std::unique_ptr<TempNode> parse_tree() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);

    const std::size_t start = pos_;
    Operator op;
    if (try_parse_operator(op)) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') return parse_operator_node(op, start);
      // Not followed by '(': only 'X' is also a plausible activity name.
      pos_ = start;
    }
    return parse_leaf();
  }

  bool try_parse_operator(Operator& op) {
    if (try_consume("->") || try_consume("\xE2\x86\x92")) { op = Operator::Seq; return true; }
    if (try_consume("X") || try_consume("\xC3\x97")) { op = Operator::Xor; return true; }
    if (try_consume("+") || try_consume("\xE2\x88\xA7")) { op = Operator::And; return true; }
    if (try_consume("*") || try_consume("\xE2\x9F\xB3")) { op = Operator::Loop; return true; }
    return false;
  }

  std::unique_ptr<TempNode> parse_operator_node(Operator op, std::size_t start) {
    ++pos_;  // '('
    auto node = std::make_unique<TempNode>();
    node->kind = ProcessTree::Node::Kind::Op;
    node->op = op;
    node->children.push_back(parse_tree());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      node->children.push_back(parse_tree());
      skip_ws();
    }
    if (pos_ >= text_.size() || text_[pos_] != ')') {
      throw ParseError("expected ',' or ')'", pos_);
    }
    ++pos_;
    if (node->children.size() < 2) {
      throw ParseError("operator requires at least 2 children", start);
    }
    if (op == Operator::Loop && node->children.size() != 2) {
      throw ParseError("loop requires exactly 2 children", start);
    }
    return node;
  }

  std::unique_ptr<TempNode> parse_leaf() {
    skip_ws();
    const std::size_t start = pos_;
    std::string name;
    if (text_[pos_] == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        name += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated quoted string", start);
      ++pos_;
    } else {
      while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (c == '(' || c == ')' || c == ',' || c == '"' ||
            std::isspace(static_cast<unsigned char>(c))) {
          break;
        }
        name += c;
        ++pos_;
      }
    }
    auto node = std::make_unique<TempNode>();
    if (name == "tau" || name == "\xCF\x84") {
      node->kind = ProcessTree::Node::Kind::Tau;
      return node;
    }
    if (name.empty()) throw ParseError("expected a leaf label", start);
    if (name == ">>") throw ParseError("activity name '>>' is reserved", start);
    node->kind = ProcessTree::Node::Kind::Activity;
    node->activity = std::move(name);
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::unique_ptr<TempNode> to_temp(const ProcessTree& tree, int v) {
  const auto& n = tree.node(v);
  auto out = std::make_unique<TempNode>();
  out->kind = n.kind;
  out->op = n.op;
  out->activity = n.activity;
  for (int c : n.children) out->children.push_back(to_temp(tree, c));
  return out;
}

void binarize_in_place(TempNode& node) {
  for (auto& c : node.children) binarize_in_place(*c);
  while (node.children.size() > 2) {
    auto folded = std::make_unique<TempNode>();
    folded->kind = ProcessTree::Node::Kind::Op;
    folded->op = node.op;
    folded->children.push_back(std::move(node.children[0]));
    folded->children.push_back(std::move(node.children[1]));
    node.children.erase(node.children.begin());
    node.children[0] = std::move(folded);
  }
}

}  // namespace

ProcessTree parse_tree(std::string_view text) {
  Parser parser(text);
  auto temp = parser.parse();
  ProcessTree tree;
  flatten(*temp, tree.nodes_);
  tree.finalize();
  return tree;
}

ProcessTree binarize(const ProcessTree& tree) {
  auto temp = to_temp(tree, tree.root());
  binarize_in_place(*temp);
  ProcessTree out;
  flatten(*temp, out.nodes_);
  out.finalize();
  return out;
}

std::vector<ProcessTree> load_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tree file: " + path);
  std::vector<ProcessTree> trees;
  std::string line;
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
    }
    if (blank) continue;
    trees.push_back(parse_tree(line));
  }
  return trees;
}

}  // namespace treealign
