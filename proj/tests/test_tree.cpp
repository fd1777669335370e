#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "treealign/tree.hpp"

using namespace treealign;

namespace {
const char* kT0 = "->(*(X(->(a,b),+(c,d)),tau),+(e,a))";
}

TEST_CASE("parse and render round-trip") {
  const ProcessTree t = parse_tree(kT0);
  CHECK(t.render() == kT0);
  CHECK(t.size() == 13);
  CHECK(t.root() == 0);
  CHECK(parse_tree(t.render()) == t);
}

TEST_CASE("unicode operator aliases parse to the same tree") {
  const ProcessTree ascii = parse_tree(kT0);
  const ProcessTree uni =
      parse_tree("\xE2\x86\x92(\xE2\x9F\xB3(\xC3\x97(\xE2\x86\x92(a,b),"
                 "\xE2\x88\xA7(c,d)),\xCF\x84),\xE2\x88\xA7(e,a))");
  CHECK(uni == ascii);
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_tree(" -> ( a , b ) ") == parse_tree("->(a,b)"));
}

TEST_CASE("leaves: tau, identifiers, quoted strings") {
  CHECK(parse_tree("tau").node(0).is_tau());
  CHECK(parse_tree("X").node(0).activity == "X");  // bare X is an activity
  const ProcessTree q = parse_tree("->(\"register request\",\"pay, twice\")");
  CHECK(q.node(1).activity == "register request");
  CHECK(q.node(2).activity == "pay, twice");
  CHECK(parse_tree(q.render()) == q);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("->(a)"), ParseError);        // operator arity
  CHECK_THROWS_AS(parse_tree("*(a,b,c)"), ParseError);     // loop arity
  CHECK_THROWS_AS(parse_tree("->(a,b"), ParseError);       // unclosed
  CHECK_THROWS_AS(parse_tree("->(a,b))"), ParseError);     // trailing junk
  CHECK_THROWS_AS(parse_tree(">>(a,b)"), ParseError);
  try {
    parse_tree("->(a,");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("pre-order indexing, sizes and heights") {
  const ProcessTree t = parse_tree(kT0);
  CHECK(t.height() == 4);
  CHECK(t.subtree_size(0) == 13);
  CHECK(t.subtree_size(1) == 9);   // the loop
  CHECK(t.subtree_size(2) == 7);   // the choice
  CHECK(t.subtree_size(10) == 3);  // +(e,a)
  CHECK(t.node(9).is_tau());
  CHECK(t.height(10) == 1);
  CHECK(t.height(4) == 0);  // leaf
  CHECK(t.leaves(10) == std::vector<int>{11, 12});
  CHECK(t.leaves(3) == std::vector<int>{4, 5});
}

TEST_CASE("subtree extraction reindexes in pre-order") {
  const ProcessTree t = parse_tree(kT0);
  CHECK(t.subtree(2).render() == "X(->(a,b),+(c,d))");
  CHECK(t.subtree(10).render() == "+(e,a)");
  CHECK(t.subtree(4).render() == "a");
}

TEST_CASE("binarize folds n-ary nodes left-deep") {
  const ProcessTree t = binarize(parse_tree("->(a,b,c,d)"));
  CHECK(t.render() == "->(->(->(a,b),c),d)");
  CHECK(t.is_binary());
  const ProcessTree x = binarize(parse_tree("X(a,b,c)"));
  CHECK(x.render() == "X(X(a,b),c)");
  // already-binary trees pass through unchanged
  CHECK(binarize(parse_tree(kT0)) == parse_tree(kT0));
}

TEST_CASE("load_tree_file reads one tree per non-empty line") {
  const std::string path = "trees_tmp.txt";
  {
    std::ofstream out(path);
    out << kT0 << "\n\n->(a,b)\n";
  }
  const auto trees = load_tree_file(path);
  REQUIRE(trees.size() == 2);
  CHECK(trees[0].render() == kT0);
  CHECK(trees[1].render() == "->(a,b)");
  std::remove(path.c_str());
}
