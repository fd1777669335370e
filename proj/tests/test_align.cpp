#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "treealign/align.hpp"
#include "treealign/semantics.hpp"
#include "treealign/synth.hpp"
#include "treealign/tree.hpp"

using namespace treealign;

namespace {
const char* kT0 = "->(*(X(->(a,b),+(c,d)),tau),+(e,a))";
}

TEST_CASE("execution semantics: choice exposes both leaves initially") {
  const ProcessTree t = parse_tree("X(a,b)");
  const Semantics sem(t);
  const auto steps = sem.successors(sem.initial());
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].leaf == 1);
  CHECK(steps[1].leaf == 2);
  // committing to one branch disables the other
  CHECK(sem.successors(steps[0].next).empty());
  CHECK(sem.is_final(steps[0].next));
}

TEST_CASE("execution semantics: parallel admits both orders") {
  const ProcessTree t = parse_tree("+(e,a)");
  const Semantics sem(t);
  std::set<Trace> words;
  auto walk = [&](auto&& self, const ExecutionState& s, Trace& w) -> void {
    if (sem.is_final(s)) words.insert(w);
    for (const auto& step : sem.successors(s)) {
      w.push_back(t.node(step.leaf).activity);
      self(self, step.next, w);
      w.pop_back();
    }
  };
  Trace w;
  walk(walk, sem.initial(), w);
  CHECK(words == std::set<Trace>{{"e", "a"}, {"a", "e"}});
}

TEST_CASE("execution semantics: loop redo rounds") {
  const ProcessTree t = parse_tree("*(->(a,b),+(c,d))");
  const Semantics sem(t);
  // enumerate words of <= 3 rounds and check memberships
  std::set<Trace> words;
  auto walk = [&](auto&& self, const ExecutionState& s, Trace& w) -> void {
    if (w.size() > 8) return;
    if (sem.is_final(s)) words.insert(w);
    for (const auto& step : sem.successors(s)) {
      const auto& node = t.node(step.leaf);
      if (!node.is_tau()) w.push_back(node.activity);
      self(self, step.next, w);
      if (!node.is_tau()) w.pop_back();
    }
  };
  Trace w;
  walk(walk, sem.initial(), w);
  CHECK(words.count({"a", "b"}) == 1);
  CHECK(words.count({"a", "b", "c", "d", "a", "b"}) == 1);
  CHECK(words.count({"a", "b", "d", "c", "a", "b"}) == 1);
  CHECK(words.count({"a", "b", "a", "b"}) == 0);  // redo is mandatory between rounds
  CHECK(words.count({}) == 0);
}

TEST_CASE("optimal alignment reproduces the running example") {
  const ProcessTree t = parse_tree(kT0);
  const Trace sigma = {"a", "b", "c", "f"};
  const Alignment al = optimal_align(sigma, t);
  CHECK(al.cost == 4);
  CHECK(alignment_cost(al.moves) == 4);
  CHECK(validate_alignment(sigma, t, al));
}

TEST_CASE("fitting trace aligns at zero cost") {
  const ProcessTree t = parse_tree(kT0);
  const Trace sigma = {"a", "b", "e", "a"};
  const Alignment al = optimal_align(sigma, t);
  CHECK(al.cost == 0);
  CHECK(validate_alignment(sigma, t, al));
}

TEST_CASE("empty trace against a single activity leaf") {
  const ProcessTree t = parse_tree("a");
  const Alignment al = optimal_align({}, t);
  CHECK(al.cost == 1);
  REQUIRE(al.moves.size() == 1);
  CHECK(al.moves[0].kind == MoveKind::VisibleModel);
}

TEST_CASE("log-only alignment against a tau leaf validates") {
  const ProcessTree t = parse_tree("tau");
  Alignment al;
  al.moves = {Move::log("a")};
  al.cost = alignment_cost(al.moves);
  CHECK(al.cost == 1);
  CHECK(validate_alignment({"a"}, t, al));
  CHECK(optimal_align({"a"}, t).cost == 1);
}

TEST_CASE("validation rejects broken alignments") {
  const ProcessTree t = parse_tree(kT0);
  const Trace sigma = {"a", "b", "c", "f"};
  Alignment al = optimal_align(sigma, t);

  Alignment dropped = al;
  for (std::size_t i = 0; i < dropped.moves.size(); ++i) {
    if (dropped.moves[i].kind == MoveKind::Sync) {
      dropped.moves.erase(dropped.moves.begin() + static_cast<long>(i));
      break;
    }
  }
  CHECK_FALSE(validate_alignment(sigma, t, dropped));

  Alignment mislabeled = al;
  mislabeled.moves.push_back(Move::sync("b", 4));  // leaf 4 is labeled a
  CHECK_FALSE(validate_alignment(sigma, t, mislabeled));

  Alignment bad_leaf = al;
  bad_leaf.moves.push_back(Move::visible(9));  // tau leaf as visible move
  CHECK_FALSE(validate_alignment(sigma, t, bad_leaf));
}

TEST_CASE("serialization forms") {
  const ProcessTree t = parse_tree("->(a,tau)");
  Alignment al;
  al.moves = {Move::sync("a", 1), Move::invisible(2), Move::log("x")};
  al.cost = alignment_cost(al.moves);
  CHECK(serialize_alignment(al, t) == "a|a(n1) >>|tau(n2) x|>>");
  const std::string table = alignment_table(al, t);
  CHECK(table.find('\n') != std::string::npos);
  const std::string json = alignment_json(al, t);
  CHECK(json.find("\"sync\"") != std::string::npos);
  CHECK(json.find("\"invisible_model\"") != std::string::npos);
}

TEST_CASE("zero cost exactly on language members (loop-free trees)") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> pool = {"a", "b", "c"};
  int done = 0;
  while (done < 40) {
    ProcessTree t = random_tree(rng, 7, pool);
    bool has_loop = false;
    for (int v = 0; v < t.size(); ++v) {
      if (!t.node(v).is_leaf() && t.node(v).op == Operator::Loop) has_loop = true;
    }
    if (has_loop) continue;
    std::set<Trace> lang;
    if (!oracles::enumerate_language(t, t.root(), 0, lang, 2000)) continue;
    ++done;

    // the optimum equals the insert/delete edit distance to the language
    for (int k = 0; k < 5; ++k) {
      Trace sigma = sample_trace(t, rng);
      sigma = apply_noise(sigma, rng, 0.4, pool);
      const Alignment al = optimal_align(sigma, t);
      CHECK(validate_alignment(sigma, t, al));
      unsigned best = ~0u;
      for (const auto& w : lang) best = std::min(best, oracles::indel_distance(sigma, w));
      CHECK(al.cost == best);
      CHECK((al.cost == 0) == (lang.count(sigma) == 1));
    }
  }
}

TEST_CASE("empty trace cost is zero exactly when the tree accepts it") {
  std::mt19937_64 rng(13);
  const std::vector<std::string> pool = {"a", "b"};
  for (int k = 0; k < 30; ++k) {
    const ProcessTree t = random_tree(rng, 7, pool);
    const auto chars = compute_characteristics(t);
    const Alignment al = optimal_align({}, t);
    CHECK((al.cost == 0) == chars[0].accepts_empty);
  }
}
