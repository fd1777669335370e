// Command-line front end: align a log against a process tree (optimal or
// approximate), sweep (TL, TH) grids, synthesize benchmark corpora, and dump
// characteristics tables. All outputs are CSV.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treealign/characteristics.hpp"
#include "treealign/log.hpp"
#include "treealign/runner.hpp"
#include "treealign/synth.hpp"
#include "treealign/tree.hpp"

namespace {

using namespace treealign;

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

struct LoadedModel {
  ProcessTree tree;
  std::vector<Characteristics> chars;
  double precompute_seconds;
};

LoadedModel load_model(const std::string& tree_file) {
  const auto start = std::chrono::steady_clock::now();
  const auto trees = load_tree_file(tree_file);
  if (trees.empty()) throw ParseError("no tree found in " + tree_file, 0);
  ProcessTree tree = binarize(trees.front());
  auto chars = compute_characteristics(tree);
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(tree), std::move(chars),
          std::chrono::duration<double>(stop - start).count()};
}

EventLog load_log(const std::string& log_file, const std::optional<std::string>& case_col,
                  const std::optional<std::string>& act_col,
                  const std::optional<std::string>& ts_col) {
  if (case_col || act_col) {
    if (!case_col || !act_col) {
      throw LogFormatError("--case-column and --activity-column must be given together");
    }
    return load_csv(log_file, *case_col, *act_col, ts_col);
  }
  return load_variants(log_file);
}

std::ostream& open_out(const std::string& out, std::ofstream& file) {
  if (out.empty() || out == "-") return std::cout;
  file.open(out);
  if (!file) throw std::runtime_error("cannot write to " + out);
  return file;
}

int cmd_align(const std::string& tree_file, const std::string& log_file,
              const std::string& mode, std::optional<unsigned> tl, std::optional<unsigned> th,
              const std::string& out, int jobs, const std::optional<std::string>& case_col,
              const std::optional<std::string>& act_col,
              const std::optional<std::string>& ts_col) {
  const LoadedModel model = load_model(tree_file);
  const EventLog log = load_log(log_file, case_col, act_col, ts_col);
  std::cerr << "precompute_seconds," << model.precompute_seconds << '\n';

  ApproxParams params;
  AlignMode align_mode = AlignMode::Optimal;
  if (mode == "approx") {
    align_mode = AlignMode::Approx;
    params = {*tl, *th};
  }
  const auto results =
      run_alignments(model.tree, model.chars, log, align_mode, params, jobs);

  std::ofstream file;
  std::ostream& os = open_out(out, file);
  os << "variant_index,count,cost,time_seconds,alignment\n";
  for (const auto& r : results) {
    os << r.index << ',' << r.count << ',' << r.cost << ',' << r.seconds << ','
       << csv_field(serialize_alignment(r.alignment, model.tree)) << '\n';
  }
  return 0;
}

int cmd_grid(const std::string& tree_file, const std::string& log_file,
             const std::vector<unsigned>& tl_list, const std::vector<unsigned>& th_list,
             const std::string& out, int jobs, const std::optional<std::string>& case_col,
             const std::optional<std::string>& act_col,
             const std::optional<std::string>& ts_col) {
  const LoadedModel model = load_model(tree_file);
  const EventLog log = load_log(log_file, case_col, act_col, ts_col);
  std::cerr << "precompute_seconds," << model.precompute_seconds << '\n';

  const auto rows = run_grid(model.tree, model.chars, log, tl_list, th_list, jobs);
  std::ofstream file;
  std::ostream& os = open_out(out, file);
  os << "mode,TL,TH,avg_cost,avg_time_seconds,n_traces\n";
  for (const auto& row : rows) {
    if (row.is_optimal) {
      os << "optimal,,";
    } else {
      os << "approx," << row.tl << ',' << row.th;
    }
    os << ',' << row.avg_cost << ',' << row.avg_time_seconds << ',' << row.n_traces << '\n';
  }
  return 0;
}

int cmd_characteristics(const std::string& tree_file, const std::string& out) {
  const LoadedModel model = load_model(tree_file);
  std::ofstream file;
  std::ostream& os = open_out(out, file);
  os << "node,A,SA,EA,accepts_empty\n";
  auto joined = [](const std::set<std::string>& s) {
    std::string j;
    for (const auto& a : s) {
      if (!j.empty()) j += ' ';
      j += a;
    }
    return j;
  };
  for (int v = 0; v < model.tree.size(); ++v) {
    const auto& c = model.chars[v];
    os << v << ',' << csv_field(joined(c.alphabet)) << ',' << csv_field(joined(c.starts))
       << ',' << csv_field(joined(c.ends)) << ',' << (c.accepts_empty ? "true" : "false")
       << '\n';
  }
  return 0;
}

int cmd_synthesize(const SynthesisParams& params, const std::string& out_dir) {
  write_corpus(synthesize(params), out_dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alignments between event logs and process trees"};
  app.require_subcommand(1);

  std::string tree_file, log_file, out;
  std::string mode = "optimal";
  std::optional<unsigned> tl, th;
  int jobs = 1;
  std::optional<std::string> case_col, act_col, ts_col;

  auto add_log_flags = [&](CLI::App* cmd) {
    cmd->add_option("--tree", tree_file, "process tree file")->required();
    cmd->add_option("--log", log_file, "event log file")->required();
    cmd->add_option("--out", out, "output CSV path ('-' or empty for stdout)");
    cmd->add_option("--jobs", jobs, "worker threads for variant-level parallelism")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--case-column", case_col, "CSV log: case id column name");
    cmd->add_option("--activity-column", act_col, "CSV log: activity column name");
    cmd->add_option("--timestamp-column", ts_col, "CSV log: timestamp column name");
  };

  auto* align = app.add_subcommand("align", "align every log variant against the tree");
  add_log_flags(align);
  align->add_option("--mode", mode, "optimal or approx")
      ->check(CLI::IsMember({"optimal", "approx"}));
  align->add_option("--tl", tl, "max trace length threshold (approx mode)")
      ->check(CLI::PositiveNumber);
  align->add_option("--th", th, "max tree height threshold (approx mode)")
      ->check(CLI::PositiveNumber);

  std::vector<unsigned> tl_list, th_list;
  auto* grid = app.add_subcommand("grid", "sweep a (TL, TH) grid plus an optimal baseline");
  add_log_flags(grid);
  grid->add_option("--tl", tl_list, "TL values")->required()->check(CLI::PositiveNumber);
  grid->add_option("--th", th_list, "TH values")->required()->check(CLI::PositiveNumber);

  SynthesisParams sp;
  std::string out_dir;
  auto* synth = app.add_subcommand("synthesize", "generate a random tree/log corpus");
  synth->add_option("--seed", sp.seed, "RNG seed");
  synth->add_option("--n-trees", sp.n_trees, "number of trees");
  synth->add_option("--tree-size", sp.tree_size, "target nodes per tree");
  synth->add_option("--n-traces", sp.n_traces, "traces per tree");
  synth->add_option("--noise-prob", sp.noise_prob, "per-event noise probability")
      ->check(CLI::Range(0.0, 1.0));
  synth->add_option("--out-dir", out_dir, "output directory")->required();

  auto* chars = app.add_subcommand("characteristics", "dump the per-node characteristics table");
  chars->add_option("--tree", tree_file, "process tree file")->required();
  chars->add_option("--out", out, "output CSV path ('-' or empty for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (align->parsed() && mode == "approx" && (!tl || !th)) {
    std::cerr << "approx mode requires --tl and --th\n";
    return 2;
  }

  try {
    if (align->parsed()) {
      return cmd_align(tree_file, log_file, mode, tl, th, out, jobs, case_col, act_col,
                       ts_col);
    }
    if (grid->parsed()) {
      return cmd_grid(tree_file, log_file, tl_list, th_list, out, jobs, case_col, act_col,
                      ts_col);
    }
    if (synth->parsed()) return cmd_synthesize(sp, out_dir);
    if (chars->parsed()) return cmd_characteristics(tree_file, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << " (offset " << e.position() << ")\n";
    return 1;
  } catch (const LogFormatError& e) {
    std::cerr << "log format error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
