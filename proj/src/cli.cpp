#include "consec/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "consec/analysis.hpp"
#include "consec/dataio.hpp"
#include "consec/miner.hpp"
#include "consec/oracle.hpp"
#include "consec/syngen.hpp"

namespace consec {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct MineOptions {
  std::string in;
  std::string out;
  double rho = 1.0;
  double sigma = 0.5;
  double minsup = 0.0;
  double hc = 0.0;
  double alpha = 1.0;
  std::optional<std::size_t> eta;
  std::string mode = "normal";
  bool no_mas = false;
  unsigned threads = 1;
};

void add_mining_flags(CLI::App* cmd, MineOptions& o) {
  cmd->add_option("--in", o.in, "Transaction file")->required();
  cmd->add_option("--out", o.out, "Pattern file (default: stdout)");
  cmd->add_option("--rho", o.rho, "Reward increment per hit")->capture_default_str();
  cmd->add_option("--sigma", o.sigma, "Reward decay per miss")->capture_default_str();
  cmd->add_option("--minsup", o.minsup, "Minimum consecutive support")->required();
  cmd->add_option("--hc", o.hc, "Minimum h-confidence (0 disables)")->capture_default_str();
  cmd->add_option("--eta", o.eta, "Exact pattern length");
}

MiningConfig to_config(const MineOptions& o) {
  MiningConfig c;
  c.minsup = o.minsup;
  c.params = {o.rho, o.sigma};
  c.h_c = o.hc;
  c.alpha = o.alpha;
  c.eta = o.eta;
  c.mode = as_usage([&] { return parse_prune_mode(o.mode); });
  c.exact_depth_with_mas = !o.no_mas;
  c.threads = o.threads;
  as_usage([&] {
    c.validate();
    return 0;
  });
  return c;
}

void record_config(Manifest& m, const MiningConfig& c) {
  m.set("rho", format_number(c.params.rho));
  m.set("sigma", format_number(c.params.sigma));
  m.set("minsup", format_number(c.minsup));
  m.set("hc", format_number(c.h_c));
  m.set("eta", c.eta ? std::to_string(*c.eta) : "none");
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

void print_stats(std::ostream& err, const MiningStats& s) {
  err << "candidates=" << s.candidates << " containment_checks=" << s.containment_checks
      << " mas_prunes=" << s.mas_prunes << " depth_prunes=" << s.depth_prunes
      << " hyperclique_prunes=" << s.hyperclique_prunes << " infrequent=" << s.infrequent << '\n';
}

int cmd_gen(const std::string& scenario, std::uint64_t seed, const std::string& out_path,
            std::optional<std::size_t> transactions, std::optional<Item> items, std::optional<double> background,
            std::ostream& out) {
  const Scenario kind = as_usage([&] { return parse_scenario(scenario); });
  auto spec = ScenarioSpec::defaults(kind, seed, transactions.value_or(1000), items.value_or(100));
  if (background) spec.background_density = *background;
  as_usage([&] {
    spec.validate();
    return 0;
  });

  const Database db = generate(spec);
  Manifest m;
  m.set("command", "gen");
  m.set("scenario", std::string(to_string(spec.scenario)));
  m.set("seed", std::to_string(spec.seed));
  m.set("transactions", std::to_string(spec.num_transactions));
  m.set("items", std::to_string(spec.num_items));
  m.set("background", format_number(spec.background_density));
  std::ostringstream ss;
  m.write(ss);
  ss << serialize_transactions(db);
  emit(out_path, ss.str(), out);
  return kExitOk;
}

int cmd_mine(const MineOptions& o, std::ostream& out, std::ostream& err) {
  const MiningConfig config = to_config(o);
  const Database db = parse_transactions(read_file(o.in));
  const MiningResult result = mine(db, config);

  Manifest m;
  m.set("command", "mine");
  m.set("input", o.in);
  record_config(m, config);
  m.set("alpha", format_number(config.alpha));
  m.set("mode", std::string(to_string(config.mode)));
  m.set("exact_depth_mas", config.exact_depth_with_mas ? "1" : "0");
  m.set("patterns", std::to_string(result.patterns.size()));
  std::ostringstream ss;
  write_patterns(ss, m, result.patterns);
  emit(o.out, ss.str(), out);
  print_stats(err, result.stats);
  return kExitOk;
}

int cmd_oracle(const MineOptions& o, std::optional<std::size_t> max_size, bool force, std::ostream& out) {
  const MiningConfig config = to_config(o);
  const Database db = parse_transactions(read_file(o.in));
  const std::size_t size = max_size.value_or(db.num_items());
  const auto patterns = as_usage([&] { return brute_force_mine(db, config, size, force); });

  Manifest m;
  m.set("command", "oracle");
  m.set("input", o.in);
  record_config(m, config);
  m.set("max_size", std::to_string(size));
  m.set("patterns", std::to_string(patterns.size()));
  std::ostringstream ss;
  write_patterns(ss, m, patterns);
  emit(o.out, ss.str(), out);
  return kExitOk;
}

int cmd_graph(const std::string& patterns_path, const std::string& in, std::optional<std::size_t> k,
              const std::string& out_path, std::ostream& out) {
  if (k && *k == 0) throw UsageError("k must be >= 1");
  const PatternFile file = parse_patterns(read_file(patterns_path));
  const Database db = parse_transactions(read_file(in));
  const auto selected = k ? top_k(file.patterns, *k) : file.patterns;
  const auto graph = occurrence_graph(selected, db);

  Manifest m;
  m.set("command", "graph");
  m.set("patterns", patterns_path);
  m.set("input", in);
  for (const char* key : {"minsup", "rho", "sigma", "hc", "eta", "mode"}) {
    if (auto v = file.manifest.get(key)) m.set(key, *v);
  }
  m.set("k", k ? std::to_string(*k) : "all");
  m.set("selected", std::to_string(selected.size()));
  std::ostringstream ss;
  write_occurrence_graph(ss, m, graph);
  emit(out_path, ss.str(), out);
  return kExitOk;
}

int cmd_threshold(const std::string& in, const std::string& direction, double threshold,
                  const std::string& out_path, std::ostream& out) {
  ThresholdSpec spec;
  spec.direction = as_usage([&] { return parse_direction(direction); });
  spec.threshold = threshold;
  as_usage([&] {
    spec.validate();
    return 0;
  });
  const auto mx = parse_matrix(read_file(in));
  const Database db = threshold_matrix(mx, spec);

  Manifest m;
  m.set("command", "threshold");
  m.set("input", in);
  m.set("direction", direction);
  m.set("threshold", format_number(threshold));
  std::ostringstream ss;
  m.write(ss);
  ss << serialize_transactions(db);
  emit(out_path, ss.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consecutive-support frequent itemset mining", "consec"};
  app.require_subcommand(1);

  std::string scenario;
  std::uint64_t seed = 1;
  std::string gen_out;
  std::optional<std::size_t> gen_transactions;
  std::optional<Item> gen_items;
  std::optional<double> gen_background;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic cafe dataset");
  gen->add_option("--scenario", scenario, "food_drink or coffee_cookie")->required();
  gen->add_option("--seed", seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Transaction file (default: stdout)");
  gen->add_option("--transactions", gen_transactions, "Number of transactions");
  gen->add_option("--items", gen_items, "Item universe size");
  gen->add_option("--background", gen_background, "Background item density");

  MineOptions mine_opts;
  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent itemsets under consecutive support");
  add_mining_flags(mine_cmd, mine_opts);
  mine_cmd->add_option("--alpha", mine_opts.alpha, "MAS relaxation factor (mas-alpha mode)")->capture_default_str();
  mine_cmd->add_option("--mode", mine_opts.mode, "normal, mas, mas-alpha or exact-depth")->capture_default_str();
  mine_cmd->add_flag("--no-mas", mine_opts.no_mas, "exact-depth: count without the MAS scan");
  mine_cmd->add_option("--threads", mine_opts.threads, "Worker threads")->capture_default_str();

  MineOptions oracle_opts;
  std::optional<std::size_t> max_size;
  bool force = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference mining (small inputs)");
  add_mining_flags(oracle, oracle_opts);
  oracle->add_option("--max-size", max_size, "Largest itemset size enumerated (default: all)");
  oracle->add_flag("--force", force, "Allow more than 20 items");

  std::string patterns_path;
  std::string graph_in;
  std::string graph_out;
  std::optional<std::size_t> k;
  auto* graph = app.add_subcommand("graph", "Occurrence graph of a pattern file over a database");
  graph->add_option("--patterns", patterns_path, "Pattern file")->required();
  graph->add_option("--in", graph_in, "Transaction file")->required();
  graph->add_option("--k", k, "Use only the k highest-support patterns");
  graph->add_option("--out", graph_out, "Graph file (default: stdout)");

  std::string th_in;
  std::string th_out;
  std::string direction = "gains";
  double threshold = 0.225;
  auto* th = app.add_subcommand("threshold", "Turn a measurement matrix into transactions");
  th->add_option("--in", th_in, "Delimited matrix file")->required();
  th->add_option("--direction", direction, "gains or losses")->capture_default_str();
  th->add_option("--threshold", threshold, "Deviation threshold")->capture_default_str();
  th->add_option("--out", th_out, "Transaction file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(scenario, seed, gen_out, gen_transactions, gen_items, gen_background, out);
    if (mine_cmd->parsed()) return cmd_mine(mine_opts, out, err);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, max_size, force, out);
    if (graph->parsed()) return cmd_graph(patterns_path, graph_in, k, graph_out, out);
    if (th->parsed()) return cmd_threshold(th_in, direction, threshold, th_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace consec
