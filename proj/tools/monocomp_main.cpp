#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "monocomp/monocomp.hpp"

namespace {

using namespace monocomp;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot write '" + path + "'");
  out << content;
}

std::vector<std::int64_t> parse_grid(const std::string& csv) {
  std::vector<std::int64_t> grid;
  std::istringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    try {
      grid.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw config_error("bad n value '" + part + "'");
    }
  }
  return grid;
}

Model require_model(const std::string& name) {
  const auto m = model_from_string(name);
  if (!m) throw config_error("unknown model '" + name + "' (pairing, hamilton-sum, kout)");
  return *m;
}

struct GenArgs {
  std::string model = "hamilton-sum";
  std::int64_t n = 0;
  int r = 2;
  int d = 0;
  int k = 0;
  Seed seed = 1;
};

MultiGraph generate_graph(const GenArgs& a) {
  switch (require_model(a.model)) {
    case Model::pairing:
      return pairing_model(static_cast<int>(a.n), a.d > 0 ? a.d : 2 * a.r, a.seed);
    case Model::hamilton_sum:
      return hamilton_sum(static_cast<int>(a.n), a.r, a.seed).graph;
    case Model::kout:
      return kout_sum(static_cast<int>(a.n), a.k > 0 ? a.k : a.r, a.seed).graph;
  }
  throw config_error("unreachable");
}

int cmd_generate(const GenArgs& a, const std::string& out) {
  write_output(out, write_graph(generate_graph(a)));
  return 0;
}

int cmd_color(const GenArgs& a, const std::string& out, const std::string& graph_out,
              const std::string& sidecar, const ExponentParams& exps) {
  nlohmann::ordered_json meta;
  meta["model"] = a.model;
  meta["n"] = a.n;
  meta["r"] = a.r;
  meta["seed"] = a.seed;

  MultiGraph graph;
  EdgeColoring coloring;
  switch (require_model(a.model)) {
    case Model::pairing:
      throw config_error("color needs a decomposed model: hamilton-sum or kout");
    case Model::hamilton_sum: {
      const HamiltonSample sample = hamilton_sum(static_cast<int>(a.n), a.r, a.seed);
      HamiltonColoringParams params;
      params.block_exponent = exps.ham_block;
      const HamiltonColoring hc = color_hamilton(sample.decomposition, a.r, params);
      graph = sample.graph;
      coloring = hc.coloring;
      meta["block_exponent"] = exps.ham_block;
      meta["block_count"] = hc.blocks.block_count();
      meta["max_block"] = hc.blocks.max_block_size();
      meta["estar_size"] = hc.estar.size();
      break;
    }
    case Model::kout: {
      const KoutSample sample = kout_sum(static_cast<int>(a.n), a.r, a.seed);
      KoutColoringParams params;
      params.block_exponent = exps.kout_block;
      params.peel_exponent = exps.kout_peel;
      const KoutColoring kc = color_kout(sample.digraphs, a.r, params);
      graph = sample.graph;
      coloring = kc.coloring;
      meta["block_exponent"] = exps.kout_block;
      meta["peel_exponent"] = exps.kout_peel;
      meta["peel_threshold"] = kc.peel_threshold;
      meta["peel_iterations"] = kc.peel_iterations;
      meta["block_count"] = kc.blocks.block_count();
      meta["max_block"] = kc.blocks.max_block_size();
      meta["estar_size"] = kc.estar.size();
      break;
    }
  }

  const MonoStats stats = mono_stats(graph, coloring, a.r);
  meta["max_component"] = stats.max_component;
  meta["max_fraction"] = stats.max_fraction;

  write_output(out, write_coloring(coloring));
  if (!graph_out.empty()) write_output(graph_out, write_graph(graph));
  if (!sidecar.empty()) write_output(sidecar, meta.dump(2) + "\n");
  return 0;
}

int cmd_audit(const std::string& graph_path, const GenArgs& a, double c, int smax,
              std::int64_t budget, const std::string& format, const std::string& out) {
  MultiGraph g;
  if (!graph_path.empty()) {
    g = read_graph(read_file(graph_path));
  } else {
    if (a.n <= 0) throw config_error("audit needs --graph or --model/--n");
    g = generate_graph(a);
  }
  const DensityAudit audit = local_density_audit(g, c, smax, budget);
  if (format == "csv") {
    std::ostringstream csv;
    csv << "c,smax,worst_ratio,sets_enumerated,violation\n"
        << audit.c << ',' << audit.smax << ',' << audit.worst_ratio << ','
        << audit.sets_enumerated << ',' << (audit.violation ? 1 : 0) << '\n';
    write_output(out, csv.str());
  } else {
    nlohmann::ordered_json j;
    j["c"] = audit.c;
    j["smax"] = audit.smax;
    j["worst_ratio"] = audit.worst_ratio;
    j["witness"] = audit.witness;
    j["sets_enumerated"] = audit.sets_enumerated;
    j["violation"] = audit.violation;
    write_output(out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_bound(const std::string& model, int r, const std::vector<std::int64_t>& ns,
              const std::string& format, const std::string& out) {
  CycleLawConstants k;
  switch (require_model(model)) {
    case Model::pairing:
      k = regular_cycle_constants(r);
      break;
    case Model::kout:
      k = kout_cycle_constants(r);
      break;
    case Model::hamilton_sum:
      throw config_error("bound applies to the pairing or kout laws");
  }
  if (format == "csv") {
    std::ostringstream csv;
    csv << "model,r,degree,c1,c2,delta,n,guaranteed_length,hypothesis_holds\n";
    if (ns.empty()) {
      csv << model << ',' << r << ',' << k.degree << ',' << k.c1 << ',' << k.c2 << ','
          << k.delta << ",,,\n";
    }
    for (const auto n : ns) {
      const double len = k.guaranteed_length(static_cast<double>(n));
      csv << model << ',' << r << ',' << k.degree << ',' << k.c1 << ',' << k.c2 << ','
          << k.delta << ',' << n << ',' << len << ',' << (len >= 2.0 ? 1 : 0) << '\n';
    }
    write_output(out, csv.str());
  } else {
    nlohmann::ordered_json j;
    j["model"] = model;
    j["r"] = r;
    j["degree"] = k.degree;
    j["c1"] = k.c1;
    j["c2"] = k.c2;
    j["delta"] = k.delta;
    j["per_n"] = nlohmann::ordered_json::array();
    for (const auto n : ns) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["guaranteed_length"] = k.guaranteed_length(static_cast<double>(n));
      row["hypothesis_holds"] = k.guaranteed_length(static_cast<double>(n)) >= 2.0;
      j["per_n"].push_back(row);
    }
    write_output(out, j.dump(2) + "\n");
  }
  return 0;
}

int run_harness(const ExperimentConfig& cfg, bool adversarial) {
  std::ofstream sink_file;
  std::ostream* sink = nullptr;
  if (!cfg.out_path.empty()) {
    sink_file.open(cfg.out_path, std::ios::binary);
    if (!sink_file) throw config_error("cannot write '" + cfg.out_path + "'");
    sink = &sink_file;
  }
  const ExperimentResult res =
      adversarial ? run_adversarial(cfg, sink) : run_experiment(cfg, sink);
  std::cout << res.summary_csv;
  if (!cfg.out_path.empty()) {
    std::ofstream summary(cfg.out_path + ".summary.csv", std::ios::binary);
    if (!summary) throw config_error("cannot write '" + cfg.out_path + ".summary.csv'");
    summary << res.summary_csv;
  }
  if (res.fitted_exponent)
    std::cerr << "fitted exponent: " << *res.fitted_exponent << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge colorings of random graph sums with small monochromatic components"};
  app.require_subcommand(1);

  GenArgs gen;
  std::string out;
  ExponentParams exps;

  auto add_gen_flags = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--model", gen.model, "pairing | hamilton-sum | kout");
    sub->add_option("--n", gen.n, "vertex count")->required();
    sub->add_option("--r", gen.r, "number of summed cycles / digraphs / colors");
    sub->add_option("--d", gen.d, "pairing-model degree (default 2r)");
    if (with_k) sub->add_option("--k", gen.k, "digraph count for kout (default r)");
    sub->add_option("--seed", gen.seed, "generator seed");
  };

  auto* sub_generate = app.add_subcommand("generate", "sample a graph and print it");
  add_gen_flags(sub_generate, true);
  sub_generate->add_option("--out", out, "output path ('-' = stdout)");

  auto* sub_color = app.add_subcommand("color", "sample a graph and color its edges");
  std::string graph_out, sidecar;
  add_gen_flags(sub_color, false);
  sub_color->add_option("--out", out, "coloring output path ('-' = stdout)");
  sub_color->add_option("--graph-out", graph_out, "also write the sampled graph");
  sub_color->add_option("--sidecar", sidecar, "write coloring details as JSON");
  sub_color->add_option("--ham-block-exp", exps.ham_block, "block exponent (hamilton-sum)");
  sub_color->add_option("--kout-block-exp", exps.kout_block, "block exponent (kout)");
  sub_color->add_option("--kout-peel-exp", exps.kout_peel, "peel exponent (kout)");

  auto* sub_audit = app.add_subcommand("audit", "exhaustive local edge-density audit");
  std::string graph_path, format = "json";
  double audit_c = 1.25;
  int smax = 8;
  std::int64_t budget = 10'000'000;
  sub_audit->add_option("--graph", graph_path, "graph file to audit");
  sub_audit->add_option("--model", gen.model, "generate instead of reading a file");
  sub_audit->add_option("--n", gen.n, "vertex count (when generating)");
  sub_audit->add_option("--r", gen.r, "r (when generating)");
  sub_audit->add_option("--d", gen.d, "pairing degree (when generating)");
  sub_audit->add_option("--k", gen.k, "kout digraph count (when generating)");
  sub_audit->add_option("--seed", gen.seed, "seed (when generating)");
  sub_audit->add_option("--c", audit_c, "density threshold")->required();
  sub_audit->add_option("--smax", smax, "largest set size audited");
  sub_audit->add_option("--budget", budget, "enumeration budget before refusing");
  sub_audit->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sub_audit->add_option("--out", out, "output path ('-' = stdout)");

  auto* sub_bound = app.add_subcommand("bound", "density and long-cycle constants");
  std::string bound_model = "pairing";
  int bound_r = 2;
  std::vector<std::int64_t> bound_ns;
  sub_bound->add_option("--model", bound_model, "pairing | kout");
  sub_bound->add_option("--r", bound_r, "color count");
  sub_bound->add_option("--n", bound_ns, "evaluate the guaranteed length at n (repeatable)");
  sub_bound->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sub_bound->add_option("--out", out, "output path ('-' = stdout)");

  ExperimentConfig cfg;
  std::string config_path, n_grid_csv, strategies_csv, model_name;
  auto add_harness_flags = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value config file");
    sub->add_option("--model", model_name, "pairing | hamilton-sum | kout");
    sub->add_option("--r", cfg.r, "colors / summands");
    sub->add_option("--d", cfg.degree, "pairing-model degree override");
    sub->add_option("--n-grid", n_grid_csv, "comma-separated n values");
    sub->add_option("--trials", cfg.trials, "trials per n");
    sub->add_option("--seed", cfg.master_seed, "master seed");
    sub->add_option("--out", cfg.out_path, "JSONL records path (summary goes to stdout)");
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_flag("--timing", cfg.timing, "record wall-clock per trial (non-reproducible)");
  };

  auto* sub_experiment =
      app.add_subcommand("experiment", "structured-coloring scaling experiments");
  add_harness_flags(sub_experiment);
  sub_experiment->add_option("--ham-block-exp", cfg.exponents.ham_block, "block exponent");
  sub_experiment->add_option("--ham-path-exp", cfg.exponents.ham_path_audit,
                             "path audit exponent");
  sub_experiment->add_option("--kout-block-exp", cfg.exponents.kout_block, "block exponent");
  sub_experiment->add_option("--kout-peel-exp", cfg.exponents.kout_peel, "peel exponent");

  auto* sub_adversarial =
      app.add_subcommand("adversarial", "heuristic colorings, density audit, cycle search");
  add_harness_flags(sub_adversarial);
  sub_adversarial->add_option("--strategies", strategies_csv,
                              "comma-separated: uniform-random,greedy-balanced,orientation-split");
  sub_adversarial->add_option("--smax", cfg.smax, "density audit set-size cap");
  sub_adversarial->add_option("--budget", cfg.audit_budget, "density audit budget");
  sub_adversarial->add_option("--density-c", cfg.density_c,
                              "density threshold override (default: model constant)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (sub_generate->parsed()) return cmd_generate(gen, out);
    if (sub_color->parsed()) return cmd_color(gen, out, graph_out, sidecar, exps);
    if (sub_audit->parsed())
      return cmd_audit(graph_path, gen, audit_c, smax, budget, format, out);
    if (sub_bound->parsed()) return cmd_bound(bound_model, bound_r, bound_ns, format, out);

    const bool adversarial = sub_adversarial->parsed();
    CLI::App* sub = adversarial ? sub_adversarial : sub_experiment;
    if (!config_path.empty()) {
      ExperimentConfig file_cfg = parse_config_text(read_file(config_path));
      // explicit command-line flags win over the file
      if (!sub->count("--r")) cfg.r = file_cfg.r;
      if (!sub->count("--d")) cfg.degree = file_cfg.degree;
      if (!sub->count("--trials")) cfg.trials = file_cfg.trials;
      if (!sub->count("--seed")) cfg.master_seed = file_cfg.master_seed;
      if (!sub->count("--out")) cfg.out_path = file_cfg.out_path;
      if (!sub->count("--jobs")) cfg.jobs = file_cfg.jobs;
      if (!sub->count("--timing")) cfg.timing = file_cfg.timing;
      if (!sub->count("--n-grid")) cfg.n_grid = file_cfg.n_grid;
      if (model_name.empty()) cfg.model = file_cfg.model;
      if (strategies_csv.empty()) cfg.strategies = file_cfg.strategies;
      if (adversarial) {
        if (!sub->count("--smax")) cfg.smax = file_cfg.smax;
        if (!sub->count("--budget")) cfg.audit_budget = file_cfg.audit_budget;
        if (!sub->count("--density-c")) cfg.density_c = file_cfg.density_c;
      } else {
        if (!sub->count("--ham-block-exp")) cfg.exponents.ham_block = file_cfg.exponents.ham_block;
        if (!sub->count("--ham-path-exp"))
          cfg.exponents.ham_path_audit = file_cfg.exponents.ham_path_audit;
        if (!sub->count("--kout-block-exp"))
          cfg.exponents.kout_block = file_cfg.exponents.kout_block;
        if (!sub->count("--kout-peel-exp"))
          cfg.exponents.kout_peel = file_cfg.exponents.kout_peel;
      }
    }
    if (!model_name.empty()) cfg.model = require_model(model_name);
    if (!n_grid_csv.empty()) cfg.n_grid = parse_grid(n_grid_csv);
    if (!strategies_csv.empty()) {
      cfg.strategies.clear();
      std::istringstream in(strategies_csv);
      std::string part;
      while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        const auto s = strategy_from_string(part);
        if (!s) throw config_error("unknown strategy '" + part + "'");
        cfg.strategies.push_back(*s);
      }
    }
    return run_harness(cfg, adversarial);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const contract_violation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
