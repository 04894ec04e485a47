#include "monocomp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "monocomp/audits.hpp"
#include "monocomp/bounds.hpp"
#include "monocomp/color_hamilton.hpp"
#include "monocomp/color_kout.hpp"
#include "monocomp/cycles.hpp"
#include "monocomp/density.hpp"
#include "monocomp/errors.hpp"
#include "monocomp/generators.hpp"
#include "monocomp/majority.hpp"
#include "monocomp/mono_stats.hpp"

namespace monocomp {

const char* to_string(Model m) {
  switch (m) {
    case Model::pairing: return "pairing";
    case Model::hamilton_sum: return "hamilton-sum";
    case Model::kout: return "kout";
  }
  return "?";
}

std::optional<Model> model_from_string(std::string_view name) {
  if (name == "pairing") return Model::pairing;
  if (name == "hamilton-sum") return Model::hamilton_sum;
  if (name == "kout") return Model::kout;
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (r < 2) throw config_error("config: r must be >= 2");
  if (n_grid.empty()) throw config_error("config: n_grid must not be empty");
  for (std::int64_t n : n_grid) {
    if (n < 3) throw config_error("config: every n must be >= 3");
    if (n < r) throw config_error("config: every n must be >= r");
    if (n > 100'000'000) throw config_error("config: n too large");
  }
  if (trials < 1) throw config_error("config: trials must be >= 1");
  if (jobs < 1 || jobs > 256) throw config_error("config: jobs must lie in 1..256");
  if (degree < 0) throw config_error("config: d must be positive");
  if (degree > 0 && model != Model::pairing)
    throw config_error("config: d applies only to the pairing model");
  const auto in_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!in_unit(exponents.ham_block) || !in_unit(exponents.ham_path_audit) ||
      !in_unit(exponents.kout_block) || !in_unit(exponents.kout_peel))
    throw config_error("config: exponents must lie in (0, 1)");
  if (exponents.kout_peel >= exponents.kout_block)
    throw config_error("config: kout peel exponent must be below the block exponent");
  if (smax < 1) throw config_error("config: smax must be >= 1");
  if (audit_budget < 1) throw config_error("config: audit budget must be >= 1");
  if (density_c < 0.0) throw config_error("config: density_c must be >= 0");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

std::int64_t parse_i64(const std::string& key, const std::string& value) {
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (errno != 0 || end == value.c_str() || *end != '\0')
    throw config_error("config: key '" + key + "' has non-integer value '" + value + "'");
  return v;
}

double parse_f64(const std::string& key, const std::string& value) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(value.c_str(), &end);
  if (errno != 0 || end == value.c_str() || *end != '\0')
    throw config_error("config: key '" + key + "' has non-numeric value '" + value + "'");
  return v;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "model") {
      const auto m = model_from_string(value);
      if (!m) throw config_error("config: unknown model '" + value + "'");
      cfg.model = *m;
    } else if (key == "r") {
      cfg.r = static_cast<int>(parse_i64(key, value));
    } else if (key == "d") {
      cfg.degree = static_cast<int>(parse_i64(key, value));
    } else if (key == "n_grid") {
      cfg.n_grid.clear();
      for (const auto& part : split_list(value)) cfg.n_grid.push_back(parse_i64(key, part));
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_i64(key, value));
    } else if (key == "seed") {
      cfg.master_seed = static_cast<Seed>(parse_i64(key, value));
    } else if (key == "strategies") {
      cfg.strategies.clear();
      for (const auto& part : split_list(value)) {
        const auto s = strategy_from_string(part);
        if (!s) throw config_error("config: unknown strategy '" + part + "'");
        cfg.strategies.push_back(*s);
      }
    } else if (key == "out") {
      cfg.out_path = value;
    } else if (key == "jobs") {
      cfg.jobs = static_cast<int>(parse_i64(key, value));
    } else if (key == "timing") {
      cfg.timing = parse_i64(key, value) != 0;
    } else if (key == "smax") {
      cfg.smax = static_cast<int>(parse_i64(key, value));
    } else if (key == "budget") {
      cfg.audit_budget = parse_i64(key, value);
    } else if (key == "density_c") {
      cfg.density_c = parse_f64(key, value);
    } else if (key == "ham_block_exp") {
      cfg.exponents.ham_block = parse_f64(key, value);
    } else if (key == "ham_path_exp") {
      cfg.exponents.ham_path_audit = parse_f64(key, value);
    } else if (key == "kout_block_exp") {
      cfg.exponents.kout_block = parse_f64(key, value);
    } else if (key == "kout_peel_exp") {
      cfg.exponents.kout_peel = parse_f64(key, value);
    } else {
      throw config_error("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

std::string to_json_line(const RunRecord& rec) {
  nlohmann::ordered_json j;
  j["model"] = rec.model;
  j["n"] = rec.n;
  j["r"] = rec.r;
  const auto put = [&j](const char* key, const auto& opt) {
    if (opt)
      j[key] = *opt;
    else
      j[key] = nullptr;
  };
  put("d", rec.d);
  put("k", rec.k);
  j["trial"] = rec.trial;
  j["seed"] = rec.seed;
  j["edges"] = rec.edges;
  j["max_component_per_color"] = rec.max_component_per_color;
  j["max_component"] = rec.max_component;
  j["max_fraction"] = rec.max_fraction;
  put("estar_size", rec.estar_size);
  put("block_count", rec.block_count);
  put("max_block", rec.max_block);
  put("peel_iterations", rec.peel_iterations);
  put("path_max", rec.path_max);
  put("path_threshold", rec.path_threshold);
  put("path_violations", rec.path_violations);
  put("arbo_max_order", rec.arbo_max_order);
  put("arbo_max_height", rec.arbo_max_height);
  put("arbo_unicyclic", rec.arbo_unicyclic);
  put("strategy", rec.strategy);
  put("fallback", rec.fallback);
  put("majority_color", rec.majority_color);
  put("majority_edges", rec.majority_edges);
  put("audit_status", rec.audit_status);
  put("audit_worst_ratio", rec.audit_worst_ratio);
  put("audit_sets", rec.audit_sets);
  put("bound_value", rec.bound_value);
  put("hypothesis_holds", rec.hypothesis_holds);
  put("cycle_length", rec.cycle_length);
  put("wall_ms", rec.wall_ms);
  return j.dump();
}

std::optional<double> fit_exponent(const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : points) {
    if (x > 0.0 && y > 0.0) logs.emplace_back(std::log(x), std::log(y));
  }
  if (logs.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (const auto& [lx, ly] : logs) {
    mx += lx;
    my += ly;
  }
  mx /= logs.size();
  my /= logs.size();
  double num = 0, den = 0;
  for (const auto& [lx, ly] : logs) {
    num += (lx - mx) * (ly - my);
    den += (lx - mx) * (lx - mx);
  }
  if (den == 0.0) return std::nullopt;
  return num / den;
}

namespace {

double median_of(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t h = xs.size() / 2;
  return xs.size() % 2 ? xs[h] : 0.5 * (xs[h - 1] + xs[h]);
}

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

// Runs fn(0..total-1) on `jobs` threads; groups are flushed to sink in index
// order as soon as they are complete, so output bytes do not depend on jobs.
std::vector<RunRecord> run_jobs(int jobs, int total,
                                const std::function<std::vector<RunRecord>(int)>& fn,
                                std::ostream* sink) {
  std::vector<std::vector<RunRecord>> groups(total);
  std::vector<char> ready(total, 0);
  std::mutex mu;
  int flushed = 0;
  const auto flush_ready = [&]() {
    while (flushed < total && ready[flushed]) {
      if (sink) {
        for (const RunRecord& rec : groups[flushed]) *sink << to_json_line(rec) << '\n';
        sink->flush();
      }
      ++flushed;
    }
  };

  if (jobs <= 1 || total <= 1) {
    for (int i = 0; i < total; ++i) {
      groups[i] = fn(i);
      ready[i] = 1;
      flush_ready();
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    const int workers = std::min(jobs, total);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (;;) {
          const int i = next.fetch_add(1);
          if (i >= total) return;
          try {
            auto group = fn(i);
            std::lock_guard<std::mutex> lock(mu);
            groups[i] = std::move(group);
            ready[i] = 1;
            flush_ready();
          } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!first_error) first_error = std::current_exception();
            next.store(total);
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  std::vector<RunRecord> records;
  for (auto& g : groups) {
    for (auto& rec : g) records.push_back(std::move(rec));
  }
  return records;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void fill_mono(RunRecord& rec, const MonoStats& stats) {
  for (const ColorStats& cs : stats.per_color)
    rec.max_component_per_color.push_back(cs.max_component);
  rec.max_component = stats.max_component;
  rec.max_fraction = stats.max_fraction;
}

Seed strategy_seed(Seed gen_seed, Strategy s) {
  return splitmix64(gen_seed ^ (0xADC0100ull + static_cast<Seed>(s)));
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::ostream* jsonl_sink) {
  cfg.validate();
  const int trials = cfg.trials;
  const int total = static_cast<int>(cfg.n_grid.size()) * trials;

  const auto job = [&cfg, trials](int idx) {
    const std::int64_t n = cfg.n_grid[idx / trials];
    const int trial = idx % trials;
    const Seed seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(trial));
    Timer timer;
    RunRecord rec;
    rec.model = to_string(cfg.model);
    rec.n = n;
    rec.r = cfg.r;
    rec.trial = trial;
    rec.seed = seed;

    switch (cfg.model) {
      case Model::hamilton_sum: {
        const HamiltonSample sample = hamilton_sum(static_cast<int>(n), cfg.r, seed);
        HamiltonColoringParams params;
        params.block_exponent = cfg.exponents.ham_block;
        const HamiltonColoring hc = color_hamilton(sample.decomposition, cfg.r, params);
        rec.edges = sample.graph.edge_count();
        fill_mono(rec, mono_stats(sample.graph, hc.coloring, cfg.r));
        rec.estar_size = static_cast<std::int64_t>(hc.estar.size());
        rec.block_count = hc.blocks.block_count();
        rec.max_block = hc.blocks.max_block_size();
        const PathAudit audit =
            path_length_audit(sample.decomposition, hc.coloring, cfg.exponents.ham_path_audit);
        rec.path_max = audit.max_len;
        rec.path_threshold = audit.threshold;
        rec.path_violations = audit.violations;
        break;
      }
      case Model::kout: {
        const KoutSample sample = kout_sum(static_cast<int>(n), cfg.r, seed);
        KoutColoringParams params;
        params.block_exponent = cfg.exponents.kout_block;
        params.peel_exponent = cfg.exponents.kout_peel;
        const KoutColoring kc = color_kout(sample.digraphs, cfg.r, params);
        rec.k = cfg.r;
        rec.edges = sample.graph.edge_count();
        fill_mono(rec, mono_stats(sample.graph, kc.coloring, cfg.r));
        rec.estar_size = static_cast<std::int64_t>(kc.estar.size());
        rec.block_count = kc.blocks.block_count();
        rec.max_block = kc.blocks.max_block_size();
        rec.peel_iterations = kc.peel_iterations;
        int max_order = 0, max_height = 0, unicyclic = 0;
        for (int c = 2; c <= cfg.r; ++c) {
          std::vector<std::pair<int, int>> arcs;
          const std::int64_t base = static_cast<std::int64_t>(c - 1) * n;
          for (int v = 0; v < n; ++v) {
            if (kc.coloring.color[base + v] == c)
              arcs.emplace_back(v, sample.digraphs[c - 1].succ[v]);
          }
          const ArboStats st = arborescence_stats(static_cast<int>(n), arcs);
          max_order = std::max(max_order, st.max_order);
          max_height = std::max(max_height, st.max_height);
          unicyclic += st.unicyclic_count;
        }
        rec.arbo_max_order = max_order;
        rec.arbo_max_height = max_height;
        rec.arbo_unicyclic = unicyclic;
        break;
      }
      case Model::pairing: {
        const int d = cfg.degree > 0 ? cfg.degree : 2 * cfg.r;
        const MultiGraph g = pairing_model(static_cast<int>(n), d, seed);
        const Strategy strat =
            cfg.strategies.empty() ? Strategy::uniform_random : cfg.strategies.front();
        const AdversarialColoring ac =
            adversarial_color(g, cfg.r, strat, strategy_seed(seed, strat));
        rec.d = d;
        rec.edges = g.edge_count();
        fill_mono(rec, mono_stats(g, ac.coloring, cfg.r));
        rec.strategy = to_string(strat);
        rec.fallback = ac.fell_back;
        break;
      }
    }
    if (cfg.timing) rec.wall_ms = timer.ms();
    return std::vector<RunRecord>{std::move(rec)};
  };

  ExperimentResult res;
  res.records = run_jobs(cfg.jobs, total, job, jsonl_sink);

  std::ostringstream csv;
  csv << "model,r,n,trials,median_max_component,median_max_fraction,mean_estar,"
         "mean_block_count,mean_peel_iterations\n";
  std::vector<std::pair<double, double>> fit_points;
  for (const std::int64_t n : cfg.n_grid) {
    std::vector<double> comp, frac, estar, blocks, peel;
    for (const RunRecord& rec : res.records) {
      if (rec.n != n) continue;
      comp.push_back(rec.max_component);
      frac.push_back(rec.max_fraction);
      if (rec.estar_size) estar.push_back(static_cast<double>(*rec.estar_size));
      if (rec.block_count) blocks.push_back(*rec.block_count);
      if (rec.peel_iterations) peel.push_back(*rec.peel_iterations);
    }
    const auto mean = [](const std::vector<double>& xs) {
      double s = 0;
      for (double x : xs) s += x;
      return xs.empty() ? 0.0 : s / xs.size();
    };
    const double med = median_of(comp);
    fit_points.emplace_back(static_cast<double>(n), med);
    csv << to_string(cfg.model) << ',' << cfg.r << ',' << n << ',' << comp.size() << ','
        << fmt(med) << ',' << fmt(median_of(frac)) << ','
        << (estar.empty() ? "" : fmt(mean(estar))) << ','
        << (blocks.empty() ? "" : fmt(mean(blocks))) << ','
        << (peel.empty() ? "" : fmt(mean(peel))) << '\n';
  }
  res.summary_csv = csv.str();
  res.fitted_exponent = fit_exponent(fit_points);
  return res;
}

ExperimentResult run_adversarial(const ExperimentConfig& cfg, std::ostream* jsonl_sink) {
  cfg.validate();
  if (cfg.model == Model::hamilton_sum)
    throw config_error("adversarial runs color pairing or kout graphs");

  const CycleLawConstants constants = cfg.model == Model::pairing
                                          ? regular_cycle_constants(cfg.r)
                                          : kout_cycle_constants(cfg.r);
  const double audit_c = cfg.density_c > 0.0 ? cfg.density_c : constants.c1;
  std::vector<Strategy> strategies = cfg.strategies;
  if (strategies.empty())
    strategies = {Strategy::uniform_random, Strategy::greedy_balanced,
                  Strategy::orientation_split};

  const int trials = cfg.trials;
  const int total = static_cast<int>(cfg.n_grid.size()) * trials;

  const auto job = [&cfg, &strategies, &constants, audit_c, trials](int idx) {
    const std::int64_t n = cfg.n_grid[idx / trials];
    const int trial = idx % trials;
    const Seed gen_seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(trial));

    MultiGraph graph;
    std::optional<int> rec_d, rec_k;
    if (cfg.model == Model::pairing) {
      const int d = cfg.degree > 0 ? cfg.degree : constants.degree;
      graph = pairing_model(static_cast<int>(n), d, gen_seed);
      rec_d = d;
    } else {
      const int k = cfg.r + 1;
      graph = kout_sum(static_cast<int>(n), k, gen_seed).graph;
      rec_k = k;
    }

    std::vector<RunRecord> group;
    for (const Strategy strat : strategies) {
      Timer timer;
      RunRecord rec;
      rec.model = to_string(cfg.model);
      rec.n = n;
      rec.r = cfg.r;
      rec.d = rec_d;
      rec.k = rec_k;
      rec.trial = trial;
      rec.seed = gen_seed;
      rec.edges = graph.edge_count();
      const AdversarialColoring ac =
          adversarial_color(graph, cfg.r, strat, strategy_seed(gen_seed, strat));
      rec.strategy = to_string(strat);
      rec.fallback = ac.fell_back;
      fill_mono(rec, mono_stats(graph, ac.coloring, cfg.r));

      const MajoritySubgraph maj = majority_subgraph(graph, ac.coloring, cfg.r);
      rec.majority_color = maj.color;
      rec.majority_edges = maj.edge_counts[maj.color - 1];

      try {
        const DensityAudit audit =
            local_density_audit(maj.sub.graph, audit_c, cfg.smax, cfg.audit_budget);
        rec.audit_status = audit.violation ? "violated" : "passed";
        rec.audit_worst_ratio = audit.worst_ratio;
        rec.audit_sets = audit.sets_enumerated;
      } catch (const contract_violation&) {
        rec.audit_status = "refused";
      }

      rec.bound_value = constants.guaranteed_length(static_cast<double>(n));
      rec.hypothesis_holds = *rec.bound_value >= 2.0;

      LongCycleParams lc;
      lc.seed = splitmix64(strategy_seed(gen_seed, strat) ^ 0xCCC1Eull);
      const auto cyc = find_long_cycle(maj.sub.graph, lc);
      rec.cycle_length = cyc ? cyc->length() : 0;

      if (cfg.timing) rec.wall_ms = timer.ms();
      group.push_back(std::move(rec));
    }
    return group;
  };

  ExperimentResult res;
  res.records = run_jobs(cfg.jobs, total, job, jsonl_sink);

  std::ostringstream csv;
  csv << "model,r,n,strategy,trials,median_max_component,median_max_fraction,"
         "median_cycle_length,min_cycle_length,bound_value,hypothesis_holds,"
         "audit_passed,audit_violated,audit_refused\n";
  for (const std::int64_t n : cfg.n_grid) {
    for (const Strategy strat : strategies) {
      const char* name = to_string(strat);
      std::vector<double> comp, frac, cyc;
      int passed = 0, violated = 0, refused = 0;
      double bound = 0.0;
      bool hypothesis = false;
      for (const RunRecord& rec : res.records) {
        if (rec.n != n || !rec.strategy || *rec.strategy != name) continue;
        comp.push_back(rec.max_component);
        frac.push_back(rec.max_fraction);
        if (rec.cycle_length) cyc.push_back(*rec.cycle_length);
        if (rec.audit_status) {
          if (*rec.audit_status == "passed") ++passed;
          if (*rec.audit_status == "violated") ++violated;
          if (*rec.audit_status == "refused") ++refused;
        }
        if (rec.bound_value) bound = *rec.bound_value;
        if (rec.hypothesis_holds) hypothesis = *rec.hypothesis_holds;
      }
      csv << to_string(cfg.model) << ',' << cfg.r << ',' << n << ',' << name << ','
          << comp.size() << ',' << fmt(median_of(comp)) << ',' << fmt(median_of(frac)) << ','
          << fmt(median_of(cyc)) << ','
          << fmt(cyc.empty() ? 0.0 : *std::min_element(cyc.begin(), cyc.end())) << ','
          << fmt(bound) << ',' << (hypothesis ? 1 : 0) << ',' << passed << ',' << violated
          << ',' << refused << '\n';
    }
  }
  res.summary_csv = csv.str();
  return res;
}

}  // namespace monocomp
