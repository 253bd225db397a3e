#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "batchlp/errors.hpp"
#include "batchlp/generator.hpp"
#include "batchlp/mps.hpp"
#include "batchlp/oracle.hpp"
#include "batchlp/simplex.hpp"

namespace batchlp::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// LPs solved by `bench` per generate-then-solve slice; bounds peak memory of
// the generated workload.
constexpr std::size_t kBenchSlice = 10000;

struct Workload {
  std::vector<std::string> sources;
  std::vector<StandardFormLP> lps;
  std::vector<std::optional<VariableMap>> maps;
  std::vector<std::vector<std::string>> names;
};

bool has_extension(const std::string& path, const std::string& ext) {
  return path.size() >= ext.size() &&
         std::equal(ext.rbegin(), ext.rend(), path.rbegin(), [](char a, char b) {
           return std::tolower(static_cast<unsigned char>(a)) == b;
         });
}

json lp_to_json(const StandardFormLP& lp) {
  return json{{"c", lp.c}, {"A", lp.A}, {"b", lp.b}};
}

StandardFormLP lp_from_json(const json& j) {
  StandardFormLP lp;
  lp.c = j.at("c").get<std::vector<double>>();
  lp.A = j.at("A").get<std::vector<std::vector<double>>>();
  lp.b = j.at("b").get<std::vector<double>>();
  lp.n = lp.c.size();
  lp.m = lp.b.size();
  return lp;
}

void load_file(const std::string& path, Workload& w) {
  if (has_extension(path, ".json")) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    json doc;
    try {
      doc = json::parse(in);
      for (const auto& item : doc.at("lps")) {
        w.sources.push_back(path + "#" + std::to_string(w.lps.size()));
        w.lps.push_back(lp_from_json(item));
        w.maps.emplace_back();
        w.names.emplace_back();
      }
    } catch (const json::exception& e) {
      throw InvalidInput(path + ": " + e.what());
    }
    return;
  }
  MpsModel model = parse_mps_file(path);
  Standardized s = standardize(lower_to_general(model));
  w.sources.push_back(path);
  w.lps.push_back(std::move(s.lp));
  w.maps.emplace_back(std::move(s.map));
  w.names.push_back(model.columns);
}

Workload load_workload(const RunSpec& spec, std::size_t default_dim,
                       std::size_t default_count) {
  Workload w;
  if (!spec.inputs.empty()) {
    for (const auto& path : spec.inputs) load_file(path, w);
    return w;
  }
  w.lps = gen_random_lps(spec.dim.value_or(default_dim), spec.count.value_or(default_count),
                         spec.seed, spec.feasible_start);
  for (std::size_t i = 0; i < w.lps.size(); ++i) {
    w.sources.push_back("generated#" + std::to_string(i));
  }
  w.maps.resize(w.lps.size());
  w.names.resize(w.lps.size());
  return w;
}

SolverLimits limits_of(const RunSpec& spec) {
  SolverLimits limits;
  limits.max_iterations = spec.max_iterations;
  return limits;
}

BatchConfig config_of(const RunSpec& spec) {
  BatchConfig config;
  config.memory_budget_bytes = spec.memory_budget;
  config.workers = spec.workers;
  config.limits = limits_of(spec);
  return config;
}

std::optional<double> reported_objective(const SolveOutcome& o,
                                         const std::optional<VariableMap>& map) {
  if (!o.optimal()) return std::nullopt;
  return map ? map->recover_objective(*o.objective_value) : *o.objective_value;
}

json optional_number(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json certificate_json(const oracle::Certificate& c) {
  return json{{"certified", c.certified()},
              {"max_reduced_cost", c.max_reduced_cost},
              {"max_violation", c.max_violation},
              {"max_negativity", c.max_negativity},
              {"objective_gap", c.objective_gap}};
}

int cmd_solve(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.inputs.size() != 1) {
    err << "solve: exactly one --input file is required\n";
    return kExitInputError;
  }
  Workload w = load_workload(spec, 0, 0);
  if (w.lps.size() != 1) {
    err << "solve: input holds " << w.lps.size() << " LPs, expected 1\n";
    return kExitInputError;
  }
  const StandardFormLP& lp = w.lps.front();
  const SolveOutcome outcome = solve(lp, limits_of(spec));
  std::optional<oracle::Certificate> cert;
  if (outcome.optimal()) cert = oracle::check_certificate(lp, outcome);

  std::vector<double> point;
  if (outcome.optimal()) {
    point = w.maps.front() ? w.maps.front()->recover_point(outcome.primal_point)
                           : outcome.primal_point;
  }
  const auto objective = reported_objective(outcome, w.maps.front());
  const auto& names = w.names.front();
  auto name_of = [&](std::size_t j) {
    return j < names.size() ? names[j] : "x" + std::to_string(j);
  };

  switch (spec.format) {
    case Format::kJson: {
      json doc;
      doc["source"] = w.sources.front();
      doc["status"] = std::string(to_string(outcome.status));
      doc["objective"] = optional_number(objective);
      json sol = json::array();
      for (std::size_t j = 0; j < point.size(); ++j) {
        sol.push_back(json{{"name", name_of(j)}, {"value", point[j]}});
      }
      doc["solution"] = sol;
      doc["iterations"] = json{{"phase1", outcome.iterations_phase1},
                               {"phase2", outcome.iterations_phase2}};
      doc["standard_form"] = json{{"rows", lp.m}, {"cols", lp.n}};
      doc["certificate"] = cert ? certificate_json(*cert) : json(nullptr);
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "source,status,objective,iterations_phase1,iterations_phase2,certified\n";
      out << csv_field(w.sources.front()) << ',' << to_string(outcome.status) << ','
          << (objective ? format_number(*objective) : "") << ',' << outcome.iterations_phase1
          << ',' << outcome.iterations_phase2 << ','
          << (cert ? (cert->certified() ? "true" : "false") : "") << "\n";
      break;
    case Format::kText:
      out << "status: " << to_string(outcome.status) << "\n";
      if (objective) out << "objective: " << format_number(*objective) << "\n";
      for (std::size_t j = 0; j < point.size(); ++j) {
        out << "  " << name_of(j) << " = " << format_number(point[j]) << "\n";
      }
      if (cert) out << "certified: " << (cert->certified() ? "yes" : "no") << "\n";
      break;
  }
  if (cert && !cert->certified()) {
    err << "solve: optimal outcome failed its certificate\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

int cmd_batch(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  Workload w = load_workload(spec, 5, 100);
  const BatchReport report = batch_solve(w.lps, config_of(spec));

  std::size_t uncertified = 0;
  std::vector<std::optional<bool>> certified(w.lps.size());
  for (std::size_t i = 0; i < w.lps.size(); ++i) {
    if (!report.errors[i].empty() || !report.outcomes[i].optimal()) continue;
    certified[i] = oracle::check_certificate(w.lps[i], report.outcomes[i]).certified();
    if (!*certified[i]) ++uncertified;
  }
  const double wall_ms = spec.omit_timings ? 0.0 : report.wall_seconds * 1e3;
  const double rate = spec.omit_timings ? 0.0 : report.lps_per_second;

  switch (spec.format) {
    case Format::kJson: {
      json doc;
      doc["count"] = w.lps.size();
      doc["workers"] = spec.workers;
      doc["lp_bytes"] = report.lp_bytes;
      doc["batch_size"] = report.plan.batch_size;
      json chunks = json::array();
      for (std::size_t c = 0; c < report.plan.chunks.size(); ++c) {
        chunks.push_back(json{{"begin", report.plan.chunks[c].begin},
                              {"end", report.plan.chunks[c].end},
                              {"ms", spec.omit_timings ? 0.0 : report.chunk_seconds[c] * 1e3}});
      }
      doc["chunks"] = chunks;
      doc["wall_ms"] = wall_ms;
      doc["lps_per_sec"] = rate;
      json results = json::array();
      for (std::size_t i = 0; i < w.lps.size(); ++i) {
        const SolveOutcome& o = report.outcomes[i];
        json r{{"index", i}, {"source", w.sources[i]}};
        if (!report.errors[i].empty()) {
          r["status"] = "error";
          r["error"] = report.errors[i];
        } else {
          r["status"] = std::string(to_string(o.status));
          r["objective"] = optional_number(reported_objective(o, w.maps[i]));
          r["iterations_phase1"] = o.iterations_phase1;
          r["iterations_phase2"] = o.iterations_phase2;
          r["certified"] = certified[i] ? json(*certified[i]) : json(nullptr);
        }
        results.push_back(r);
      }
      doc["results"] = results;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
    case Format::kText:
      out << "index,source,status,objective,iterations_phase1,iterations_phase2,certified\n";
      for (std::size_t i = 0; i < w.lps.size(); ++i) {
        const SolveOutcome& o = report.outcomes[i];
        const auto obj = reported_objective(o, w.maps[i]);
        out << i << ',' << csv_field(w.sources[i]) << ','
            << (report.errors[i].empty() ? std::string(to_string(o.status)) : "error") << ','
            << (obj ? format_number(*obj) : "") << ',' << o.iterations_phase1 << ','
            << o.iterations_phase2 << ','
            << (certified[i] ? (*certified[i] ? "true" : "false") : "") << "\n";
      }
      break;
  }
  for (std::size_t i = 0; i < w.lps.size(); ++i) {
    if (!report.errors[i].empty()) err << w.sources[i] << ": " << report.errors[i] << "\n";
  }
  if (uncertified > 0) {
    err << "batch: " << uncertified << " optimal outcomes failed their certificate\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

int cmd_gen(const RunSpec& spec, std::ostream& out, std::ostream&) {
  const std::size_t dim = spec.dim.value_or(5);
  const std::size_t count = spec.count.value_or(10);
  const auto lps = gen_random_lps(dim, count, spec.seed, spec.feasible_start);
  json doc;
  doc["dim"] = dim;
  doc["count"] = count;
  doc["seed"] = spec.seed;
  doc["feasible_start"] = spec.feasible_start;
  json items = json::array();
  for (const auto& lp : lps) items.push_back(lp_to_json(lp));
  doc["lps"] = items;
  out << doc.dump() << "\n";
  return kExitOk;
}

int cmd_verify(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  Workload w = load_workload(spec, 4, 100);
  const BatchReport report = batch_solve(w.lps, config_of(spec));
  std::size_t status_mismatch = 0, value_mismatch = 0, uncertified = 0, skipped = 0,
              errors = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < w.lps.size(); ++i) {
    if (!report.errors[i].empty()) {
      ++errors;
      failures.push_back(json{{"source", w.sources[i]}, {"error", report.errors[i]}});
      continue;
    }
    const SolveOutcome& o = report.outcomes[i];
    if (o.optimal() && !oracle::check_certificate(w.lps[i], o).certified()) {
      ++uncertified;
      failures.push_back(json{{"source", w.sources[i]}, {"error", "uncertified"}});
    }
    SolveOutcome ref;
    try {
      ref = oracle::vertex_enumerate(w.lps[i]);
    } catch (const OracleBudget&) {
      ++skipped;
      continue;
    }
    if (ref.status != o.status) {
      ++status_mismatch;
      failures.push_back(json{{"source", w.sources[i]},
                              {"error", "status " + std::string(to_string(o.status)) +
                                            " vs oracle " +
                                            std::string(to_string(ref.status))}});
    } else if (o.optimal()) {
      const double a = *o.objective_value;
      const double b = *ref.objective_value;
      if (std::fabs(a - b) > 1e-6 * std::max(1.0, std::fabs(b))) {
        ++value_mismatch;
        failures.push_back(json{{"source", w.sources[i]},
                                {"error", "objective " + format_number(a) + " vs oracle " +
                                              format_number(b)}});
      }
    }
  }
  const bool passed = status_mismatch + value_mismatch + uncertified + errors == 0;
  json doc{{"checked", w.lps.size()},
           {"oracle_skipped", skipped},
           {"status_mismatches", status_mismatch},
           {"value_mismatches", value_mismatch},
           {"uncertified", uncertified},
           {"errors", errors},
           {"passed", passed},
           {"failures", failures}};
  if (spec.format == Format::kJson) {
    out << doc.dump(2) << "\n";
  } else {
    out << "checked,oracle_skipped,status_mismatches,value_mismatches,uncertified,errors,passed\n"
        << w.lps.size() << ',' << skipped << ',' << status_mismatch << ',' << value_mismatch
        << ',' << uncertified << ',' << errors << ',' << (passed ? "true" : "false") << "\n";
  }
  if (!passed) err << "verify: oracle cross-check failed\n";
  return passed ? kExitOk : kExitVerificationFailure;
}

}  // namespace

std::vector<std::size_t> default_bench_sizes() { return {100, 1000, 10000, 100000}; }
std::vector<std::size_t> default_bench_dims() { return {5, 28, 50, 100}; }

BenchRow bench_row(const RunSpec& spec, std::size_t dim, std::size_t batch_size,
                   std::vector<SolveOutcome>* outcomes) {
  BenchRow row;
  row.dim = dim;
  row.batch_size = batch_size;
  const BatchConfig config = config_of(spec);
  const std::size_t repeats = std::max<std::size_t>(1, spec.repeats);
  double setup = 0.0;
  double wall = 0.0;
  for (std::size_t r = 0; r < repeats; ++r) {
    const bool last = r + 1 == repeats;
    if (last) row.counts = {};
    RandomLpStream stream(dim, spec.seed, spec.feasible_start);
    for (std::size_t done = 0; done < batch_size;) {
      const std::size_t slice = std::min(kBenchSlice, batch_size - done);
      const auto t0 = Clock::now();
      std::vector<StandardFormLP> lps;
      lps.reserve(slice);
      for (std::size_t k = 0; k < slice; ++k) lps.push_back(stream.next());
      setup += std::chrono::duration<double>(Clock::now() - t0).count();

      const BatchReport report = batch_solve(lps, config);
      wall += report.wall_seconds;
      if (last) {
        for (std::size_t i = 0; i < slice; ++i) {
          if (!report.errors[i].empty()) {
            ++row.counts.errors;
            continue;
          }
          switch (report.outcomes[i].status) {
            case SolveStatus::kOptimal: ++row.counts.optimal; break;
            case SolveStatus::kUnbounded: ++row.counts.unbounded; break;
            case SolveStatus::kInfeasible: ++row.counts.infeasible; break;
            case SolveStatus::kIterationLimit: ++row.counts.iteration_limit; break;
          }
          if (outcomes) outcomes->push_back(report.outcomes[i]);
        }
      }
      done += slice;
    }
  }
  row.setup_ms = setup * 1e3 / static_cast<double>(repeats);
  row.wall_ms = wall * 1e3 / static_cast<double>(repeats);
  row.lps_per_sec = row.wall_ms > 0.0 ? static_cast<double>(batch_size) / (row.wall_ms / 1e3) : 0.0;
  return row;
}

std::string bench_csv_header() {
  return "dim,batch_size,workers,repeats,setup_ms,wall_ms,lps_per_sec,optimal,unbounded,"
         "infeasible,iteration_limit,errors";
}

std::string bench_csv_line(const BenchRow& row, const RunSpec& spec) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  const bool t = !spec.omit_timings;
  os << row.dim << ',' << row.batch_size << ',' << spec.workers << ','
     << std::max<std::size_t>(1, spec.repeats) << ',' << (t ? row.setup_ms : 0.0) << ','
     << (t ? row.wall_ms : 0.0) << ',' << (t ? row.lps_per_sec : 0.0) << ','
     << row.counts.optimal << ',' << row.counts.unbounded << ',' << row.counts.infeasible
     << ',' << row.counts.iteration_limit << ',' << row.counts.errors;
  return os.str();
}

namespace {

int cmd_bench(const RunSpec& spec, std::ostream& out, std::ostream&) {
  std::vector<std::size_t> sizes = spec.bench_sizes;
  std::vector<std::size_t> dims = spec.bench_dims;
  if (spec.count) sizes = {*spec.count};
  if (spec.dim) dims = {*spec.dim};
  if (sizes.empty()) sizes = default_bench_sizes();
  if (dims.empty()) dims = default_bench_dims();

  json rows = json::array();
  if (spec.format != Format::kJson) out << bench_csv_header() << "\n";
  for (std::size_t dim : dims) {
    for (std::size_t size : sizes) {
      if (size == 0) continue;
      const BenchRow row = bench_row(spec, dim, size, nullptr);
      if (spec.format == Format::kJson) {
        const bool t = !spec.omit_timings;
        rows.push_back(json{{"dim", row.dim},
                            {"batch_size", row.batch_size},
                            {"workers", spec.workers},
                            {"repeats", std::max<std::size_t>(1, spec.repeats)},
                            {"setup_ms", t ? row.setup_ms : 0.0},
                            {"wall_ms", t ? row.wall_ms : 0.0},
                            {"lps_per_sec", t ? row.lps_per_sec : 0.0},
                            {"optimal", row.counts.optimal},
                            {"unbounded", row.counts.unbounded},
                            {"infeasible", row.counts.infeasible},
                            {"iteration_limit", row.counts.iteration_limit},
                            {"errors", row.counts.errors}});
      } else {
        out << bench_csv_line(row, spec) << "\n" << std::flush;
      }
    }
  }
  if (spec.format == Format::kJson) out << rows.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::kSolve: return cmd_solve(spec, out, err);
      case Command::kBatch: return cmd_batch(spec, out, err);
      case Command::kGen: return cmd_gen(spec, out, err);
      case Command::kBench: return cmd_bench(spec, out, err);
      case Command::kVerify: return cmd_verify(spec, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

std::optional<RunSpec> parse_command_line(int argc, char** argv, int& exit_code) {
  CLI::App app{"Batched dense LP solver"};
  app.require_subcommand(1);
  RunSpec spec;
  std::string format = "json";
  std::optional<std::size_t> dim, count, max_iters;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", spec.inputs, "MPS files or gen JSON workloads")
        ->envname("BATCHLP_INPUT");
    sub->add_option("--dim", dim, "LP dimension of the generated workload")
        ->envname("BATCHLP_DIM");
    sub->add_option("--count", count, "Number of generated LPs")->envname("BATCHLP_COUNT");
    sub->add_option("--seed", spec.seed, "Generator seed")->envname("BATCHLP_SEED");
    sub->add_option("--workers", spec.workers, "Worker threads")
        ->envname("BATCHLP_WORKERS")
        ->check(CLI::PositiveNumber);
    sub->add_option("--memory-budget", spec.memory_budget, "Bytes of live tableaux per chunk")
        ->envname("BATCHLP_MEMORY_BUDGET")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "json, csv or text")
        ->envname("BATCHLP_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--repeats", spec.repeats, "Timing repetitions per bench row")
        ->envname("BATCHLP_REPEATS");
    sub->add_option("--feasible-start", spec.feasible_start,
                    "false negates every b so phase 1 runs")
        ->envname("BATCHLP_FEASIBLE_START");
    sub->add_option("--limits-max-iters", max_iters, "Pivot budget per phase")
        ->envname("BATCHLP_LIMITS_MAX_ITERS");
    sub->add_flag("--omit-timings", spec.omit_timings, "Write timing fields as 0");
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"solve", "Solve one MPS file and certify the result", Command::kSolve},
      {"batch", "Solve many LPs (files or a generated workload)", Command::kBatch},
      {"gen", "Write a random LP workload as JSON", Command::kGen},
      {"bench", "Timing sweep over batch sizes and dimensions", Command::kBench},
      {"verify", "Cross-check the solver against the brute-force oracle", Command::kVerify},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    if (e.command == Command::kBench) {
      sub->add_option("--sizes", spec.bench_sizes, "Batch sizes to sweep")->delimiter(',');
      sub->add_option("--dims", spec.bench_dims, "Dimensions to sweep")->delimiter(',');
    }
    subs.emplace_back(sub, e.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e) == 0 ? kExitOk : kExitInputError;
    return std::nullopt;
  }
  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) {
      spec.command = command;
      if (command == Command::kBench && sub->count("--format") == 0 &&
          std::getenv("BATCHLP_FORMAT") == nullptr) {
        format = "csv";
      }
    }
  }
  spec.format = format == "csv" ? Format::kCsv : format == "text" ? Format::kText : Format::kJson;
  spec.dim = dim;
  spec.count = count;
  spec.max_iterations = max_iters;
  return spec;
}

}  // namespace batchlp::cli
