#include "csdp/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "csdp/catalog.hpp"
#include "csdp/errors.hpp"
#include "csdp/generate.hpp"
#include "csdp/monitor.hpp"
#include "csdp/trace.hpp"

namespace csdp::cli {

int exit_code(SolveStatus status, RunMode /*mode*/, bool clean) {
  switch (status) {
    case SolveStatus::kConverged: return clean ? kExitOk : kExitViolation;
    case SolveStatus::kInvariantViolation: return kExitViolation;
    case SolveStatus::kDivergenceGuard: return kExitDivergence;
    case SolveStatus::kIterationCap: return kExitIterationCap;
  }
  return kExitError;
}

SolverOptions resolve_options(const SdpProblem& prob, const RunConfig& cfg) {
  SolverOptions o = SolverOptions::for_problem(prob);
  if (cfg.epsilon) o.epsilon = *cfg.epsilon;
  if (cfg.gap_ceiling) o.gap_ceiling = *cfg.gap_ceiling;
  if (cfg.max_iterations) o.max_iterations = *cfg.max_iterations;
  if (cfg.sigma) {
    o.sigma = *cfg.sigma;
    o.sigma_source = SigmaSource::kOverride;
  } else if (cfg.nu) {
    o.nu = *cfg.nu;
    o.sigma.reset();
    o.sigma_source = SigmaSource::kNu;
  }
  o.tolerances = Tolerances::from_environment();
  o.mode = cfg.mode;
  return o;
}

std::string format_report(const SdpProblem& prob, const SolveReport& rep) {
  std::string s;
  const auto& b = rep.budget;
  s += fmt::format("problem      {}\n", problem_hash(prob));
  s += fmt::format("status       {} ({} mode)\n", to_string(rep.status),
                   to_string(rep.mode));
  s += fmt::format("iterations   {} (bound {}, cap {})\n", rep.iterations,
                   b.bound_iterations, rep.max_iterations);
  s += fmt::format("initial gap  {:.17g}\n", b.initial_gap);
  s += fmt::format("final gap    {:.17g} (epsilon {:g})\n", rep.final_gap,
                   rep.params.epsilon);
  s += fmt::format("sigma        {:.17g} ({})\n", rep.params.sigma,
                   to_string(rep.sigma_source));
  s += fmt::format("gap ceiling  {:g}\n", rep.params.gap_ceiling);
  s += fmt::format("min potential decrease {:.6g}\n", rep.min_potential_decrease);
  s += fmt::format("failed records {}", rep.violations);
  if (rep.offending) {
    s += fmt::format(" (aborted on {} at iteration {})", rep.offending->id,
                     rep.offending->iteration);
  }
  s += "\n\n";
  s += fmt::format("{:<26} {:>24} {:>8} {:>8}\n", "contract", "min slack",
                   "checked", "failed");
  std::vector<const InvariantRecord*> all;
  for (const auto& r : rep.init_records) all.push_back(&r);
  for (const auto& it : rep.log) {
    for (const auto& r : it.records) all.push_back(&r);
  }
  for (const auto& e : contract_catalog()) {
    double slack = std::numeric_limits<double>::infinity();
    int checked = 0, failed = 0;
    for (const auto* r : all) {
      if (r->id != e.id) continue;
      ++checked;
      if (!r->passed) ++failed;
      slack = std::fmin(slack, r->slack);
    }
    if (checked == 0) {
      s += fmt::format("{:<26} {:>24} {:>8} {:>8}\n", e.id, "-", 0, 0);
    } else {
      s += fmt::format("{:<26} {:>24.17g} {:>8} {:>8}\n", e.id, slack, checked,
                       failed);
    }
  }
  return s;
}

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw Error("cannot write " + p.string());
}

const SdpProblem require_problem(const RunConfig& cfg) {
  if (!cfg.problem) throw Error("--problem is required");
  return load_problem_file(*cfg.problem);
}

void emit_report(const RunConfig& cfg, const std::string& report,
                 std::ostream& out) {
  if (cfg.report) {
    write_file(*cfg.report, report);
  } else {
    out << report;
  }
}

int check_text(const std::string& trace, const SdpProblem& prob,
               std::ostream& out) {
  const CheckReport rep = check_trace(trace, prob);
  if (rep.clean()) {
    out << fmt::format("trace clean: {} iterations, {} records recomputed, "
                       "status {}\n",
                       rep.iterations, rep.records_checked, rep.status);
    return kExitOk;
  }
  out << fmt::format("trace has {} finding(s):\n", rep.findings.size());
  for (const auto& f : rep.findings) out << "  " << format_finding(f) << '\n';
  return kExitViolation;
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const SdpProblem prob = require_problem(cfg);
  const SolverOptions opts = resolve_options(prob, cfg);
  const SolveReport rep = solve(prob, opts);
  if (cfg.trace) write_file(*cfg.trace, trace_text(prob, rep));
  emit_report(cfg, format_report(prob, rep), out);
  return exit_code(rep.status, rep.mode, rep.clean());
}

int cmd_annotate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto flavor = parse_flavor(cfg.flavor);
  if (!flavor) {
    err << "unknown flavor '" << cfg.flavor
        << "' (expected pseudo-matlab or c-like)\n";
    return kExitError;
  }
  const SdpProblem prob = require_problem(cfg);
  const std::string text =
      emit_annotated_listing(prob, resolve_options(prob, cfg), *flavor).text();
  if (cfg.listing) {
    write_file(*cfg.listing, text);
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_check_trace(const RunConfig& cfg, std::ostream& out,
                    std::ostream& /*err*/) {
  if (!cfg.trace) throw Error("--trace is required");
  const SdpProblem prob = require_problem(cfg);
  return check_text(read_file(*cfg.trace), prob, out);
}

int cmd_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto flavor = parse_flavor(cfg.flavor);
  if (!flavor) {
    err << "unknown flavor '" << cfg.flavor << "'\n";
    return kExitError;
  }
  const SdpProblem& prob = running_example();
  const SolverOptions opts = resolve_options(prob, cfg);

  const auto t0 = std::chrono::steady_clock::now();
  const SolveReport rep = solve(prob, opts);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const std::string trace = trace_text(prob, rep);
  if (cfg.trace) write_file(*cfg.trace, trace);
  const std::string listing = emit_annotated_listing(prob, opts, *flavor).text();
  if (cfg.listing) write_file(*cfg.listing, listing);

  out << "== solve (running example, " << fmt::format("{:.1f}", ms) << " ms)\n";
  emit_report(cfg, format_report(prob, rep), out);
  out << "== annotate: " << std::count(listing.begin(), listing.end(), '\n')
      << " lines, " << to_string(*flavor) << "\n";
  out << "== check-trace: ";
  const int checked = check_text(trace, prob, out);
  const int solved = exit_code(rep.status, rep.mode, rep.clean());
  return solved != kExitOk ? solved : checked;
}

int cmd_budget_sweep(const RunConfig& cfg, std::ostream& out,
                     std::ostream& /*err*/) {
  int worst = kExitOk;
  for (int k = 0; k < cfg.count; ++k) {
    const int n = 1 + k % 4;
    const std::uint64_t seed = cfg.seed * 1000003ULL + static_cast<std::uint64_t>(k);
    const SdpProblem prob = feasible_instance(n, seed);
    RunConfig local = cfg;
    local.max_iterations.reset();
    const SolveReport rep = solve(prob, resolve_options(prob, local));
    const bool within = rep.iterations <= rep.budget.bound_iterations;
    out << fmt::format("n={} seed={} iterations={} bound={} status={} "
                       "failed={} {}\n",
                       n, seed, rep.iterations, rep.budget.bound_iterations,
                       to_string(rep.status), rep.violations,
                       within ? "ok" : "OVER BUDGET");
    int code = exit_code(rep.status, rep.mode, rep.clean());
    if (!within) code = kExitViolation;
    if (code != kExitOk && worst == kExitOk) worst = code;
  }
  return worst;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Verifiable short-path primal-dual SDP solver"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode = "audit";
  std::string problem, report, trace, listing;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--epsilon", cfg.epsilon, "target duality gap");
    sub->add_option("--nu", cfg.nu, "weight nu; sigma = n/(n+nu*sqrt(n))");
    sub->add_option("--sigma", cfg.sigma, "gap reduction factor");
    sub->add_option("--gap-ceiling", cfg.gap_ceiling, "upper bound c in phi<=c");
    sub->add_option("--max-iterations", cfg.max_iterations, "iteration cap");
    sub->add_option("--mode", mode, "strict or audit")
        ->check(CLI::IsMember({"strict", "audit"}));
  };
  auto* solve_cmd = app.add_subcommand("solve", "solve a problem file");
  solve_cmd->add_option("--problem", problem, "problem JSON")->required();
  solve_cmd->add_option("--trace", trace, "write the proof trace here");
  solve_cmd->add_option("--report", report, "write the report here");
  common(solve_cmd);

  auto* annotate_cmd = app.add_subcommand("annotate", "emit the annotated listing");
  annotate_cmd->add_option("--problem", problem, "problem JSON")->required();
  annotate_cmd->add_option("--listing", listing, "write the listing here");
  annotate_cmd->add_option("--flavor", cfg.flavor, "pseudo-matlab or c-like");
  common(annotate_cmd);

  auto* check_cmd = app.add_subcommand("check-trace", "re-check a proof trace");
  check_cmd->add_option("--problem", problem, "problem JSON")->required();
  check_cmd->add_option("--trace", trace, "trace to check")->required();

  auto* demo_cmd = app.add_subcommand("demo", "run the bundled example end to end");
  demo_cmd->add_option("--trace", trace, "also write the trace here");
  demo_cmd->add_option("--listing", listing, "also write the listing here");
  demo_cmd->add_option("--report", report, "write the report here");
  demo_cmd->add_option("--flavor", cfg.flavor, "pseudo-matlab or c-like");
  common(demo_cmd);

  auto* sweep_cmd = app.add_subcommand(
      "budget-sweep", "compare iteration counts with the bound on random problems");
  sweep_cmd->add_option("--seed", cfg.seed, "generator seed");
  sweep_cmd->add_option("--count", cfg.count, "number of problems")
      ->check(CLI::PositiveNumber);
  common(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitError;
  }

  if (!problem.empty()) cfg.problem = problem;
  if (!report.empty()) cfg.report = report;
  if (!trace.empty()) cfg.trace = trace;
  if (!listing.empty()) cfg.listing = listing;
  cfg.mode = mode == "strict" ? RunMode::kStrict : RunMode::kAudit;

  try {
    if (solve_cmd->parsed()) return cmd_solve(cfg, out, err);
    if (annotate_cmd->parsed()) return cmd_annotate(cfg, out, err);
    if (check_cmd->parsed()) return cmd_check_trace(cfg, out, err);
    if (demo_cmd->parsed()) return cmd_demo(cfg, out, err);
    if (sweep_cmd->parsed()) return cmd_budget_sweep(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace csdp::cli
