#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "csdp/cli.hpp"
#include "csdp/generate.hpp"
#include "csdp/trace.hpp"

using namespace csdp;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"credible_sdp"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : store) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "credible_sdp_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kExample = CSDP_SOURCE_DIR "/data/running_example.json";

}  // namespace

TEST_CASE("exit code table") {
  using cli::exit_code;
  for (auto mode : {RunMode::kAudit, RunMode::kStrict}) {
    CHECK(exit_code(SolveStatus::kConverged, mode, true) == 0);
    CHECK(exit_code(SolveStatus::kConverged, mode, false) == 2);
    CHECK(exit_code(SolveStatus::kInvariantViolation, mode, false) == 2);
    CHECK(exit_code(SolveStatus::kDivergenceGuard, mode, true) == 3);
    CHECK(exit_code(SolveStatus::kDivergenceGuard, mode, false) == 3);
    CHECK(exit_code(SolveStatus::kIterationCap, mode, true) == 4);
    CHECK(exit_code(SolveStatus::kIterationCap, mode, false) == 4);
  }
}

TEST_CASE("sigma resolution order") {
  const SdpProblem& p = running_example();
  cli::RunConfig cfg;
  CHECK(effective_sigma(p, cli::resolve_options(p, cfg)) == 0.75);
  CHECK(cli::resolve_options(p, cfg).sigma_source == SigmaSource::kProblem);
  cfg.nu = 1.0;
  CHECK(effective_sigma(p, cli::resolve_options(p, cfg)) ==
        doctest::Approx(2.0 / (2.0 + std::sqrt(2.0))).epsilon(1e-15));
  CHECK(cli::resolve_options(p, cfg).sigma_source == SigmaSource::kNu);
  cfg.sigma = 0.9;
  CHECK(effective_sigma(p, cli::resolve_options(p, cfg)) == 0.9);
  CHECK(cli::resolve_options(p, cfg).sigma_source == SigmaSource::kOverride);

  nlohmann::json j = nlohmann::json::parse(problem_to_json(feasible_instance(3, 4)));
  CHECK(j["sigma"] == 0.75);
  j.erase("sigma");
  j.erase("nu");
  const SdpProblem q = load_problem(j.dump());
  cli::RunConfig plain;
  CHECK(cli::resolve_options(q, plain).sigma_source == SigmaSource::kNu);
  CHECK(effective_sigma(q, cli::resolve_options(q, plain)) ==
        doctest::Approx(3.0 / (3.0 + 0.4714 * std::sqrt(3.0))).epsilon(1e-15));
}

TEST_CASE("usage and I/O errors exit 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"solve"}).code == 1);
  CHECK(invoke({"solve", "--problem", scratch("absent.json").string()}).code == 1);
  write(scratch("garbage.json"), "{\"n\": 2, ");
  CHECK(invoke({"solve", "--problem", scratch("garbage.json").string()}).code == 1);
  CHECK(invoke({"annotate", "--problem", kExample, "--flavor", "acsl"}).code == 1);
  CHECK(invoke({"demo", "--flavor", "acsl"}).code == 1);
  CHECK(invoke({"solve", "--problem", kExample, "--mode", "lenient"}).code == 1);
}

TEST_CASE("solve exit codes follow the run outcome") {
  const Outcome example = invoke({"solve", "--problem", kExample, "--epsilon", "1"});
  CHECK(example.code == 2);
  CHECK(example.out.find("iterations") != std::string::npos);

  write(scratch("feasible.json"), problem_to_json(feasible_instance(2, 11)));
  CHECK(invoke({"solve", "--problem", scratch("feasible.json").string()}).code == 0);
  CHECK(invoke({"solve", "--problem", scratch("feasible.json").string(), "--epsilon",
                "1"})
            .code == 0);
  CHECK(invoke({"solve", "--problem", scratch("feasible.json").string(),
                "--max-iterations", "2"})
            .code == 4);
  CHECK(invoke({"solve", "--problem", kExample, "--mode", "strict"}).code == 2);
}

TEST_CASE("solve writes a report and a trace that check-trace accepts") {
  const fs::path trace = scratch("feasible.jsonl");
  const fs::path report = scratch("report.txt");
  write(scratch("feasible.json"), problem_to_json(feasible_instance(3, 12)));
  const std::string prob = scratch("feasible.json").string();
  REQUIRE(invoke({"solve", "--problem", prob, "--trace", trace.string(), "--report",
                  report.string()})
              .code == 0);
  CHECK(read(report).find("I11") != std::string::npos);
  const Outcome ok = invoke({"check-trace", "--problem", prob, "--trace", trace.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("clean") != std::string::npos);

  std::vector<std::string> lines;
  {
    std::istringstream in(read(trace));
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  for (auto& l : lines) {
    nlohmann::json j = nlohmann::json::parse(l);
    if (j["kind"] == "record" && j["id"] == "I6" && j["iteration"] == 2) {
      j["bound"] = j["bound"].get<double>() * 1.001;
      l = j.dump();
    }
  }
  std::string mutated;
  for (const auto& l : lines) mutated += l + "\n";
  write(scratch("mutated.jsonl"), mutated);
  const Outcome bad = invoke(
      {"check-trace", "--problem", prob, "--trace", scratch("mutated.jsonl").string()});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("iteration 2: I6") != std::string::npos);

  CHECK(invoke({"check-trace", "--problem", kExample, "--trace", trace.string()}).code == 1);
  CHECK(invoke({"check-trace", "--problem", prob, "--trace",
                scratch("absent.jsonl").string()})
            .code == 1);
}

TEST_CASE("annotate writes the listing") {
  const fs::path listing = scratch("listing.txt");
  REQUIRE(invoke({"annotate", "--problem", kExample, "--flavor", "c-like", "--listing",
                  listing.string()})
              .code == 0);
  CHECK(read(listing).find("/*@ ensures phi-0.76*phim<0; */") != std::string::npos);
  const Outcome to_stdout = invoke({"annotate", "--problem", kExample});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out.find("%@ requires trace(X*Z)<=0.1;") != std::string::npos);
}

TEST_CASE("demo on the running example") {
  const fs::path trace = scratch("demo.jsonl");
  const Outcome d = invoke({"demo", "--trace", trace.string()});
  CHECK(d.code == 2);
  CHECK(d.out.find("== check-trace: trace clean: 61 iterations") != std::string::npos);
  CHECK(check_trace(read(trace), running_example()).clean());

  const Outcome slow = invoke({"demo", "--sigma", "0.95", "--trace", trace.string()});
  CHECK((slow.code == 0 || slow.code == 2));
  CHECK(check_trace(read(trace), running_example()).clean());

  const Outcome coarse = invoke({"demo", "--epsilon", "1e-2", "--trace", trace.string()});
  const nlohmann::json footer = [&] {
    std::istringstream in(read(trace));
    std::string last;
    for (std::string l; std::getline(in, l);) last = l;
    return nlohmann::json::parse(last);
  }();
  CHECK(footer["status"] == "Converged");
  CHECK(footer["iterations"].get<int>() < 61);
  CHECK(footer["iterations"].get<int>() <= footer["budget"]["bound_iterations"].get<int>());
  CHECK(coarse.code == 2);
}

TEST_CASE("budget sweep") {
  const Outcome s = invoke({"budget-sweep", "--count", "6", "--seed", "3"});
  CHECK(s.code == 0);
  CHECK(s.out.find("OVER BUDGET") == std::string::npos);
}
