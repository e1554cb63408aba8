#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

#include "csdp/catalog.hpp"
#include "csdp/errors.hpp"
#include "csdp/generate.hpp"
#include "csdp/linalg.hpp"
#include "csdp/monitor.hpp"
#include "csdp/solver.hpp"
#include "oracles.hpp"

using namespace csdp;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

const SolveReport& example_run() {
  static const SolveReport rep =
      solve(running_example(), SolverOptions::for_problem(running_example()));
  return rep;
}

}  // namespace

TEST_CASE("catalog layout") {
  const auto init = initialization_catalog();
  const auto loop = loop_catalog();
  CHECK(init.size() == 18);
  REQUIRE(loop.size() == 12);
  for (int i = 0; i < 12; ++i) CHECK(loop[i].id == "I" + std::to_string(i + 1));
  std::set<std::string_view> ids;
  for (const auto& e : contract_catalog()) {
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.anchor.empty());
  }
  CHECK(catalog_entry("I4").anchor.find("0.3105") != std::string_view::npos);
  CHECK_THROWS_AS(catalog_entry("I13"), std::out_of_range);
}

TEST_CASE("clause map covers the catalog exactly") {
  std::set<std::string_view> mapped;
  for (const auto& c : clause_map()) {
    CHECK_NOTHROW(catalog_entry(c.contract_id));
    mapped.insert(c.contract_id);
    const bool req = c.clause.rfind("requires ", 0) == 0;
    const bool ens = c.clause.rfind("ensures ", 0) == 0;
    CHECK((req || ens));
    CHECK(c.clause.back() == ';');
  }
  for (const auto& e : contract_catalog()) CHECK(mapped.count(e.id) == 1);
}

TEST_CASE("records come in catalog order with the catalog anchors") {
  const SolveReport& rep = example_run();
  REQUIRE(rep.init_records.size() == initialization_catalog().size());
  for (std::size_t i = 0; i < rep.init_records.size(); ++i) {
    CHECK(rep.init_records[i].id == initialization_catalog()[i].id);
    CHECK(rep.init_records[i].anchor == initialization_catalog()[i].anchor);
    CHECK(rep.init_records[i].iteration == 0);
  }
  int k = 0;
  for (const auto& it : rep.log) {
    ++k;
    REQUIRE(it.records.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) {
      CHECK(it.records[i].id == loop_catalog()[i].id);
      CHECK(it.records[i].iteration == k);
    }
  }
}

TEST_CASE("slack sign agrees with passed for every record") {
  const SolveReport& rep = example_run();
  auto check = [](const InvariantRecord& r) {
    if (r.passed) {
      CHECK_MESSAGE(r.slack >= 0, r.id);
    } else {
      CHECK_MESSAGE(!(r.slack > 0), r.id);
    }
  };
  for (const auto& r : rep.init_records) check(r);
  for (const auto& it : rep.log) {
    for (const auto& r : it.records) check(r);
  }
}

TEST_CASE("running example: loop contracts I1 and I3 to I12 hold every iteration") {
  const SolveReport& rep = example_run();
  for (const auto& it : rep.log) {
    for (const auto& r : it.records) {
      if (r.id == "I2") continue;
      CHECK_MESSAGE(r.passed, r.id << " at iteration " << r.iteration);
    }
  }
}

TEST_CASE("running example: the published data violates the gap ceiling early") {
  const SolveReport& rep = example_run();
  int failed_i2 = 0;
  for (const auto& it : rep.log) {
    for (const auto& r : it.records) {
      if (r.id == "I2" && !r.passed) {
        ++failed_i2;
        CHECK(r.measured > 0.1);
      }
    }
  }
  CHECK(failed_i2 == 4);
  for (const auto& r : rep.init_records) {
    const bool expect_fail = r.id == "init.gap_ceiling" || r.id == "init.phi_bounds" ||
                             r.id == "init.central_path";
    CHECK_MESSAGE(r.passed == !expect_fail, r.id);
  }
}

TEST_CASE("I5 is exactly zero under the minimum-norm dual step") {
  for (const auto& it : example_run().log) {
    const auto& i5 = it.records[4];
    CHECK(i5.id == "I5");
    CHECK(i5.measured == 0.0);
    CHECK(i5.slack == 0.7);
  }
}

TEST_CASE("perturbing the new X breaks the contraction identity") {
  const SolveReport& rep = example_run();
  const IterationLog& it = rep.log.front();
  PointXZp next = advance(it.step);
  next.x = next.x + SymMatrix::identity(2) * 1e-3;
  const auto recs = check_iteration(running_example(), it.step, next, 1, rep.params);
  const auto& i8 = recs[7];
  CHECK(i8.id == "I8");
  CHECK_FALSE(i8.passed);
  CHECK(i8.slack < 0);
  CHECK(i8.measured == doctest::Approx(1e-3 * next.z.matrix().trace()).epsilon(1e-6));
}

TEST_CASE("I11 first link compares two sides that agree to roundoff") {
  const SolveReport& rep = example_run();
  const IterationLog& it = rep.log[10];
  const PointXZp next = advance(it.step);
  const auto& i11 = check_iteration(running_example(), it.step, next, 11, rep.params)[10];
  REQUIRE(i11.id == "I11");
  CHECK(i11.passed);
  CHECK(i11.measured < 1e-12 * i11.bound);

  REQUIRE(i11.aux.size() == 1);
  CHECK(std::abs(i11.aux[0].value - i11.measured) < 1e-12 * i11.bound);
}

TEST_CASE("generated instances satisfy every contract on every iteration") {
  for (int k = 0; k < 24; ++k) {
    const SdpProblem p = feasible_instance(1 + k % 4, 300 + k);
    const SolveReport rep = solve(p, SolverOptions::for_problem(p));
    INFO("n=" << p.n() << " seed=" << 300 + k);
    CHECK(rep.status == SolveStatus::kConverged);
    CHECK(rep.clean());
  }
}

TEST_CASE("check_iteration degrades to failed records on garbage input") {
  const SolveReport& rep = example_run();
  StepSnapshot bad = rep.log.front().step;
  bad.zm = SymMatrix::identity(2) * -1.0;
  std::vector<InvariantRecord> recs;
  CHECK_NOTHROW(recs = check_iteration(running_example(), bad, advance(bad), 1, rep.params));
  REQUIRE(recs.size() == 12);
  CHECK_FALSE(recs[0].passed);
  CHECK_FALSE(recs[9].passed);
  CHECK_FALSE(recs[10].passed);
  CHECK_FALSE(recs[11].passed);
}

TEST_CASE("F0 not positive definite fails its initialization record") {
  const SdpProblem& p = running_example();
  const SdpProblem q = SdpProblem::create(SymMatrix::identity(2) * -1.0, p.f(), p.b(),
                                          p.hints(), false);
  const SolveReport& rep = example_run();
  const auto recs = check_initialization(q, rep.initial, rep.params);
  CHECK(recs[0].id == "init.F0_pd");
  CHECK_FALSE(recs[0].passed);
  CHECK(recs[0].measured == doctest::Approx(-1.0));
}

TEST_CASE("iteration_bound") {
  CHECK(iteration_bound(0.1, 1e-8, 0.75).bound_iterations == 57);
  CHECK(iteration_bound(1e-9, 1e-8, 0.75).bound_iterations == 0);
  CHECK(iteration_bound(1e-8, 1e-8, 0.75).bound_iterations == 0);
  CHECK(iteration_bound(1024.0, 1.0, 0.5).bound_iterations == 10);
  CHECK(iteration_bound(std::ldexp(1.0, -10), std::ldexp(1.0, -20), 0.5).bound_iterations == 10);
  CHECK_THROWS_AS(iteration_bound(1, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(iteration_bound(1, 1e-3, 1.0), std::invalid_argument);
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double gap = std::exp(-5 * u(rng));
    const double eps = std::exp(-25 * u(rng));
    const double sigma = 0.05 + 0.9 * u(rng);
    const int bound = iteration_bound(gap, eps, sigma).bound_iterations;
    const int counted = oracle::contractions_to(gap, eps, sigma);
    CHECK(std::abs(bound - counted) <= 1);
  }
}

TEST_CASE("identity tolerance can come from the environment") {
  ::setenv("CREDIBLE_SDP_TOL", "1e-7", 1);
  CHECK(Tolerances::from_environment().identity_check == 1e-7);
  ::setenv("CREDIBLE_SDP_TOL", "nope", 1);
  CHECK_THROWS_AS(Tolerances::from_environment(), InitializationError);
  ::setenv("CREDIBLE_SDP_TOL", "-1", 1);
  CHECK_THROWS_AS(Tolerances::from_environment(), InitializationError);
  ::unsetenv("CREDIBLE_SDP_TOL");
  CHECK(Tolerances::from_environment().identity_check == 1e-9);
}

TEST_CASE("min_slack") {
  const SolveReport& rep = example_run();
  std::vector<InvariantRecord> all;
  for (const auto& it : rep.log) all.insert(all.end(), it.records.begin(), it.records.end());
  CHECK(min_slack(all, "I3") > 0);
  CHECK(min_slack(all, "I4") > 0);
  CHECK(min_slack(all, "I5") == 0.7);
  CHECK(std::isinf(min_slack(all, "init.mu")));
}
