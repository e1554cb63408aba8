#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "csdp/catalog.hpp"
#include "csdp/listing.hpp"

using namespace csdp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnnotatedListing example(ListingFlavor f) {
  return emit_annotated_listing(running_example(),
                                SolverOptions::for_problem(running_example()), f);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("listing is deterministic and matches the frozen golden files") {
  for (auto f : {ListingFlavor::kPseudoMatlab, ListingFlavor::kCLike}) {
    const std::string a = example(f).text();
    CHECK(a == example(f).text());
    const std::string golden = std::string(CSDP_SOURCE_DIR "/tests/golden/running_example.") +
                               std::string(to_string(f)) + ".txt";
    CHECK(a == slurp(golden));
  }
}

TEST_CASE("listing carries the literal contracts with constants substituted") {
  const std::string t = example(ListingFlavor::kPseudoMatlab).text();
  CHECK(contains(t, "%@ ensures phi-0.76*phim<0;"));
  CHECK(contains(t, "%@ requires trace(X*Z)<=0.1;"));
  CHECK(contains(t, "%@ ensures trace(X*Z)<=0.1;"));
  CHECK(contains(t, "%@ ensures trace(X*Z) - 0.75*trace(Xm*Zm)==0;"));
  CHECK(contains(t, "%@ ensures sigma==0.75;"));
  CHECK(contains(t, "mats(H*dXm)+mats(G*dZm)==sigma*mu*eye(n,n)-Zh*Xm*Zh"));
  CHECK(contains(t, "F0=[1, 0; 0, 0.1];"));
  CHECK(contains(t, "F1=[-0.750999, 0.00499; 0.00499, 0.0001];"));
  CHECK(contains(t, "F2=[0.03992, -0.999101; -0.999101, 0.00002];"));
  CHECK(contains(t, "F3=[0.0016, 0.00004; 0.00004, -0.999999];"));
  CHECK(contains(t, "b=[0.4; -0.2; 0.2];"));
  CHECK(contains(t, "X=[0.3409, 0.2407; 0.2407, 0.9021];"));
  CHECK(contains(t, "epsilon=1e-8;"));
  CHECK(contains(t, "sigma=0.75;"));
  CHECK(contains(t, "phim=1/0.75*phi;"));
  CHECK(contains(t, "while (phi>epsilon) do"));
  for (const char* rule : {"skip", "substitution", "consequence", "composition", "while"}) {
    CHECK(contains(t, std::string("%# rule: ") + rule));
  }
}

TEST_CASE("c-like flavor uses ACSL-style comment blocks") {
  const std::string t = example(ListingFlavor::kCLike).text();
  CHECK(contains(t, "/*@ ensures phi-0.76*phim<0; */"));
  CHECK(contains(t, "/*@ requires trace(X*Z)<=0.1; */"));
  CHECK(contains(t, "//# rule: composition"));
  CHECK_FALSE(contains(t, "%@"));
  CHECK_FALSE(contains(t, "\nend\n"));
}

TEST_CASE("contract index equals the catalog and points at verbatim clauses") {
  for (auto f : {ListingFlavor::kPseudoMatlab, ListingFlavor::kCLike}) {
    const AnnotatedListing l = example(f);
    std::set<std::string> index_ids, catalog_ids;
    for (const auto& [id, loc] : l.contract_index) {
      index_ids.insert(id);
      CHECK(loc.anchor == catalog_entry(id).anchor);
      for (const auto& r : loc.lines) {
        REQUIRE(r.first >= 1);
        REQUIRE(r.last <= static_cast<int>(l.lines.size()));
        const std::string& line = l.lines[r.first - 1];
        CHECK((contains(line, "requires ") || contains(line, "ensures ")));
      }
    }
    for (const auto& e : contract_catalog()) catalog_ids.insert(std::string(e.id));
    CHECK(index_ids == catalog_ids);

    std::size_t annotations = 0;
    for (const auto& line : l.lines) {
      if (contains(line, "%@ ") || contains(line, "/*@ ")) ++annotations;
    }
    CHECK(annotations == clause_map().size());
  }
}

TEST_CASE("clauses appear in clause-map order") {
  const AnnotatedListing l = example(ListingFlavor::kPseudoMatlab);
  std::vector<std::string> got;
  for (const auto& line : l.lines) {
    const auto at = line.find("%@ ");
    if (at != std::string::npos) got.push_back(line.substr(at + 3));
  }
  REQUIRE(got.size() == clause_map().size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    std::string want(clause_map()[i].clause);
    for (auto [from, to] : {std::pair{"{c}", "0.1"}, std::pair{"{s}", "0.75"}}) {
      for (auto p = want.find(from); p != std::string::npos; p = want.find(from)) {
        want.replace(p, 3, to);
      }
    }
    CHECK(got[i] == want);
  }
}

TEST_CASE("options change the substituted constants") {
  SolverOptions o = SolverOptions::for_problem(running_example());
  o.gap_ceiling = 0.2;
  o.sigma = 0.8;
  o.epsilon = 1e-6;
  const std::string t =
      emit_annotated_listing(running_example(), o, ListingFlavor::kPseudoMatlab).text();
  CHECK(contains(t, "trace(X*Z)<=0.2;"));
  CHECK(contains(t, "sigma==0.8;"));
  CHECK(contains(t, "trace(X*Z) - 0.8*trace(Xm*Zm)==0;"));
  CHECK(contains(t, "epsilon=1e-6;"));
  CHECK(contains(t, "phi-0.76*phim<0;"));
}

TEST_CASE("format_constant") {
  CHECK(format_constant(1e-8) == "1e-8");
  CHECK(format_constant(0.0001) == "0.0001");
  CHECK(format_constant(0.00002) == "0.00002");
  CHECK(format_constant(-0.999101) == "-0.999101");
  CHECK(format_constant(0.75) == "0.75");
  CHECK(format_constant(0) == "0");
  CHECK(format_constant(3) == "3");
  CHECK(format_constant(1e20) == "1e20");
  CHECK(format_constant(-2.5e-300) == "-2.5e-300");
  CHECK(std::stod(format_constant(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("flavor names") {
  CHECK(parse_flavor("pseudo-matlab") == ListingFlavor::kPseudoMatlab);
  CHECK(parse_flavor("c-like") == ListingFlavor::kCLike);
  CHECK_FALSE(parse_flavor("acsl"));
  CHECK(to_string(ListingFlavor::kCLike) == "c-like");
}
