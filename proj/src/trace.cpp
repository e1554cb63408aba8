#include "csdp/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "csdp/catalog.hpp"
#include "csdp/detail/json_io.hpp"
#include "csdp/errors.hpp"
#include "csdp/kernels.hpp"
#include "csdp/linalg.hpp"

namespace csdp {

using detail::matrix17;
using detail::num17;
using detail::vector17;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using nlohmann::json;

namespace {

constexpr double kRelTol = 1e-12;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string record_line(const InvariantRecord& r) {
  std::string s = "{\"kind\":\"record\",\"id\":" + detail::quoted(r.id) +
                  ",\"iteration\":" + std::to_string(r.iteration) +
                  ",\"measured\":" + num17(r.measured) +
                  ",\"bound\":" + num17(r.bound) + ",\"slack\":" + num17(r.slack) +
                  ",\"passed\":" + (r.passed ? "true" : "false") +
                  ",\"anchor\":" + detail::quoted(r.anchor) + ",\"aux\":{";
  for (std::size_t i = 0; i < r.aux.size(); ++i) {
    if (i) s += ",";
    s += detail::quoted(r.aux[i].name) + ":" + num17(r.aux[i].value);
  }
  return s + "}}";
}

std::string state_line(int iteration, const SymMatrix& x, const SymMatrix& z,
                       const VectorXd& p, double phi, double phim, double mu) {
  return "{\"kind\":\"state\",\"iteration\":" + std::to_string(iteration) +
         ",\"X\":" + matrix17(x.matrix()) + ",\"Z\":" + matrix17(z.matrix()) +
         ",\"p\":" + vector17(p) + ",\"phi\":" + num17(phi) +
         ",\"phim\":" + num17(phim) + ",\"mu\":" + num17(mu) + "}";
}

}  // namespace

void write_trace(const SdpProblem& prob, const SolveReport& rep,
                 std::ostream& out) {
  const ContractParams& cp = rep.params;
  out << "{\"kind\":\"header\",\"schema\":" << detail::quoted(kTraceSchema)
      << ",\"problem_hash\":" << detail::quoted(problem_hash(prob))
      << ",\"tool_version\":" << detail::quoted(kToolVersion)
      << ",\"vectorization\":" << detail::quoted(kVectorization)
      << ",\"n\":" << prob.n() << ",\"m\":" << prob.m()
      << ",\"options\":{\"epsilon\":" << num17(cp.epsilon)
      << ",\"sigma\":" << num17(cp.sigma)
      << ",\"sigma_source\":" << detail::quoted(to_string(rep.sigma_source));
  if (rep.sigma_source == SigmaSource::kNu) out << ",\"nu\":" << num17(rep.nu);
  out << ",\"max_iterations\":" << rep.max_iterations
      << ",\"max_iterations_source\":"
      << (rep.max_iterations_default ? "\"default\"" : "\"override\"")
      << ",\"gap_ceiling\":" << num17(cp.gap_ceiling)
      << ",\"tolerances\":{\"lsqr_consistency\":"
      << num17(cp.tol.lsqr_consistency)
      << ",\"pd_margin\":" << num17(cp.tol.pd_margin)
      << ",\"identity_check\":" << num17(cp.tol.identity_check) << "}"
      << ",\"mode\":" << detail::quoted(to_string(rep.mode)) << "}"
      << ",\"note\":\"the backend checks numeric instances of each contract, "
         "not their symbolic validity\"}\n";

  const InitialPoint& s0 = rep.initial;
  out << state_line(0, s0.x, s0.z, s0.p, s0.phi, s0.phim, s0.mu) << '\n';
  for (const auto& r : rep.init_records) out << record_line(r) << '\n';

  int k = 0;
  for (const auto& it : rep.log) {
    ++k;
    const StepSnapshot& s = it.step;
    out << "{\"kind\":\"step\",\"iteration\":" << k
        << ",\"Xm\":" << matrix17(s.xm.matrix())
        << ",\"Zm\":" << matrix17(s.zm.matrix()) << ",\"pm\":" << vector17(s.pm)
        << ",\"dX\":" << matrix17(s.dx.matrix())
        << ",\"dZ\":" << matrix17(s.dz.matrix()) << ",\"dp\":" << vector17(s.dp)
        << "}\n";
    for (const auto& r : it.records) out << record_line(r) << '\n';
  }

  const IterateState& f = rep.final_state;
  out << state_line(rep.iterations, f.x, f.z, f.p, f.phi, f.phim, f.mu) << '\n';

  const ConvergenceBudget& b = rep.budget;
  out << "{\"kind\":\"footer\",\"status\":" << detail::quoted(to_string(rep.status))
      << ",\"iterations\":" << rep.iterations
      << ",\"final_gap\":" << num17(rep.final_gap)
      << ",\"budget\":{\"initial_gap\":" << num17(b.initial_gap)
      << ",\"epsilon\":" << num17(b.epsilon) << ",\"sigma\":" << num17(b.sigma)
      << ",\"bound_iterations\":" << b.bound_iterations << "}"
      << ",\"violations\":" << rep.violations << ",\"offending\":";
  if (rep.offending) {
    out << "{\"id\":" << detail::quoted(rep.offending->id)
        << ",\"iteration\":" << rep.offending->iteration << "}";
  } else {
    out << "null";
  }
  out << "}\n";
  out.flush();
  if (!out) throw Error("write_trace: sink write failed");
}

std::string trace_text(const SdpProblem& prob, const SolveReport& report) {
  std::ostringstream os;
  write_trace(prob, report, os);
  return os.str();
}

std::string format_finding(const Finding& f) {
  std::string s;
  if (f.line > 0) s += "line " + std::to_string(f.line) + ": ";
  if (f.iteration >= 0) s += "iteration " + std::to_string(f.iteration) + ": ";
  if (!f.subject.empty()) s += f.subject + ": ";
  return s + f.message;
}

namespace {

bool close(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  if (a == b) return true;
  return std::abs(a - b) <= kRelTol * std::max(std::abs(a), std::abs(b));
}

bool close(const MatrixXd& a, const MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!close(a.data()[i], b.data()[i])) return false;
  }
  return true;
}

std::string show(double x) { return num17(x); }

struct Line {
  int number;
  json j;
};

using Findings = std::vector<Finding>;

/// Typed field access on one trace line; failures become findings.
class Fields {
 public:
  Fields(const Line& line, int iteration, Findings& out)
      : line_(line), iteration_(iteration), out_(out) {}

  void flag(std::string subject, std::string message) const {
    out_.push_back({line_.number, iteration_, std::move(subject),
                    std::move(message)});
  }

  const json* get(const json& obj, std::string_view key) const {
    if (!obj.is_object()) {
      flag(std::string(key), "enclosing value is not an object");
      return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
      flag(std::string(key), "missing field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<double> number(std::string_view key) const {
    return number_in(line_.j, key);
  }
  std::optional<double> number_in(const json& obj, std::string_view key) const {
    const json* v = get(obj, key);
    if (!v) return std::nullopt;
    if (v->is_null()) return kNaN;
    try {
      return detail::read_number(*v, key);
    } catch (const ParseError& e) {
      flag(std::string(key), e.what());
      return std::nullopt;
    }
  }

  std::optional<long long> integer(std::string_view key) const {
    return integer_in(line_.j, key);
  }
  std::optional<long long> integer_in(const json& obj,
                                      std::string_view key) const {
    const json* v = get(obj, key);
    if (!v) return std::nullopt;
    try {
      return detail::read_integer(*v, key);
    } catch (const ParseError& e) {
      flag(std::string(key), e.what());
      return std::nullopt;
    }
  }

  std::optional<std::string> string(std::string_view key) const {
    return string_in(line_.j, key);
  }
  std::optional<std::string> string_in(const json& obj,
                                       std::string_view key) const {
    const json* v = get(obj, key);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      flag(std::string(key), "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<bool> boolean(std::string_view key) const {
    const json* v = get(line_.j, key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) {
      flag(std::string(key), "expected a boolean");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  std::optional<SymMatrix> sym(std::string_view key, int n) const {
    const json* v = get(line_.j, key);
    if (!v) return std::nullopt;
    try {
      MatrixXd m = detail::read_matrix(*v, key);
      if (m.rows() != n || m.cols() != n) {
        flag(std::string(key), "expected a " + std::to_string(n) + "x" +
                                   std::to_string(n) + " matrix");
        return std::nullopt;
      }
      return SymMatrix::checked(m, 0.0);
    } catch (const ParseError& e) {
      flag(std::string(key), e.what());
    } catch (const SymmetryError&) {
      flag(std::string(key), "matrix is not symmetric");
    }
    return std::nullopt;
  }

  std::optional<VectorXd> vec(std::string_view key, int size) const {
    const json* v = get(line_.j, key);
    if (!v) return std::nullopt;
    try {
      VectorXd x = detail::read_vector(*v, key);
      if (x.size() != size) {
        flag(std::string(key), "expected " + std::to_string(size) + " entries");
        return std::nullopt;
      }
      return x;
    } catch (const ParseError& e) {
      flag(std::string(key), e.what());
    }
    return std::nullopt;
  }

  void expect_close(std::string subject, std::string_view what, double in_trace,
                    double recomputed) const {
    if (!close(in_trace, recomputed)) {
      flag(std::move(subject), std::string(what) + " mismatch (trace " +
                                   show(in_trace) + ", recomputed " +
                                   show(recomputed) + ")");
    }
  }

 private:
  const Line& line_;
  int iteration_;
  Findings& out_;
};

std::string kind_of(const Line& l) {
  if (!l.j.is_object()) return {};
  auto it = l.j.find("kind");
  if (it == l.j.end() || !it->is_string()) return {};
  return it->get<std::string>();
}

void compare_record(const InvariantRecord& want, const Line& line,
                    Findings& out) {
  Fields f(line, want.iteration, out);
  const std::string& id = want.id;
  if (auto it = f.integer("iteration"); it && *it != want.iteration) {
    f.flag(id, "iteration " + std::to_string(*it) + " recorded in group " +
                   std::to_string(want.iteration));
  }
  if (auto v = f.number("measured")) f.expect_close(id, "measured", *v, want.measured);
  if (auto v = f.number("bound")) f.expect_close(id, "bound", *v, want.bound);
  if (auto v = f.number("slack")) f.expect_close(id, "slack", *v, want.slack);
  if (auto v = f.boolean("passed"); v && *v != want.passed) {
    f.flag(id, std::string("passed flag is ") + (*v ? "true" : "false") +
                   ", recomputation says " + (want.passed ? "true" : "false"));
  }
  if (auto v = f.string("anchor"); v && *v != want.anchor) {
    f.flag(id, "anchor differs from the catalog");
  }
  const json* aux = f.get(line.j, "aux");
  if (!aux) return;
  if (!aux->is_object() || aux->size() != want.aux.size()) {
    f.flag(id, "aux values differ from the recomputed set");
    return;
  }
  for (const auto& a : want.aux) {
    if (auto v = f.number_in(*aux, a.name)) {
      f.expect_close(id, "aux " + a.name, *v, a.value);
    }
  }
}

/// Matches recomputed records against trace lines by id, in catalog order.
void compare_group(const std::vector<InvariantRecord>& want,
                   const std::vector<const Line*>& got, int iteration,
                   int anchor_line, Findings& out) {
  std::vector<std::string> got_ids;
  for (const Line* l : got) {
    auto it = l->j.find("id");
    got_ids.push_back(it != l->j.end() && it->is_string() ? it->get<std::string>()
                                                           : std::string());
  }
  std::vector<bool> used(got.size(), false);
  std::size_t cursor = 0;
  bool ordered = true;
  for (const auto& w : want) {
    std::size_t hit = got.size();
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (!used[i] && got_ids[i] == w.id) {
        hit = i;
        break;
      }
    }
    if (hit == got.size()) {
      out.push_back({anchor_line, iteration, w.id, "missing catalog entry"});
      continue;
    }
    if (hit < cursor) ordered = false;
    cursor = hit;
    used[hit] = true;
    compare_record(w, *got[hit], out);
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (!used[i]) {
      out.push_back({got[i]->number, iteration, got_ids[i],
                     "record not in the catalog for this group"});
    }
  }
  if (!ordered) {
    out.push_back({anchor_line, iteration, "records", "not in catalog order"});
  }
}

struct Group {
  const Line* step = nullptr;
  std::vector<const Line*> records;
};

struct GroupResult {
  Findings findings;
  std::optional<StepSnapshot> snap;
  std::optional<PointXZp> next;
  int failed = 0;
  std::optional<std::string> first_failed;
};

int failures(const std::vector<InvariantRecord>& rs,
             std::optional<std::string>& first) {
  int k = 0;
  for (const auto& r : rs) {
    if (r.passed) continue;
    if (!first) first = r.id;
    ++k;
  }
  return k;
}

struct PointState {
  std::optional<SymMatrix> x, z;
  std::optional<VectorXd> p;
  std::optional<double> phi, phim, mu;
  bool complete() const { return x && z && p && phi && phim && mu; }
};

PointState read_state(const Line& line, int n, int m, int iteration,
                      Findings& out) {
  Fields f(line, iteration, out);
  PointState s;
  s.x = f.sym("X", n);
  s.z = f.sym("Z", n);
  s.p = f.vec("p", m);
  s.phi = f.number("phi");
  s.phim = f.number("phim");
  s.mu = f.number("mu");
  return s;
}

}  // namespace

CheckReport check_trace(std::string_view text, const SdpProblem& prob,
                        CheckMode mode) {
  std::vector<Line> lines;
  {
    std::size_t pos = 0;
    int number = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + 1;
      ++number;
      if (raw.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      try {
        lines.push_back({number, json::parse(raw)});
      } catch (const json::parse_error& e) {
        throw ParseError("trace line " + std::to_string(number) +
                         ": invalid JSON: " + e.what());
      }
    }
  }
  if (lines.empty()) throw ParseError("trace is empty");

  const Line& header = lines.front();
  if (kind_of(header) != "header") {
    throw ParseError("trace line " + std::to_string(header.number) +
                     ": expected the header");
  }
  {
    auto it = header.j.find("schema");
    if (it == header.j.end() || !it->is_string() || *it != kTraceSchema) {
      throw SchemaError("trace schema is not " + std::string(kTraceSchema));
    }
    auto h = header.j.find("problem_hash");
    if (h == header.j.end() || !h->is_string() || *h != problem_hash(prob)) {
      throw HashMismatch("trace was produced for a different problem");
    }
  }

  CheckReport rep;
  Findings& out = rep.findings;
  const int n = prob.n();
  const int m = prob.m();
  Fields hf(header, -1, out);
  if (auto v = hf.integer("n"); v && *v != n) hf.flag("n", "differs from the problem");
  if (auto v = hf.integer("m"); v && *v != m) hf.flag("m", "differs from the problem");
  if (auto v = hf.string("vectorization"); v && *v != kVectorization) {
    hf.flag("vectorization", "unknown convention");
  }

  const json* opt = hf.get(header.j, "options");
  if (!opt) return rep;
  const std::size_t before_options = out.size();
  ContractParams params;
  const auto eps = hf.number_in(*opt, "epsilon");
  const auto sigma = hf.number_in(*opt, "sigma");
  const auto sigma_source = hf.string_in(*opt, "sigma_source");
  const auto max_it = hf.integer_in(*opt, "max_iterations");
  const auto max_src = hf.string_in(*opt, "max_iterations_source");
  const auto ceiling = hf.number_in(*opt, "gap_ceiling");
  const auto mode_name = hf.string_in(*opt, "mode");
  const json* tol = hf.get(*opt, "tolerances");
  std::optional<double> t_lsqr, t_pd, t_id;
  if (tol) {
    t_lsqr = hf.number_in(*tol, "lsqr_consistency");
    t_pd = hf.number_in(*tol, "pd_margin");
    t_id = hf.number_in(*tol, "identity_check");
  }
  if (out.size() != before_options) return rep;
  params.epsilon = *eps;
  params.sigma = *sigma;
  params.gap_ceiling = *ceiling;
  params.tol = {*t_lsqr, *t_pd, *t_id};
  const bool strict = *mode_name == "strict";
  if (!strict && *mode_name != "audit") hf.flag("mode", "unknown run mode");
  if (*sigma_source == "nu") {
    if (auto nu = hf.number_in(*opt, "nu")) {
      try {
        hf.expect_close("sigma", "sigma_from_nu", *sigma, sigma_from_nu(n, *nu));
      } catch (const std::invalid_argument& e) {
        hf.flag("nu", e.what());
      }
    }
  } else if (*sigma_source != "problem" && *sigma_source != "override") {
    hf.flag("sigma_source", "unknown source");
  }
  if (*max_src != "default" && *max_src != "override") {
    hf.flag("max_iterations_source", "unknown source");
  }

  std::size_t i = 1;
  const Line* state0 = nullptr;
  std::vector<const Line*> init_records;
  std::vector<Group> groups;
  const Line* final_state = nullptr;
  const Line* footer = nullptr;
  auto unexpected = [&](const Line& l, std::string_view expected) {
    out.push_back({l.number, -1, "structure",
                   "unexpected line kind '" + kind_of(l) + "', expected " +
                       std::string(expected)});
  };
  if (i < lines.size() && kind_of(lines[i]) == "state") state0 = &lines[i++];
  else out.push_back({0, 0, "structure", "missing initial state"});
  while (i < lines.size() && kind_of(lines[i]) == "record") {
    init_records.push_back(&lines[i++]);
  }
  while (i < lines.size() && kind_of(lines[i]) == "step") {
    Group g;
    g.step = &lines[i++];
    while (i < lines.size() && kind_of(lines[i]) == "record") {
      g.records.push_back(&lines[i++]);
    }
    groups.push_back(std::move(g));
  }
  if (i < lines.size() && kind_of(lines[i]) == "state") final_state = &lines[i++];
  else out.push_back({0, -1, "structure", "missing final state"});
  if (i < lines.size() && kind_of(lines[i]) == "footer") footer = &lines[i++];
  else out.push_back({0, -1, "structure", "missing footer"});
  for (; i < lines.size(); ++i) unexpected(lines[i], "end of trace");

  const int k_steps = static_cast<int>(groups.size());
  rep.iterations = k_steps;

  // Initialization.
  PointState s0;
  int failed_total = 0;
  std::optional<std::string> init_first_failed;
  if (state0) {
    Fields f(*state0, 0, out);
    if (auto it = f.integer("iteration"); it && *it != 0) {
      f.flag("state", "initial state must be iteration 0");
    }
    s0 = read_state(*state0, n, m, 0, out);
    if (s0.complete()) {
      const InitialPoint ip{*s0.x, *s0.z, *s0.p, *s0.phi, *s0.phim, *s0.mu};
      const auto want = check_initialization(prob, ip, params);
      compare_group(want, init_records, 0, state0->number, out);
      rep.records_checked += static_cast<int>(want.size());
      failed_total += failures(want, init_first_failed);
      const double gap = trace_product(ip.x.matrix(), ip.z.matrix());
      f.expect_close("phi", "phi", ip.phi, gap);
      f.expect_close("mu", "mu", ip.mu, gap / n);
      f.expect_close("phim", "phim", ip.phim, gap / params.sigma);
    }
  }

  // Iteration groups.
  std::vector<GroupResult> results(groups.size());
  auto check_group = [&](int g) {
    const Group& grp = groups[g];
    GroupResult& r = results[g];
    const int k = g + 1;
    Fields f(*grp.step, k, r.findings);
    if (auto it = f.integer("iteration"); it && *it != k) {
      f.flag("step", "iteration number out of sequence");
    }
    auto xm = f.sym("Xm", n);
    auto zm = f.sym("Zm", n);
    auto pm = f.vec("pm", m);
    auto dx = f.sym("dX", n);
    auto dz = f.sym("dZ", n);
    auto dp = f.vec("dp", m);
    if (!(xm && zm && pm && dx && dz && dp)) return;
    r.snap = StepSnapshot{*xm, *zm, *pm, *dx, *dz, *dp};
    r.next = advance(*r.snap);
    const auto want = check_iteration(prob, *r.snap, *r.next, k, params);
    compare_group(want, grp.records, k, grp.step->number, r.findings);
    r.failed = failures(want, r.first_failed);
  };
  if (mode == CheckMode::kParallel) {
    kernels::for_each_group_parallel(k_steps, check_group);
  } else {
    kernels::for_each_group_serial(k_steps, check_group);
  }

  // Chain, guards and strict-mode discipline.
  std::optional<PointXZp> prev;
  double prev_phi = kNaN;
  double prev_phim = kNaN;
  if (s0.x && s0.z && s0.p) {
    prev = PointXZp{*s0.x, *s0.z, *s0.p};
    prev_phi = trace_product(s0.x->matrix(), s0.z->matrix());
  }
  if (strict && init_first_failed && k_steps > 0) {
    out.push_back({groups.front().step->number, 1, *init_first_failed,
                   "strict run continued past a failed initialization record"});
  }
  for (int g = 0; g < k_steps; ++g) {
    GroupResult& r = results[g];
    const int k = g + 1;
    const int ln = groups[g].step->number;
    out.insert(out.end(), r.findings.begin(), r.findings.end());
    rep.records_checked += static_cast<int>(loop_catalog().size());
    failed_total += r.failed;
    if (!std::isnan(prev_phi) && !(prev_phi > params.epsilon)) {
      out.push_back({ln, k, "loop guard",
                     "step taken although phi <= epsilon"});
    }
    if (g > 0 && prev_phi - prev_phim > 0) {
      out.push_back({ln, k, "divergence guard",
                     "step taken after phi increased"});
    }
    if (strict && g > 0 && results[g - 1].failed > 0) {
      out.push_back({ln, k, *results[g - 1].first_failed,
                     "strict run continued past a failed record"});
    }
    if (r.snap) {
      if (prev) {
        if (!close(r.snap->xm.matrix(), prev->x.matrix())) {
          out.push_back({ln, k, "Xm", "does not continue the previous X"});
        }
        if (!close(r.snap->zm.matrix(), prev->z.matrix())) {
          out.push_back({ln, k, "Zm", "does not continue the previous Z"});
        }
        if (!close(MatrixXd(r.snap->pm), MatrixXd(prev->p))) {
          out.push_back({ln, k, "pm", "does not continue the previous p"});
        }
      }
      prev = r.next;
      prev_phi = trace_product(r.next->x.matrix(), r.next->z.matrix());
      prev_phim = trace_product(r.snap->xm.matrix(), r.snap->zm.matrix());
    } else {
      prev.reset();
      prev_phi = prev_phim = kNaN;
    }
  }

  // Final state.
  PointState fin;
  if (final_state) {
    Fields f(*final_state, k_steps, out);
    if (auto it = f.integer("iteration"); it && *it != k_steps) {
      f.flag("state", "final state iteration differs from the step count");
    }
    fin = read_state(*final_state, n, m, k_steps, out);
    if (prev && fin.x && fin.z && fin.p) {
      if (!close(fin.x->matrix(), prev->x.matrix()) ||
          !close(fin.z->matrix(), prev->z.matrix()) ||
          !close(MatrixXd(*fin.p), MatrixXd(prev->p))) {
        f.flag("state", "final point is not the result of the last step");
      }
    }
    if (fin.complete()) {
      const double gap = trace_product(fin.x->matrix(), fin.z->matrix());
      f.expect_close("phi", "phi", *fin.phi, gap);
      f.expect_close("mu", "mu", *fin.mu, gap / n);
      const double phim =
          k_steps == 0 ? (s0.phim ? *s0.phim : kNaN) : prev_phim;
      f.expect_close("phim", "phim", *fin.phim, phim);
    }
  }

  // Footer.
  if (!footer) return rep;
  Fields f(*footer, -1, out);
  const auto status = f.string("status");
  if (status) rep.status = *status;
  if (auto it = f.integer("iterations"); it && *it != k_steps) {
    f.flag("iterations", "footer says " + std::to_string(*it) + ", trace has " +
                             std::to_string(k_steps) + " step groups");
  }
  const double final_phi =
      fin.x && fin.z ? trace_product(fin.x->matrix(), fin.z->matrix()) : kNaN;
  if (auto v = f.number("final_gap")) f.expect_close("final_gap", "final gap", *v, final_phi);
  if (auto v = f.integer("violations"); v && *v != failed_total) {
    f.flag("violations", "footer says " + std::to_string(*v) +
                             ", recomputation finds " +
                             std::to_string(failed_total));
  }

  std::optional<ConvergenceBudget> budget;
  if (s0.x && s0.z) {
    const double g0 = trace_product(s0.x->matrix(), s0.z->matrix());
    try {
      budget = iteration_bound(g0, params.epsilon, params.sigma);
    } catch (const std::invalid_argument& e) {
      f.flag("budget", e.what());
    }
  }
  if (const json* b = f.get(footer->j, "budget"); b && budget) {
    if (auto v = f.number_in(*b, "initial_gap")) {
      f.expect_close("budget", "initial_gap", *v, budget->initial_gap);
    }
    if (auto v = f.number_in(*b, "epsilon")) f.expect_close("budget", "epsilon", *v, budget->epsilon);
    if (auto v = f.number_in(*b, "sigma")) f.expect_close("budget", "sigma", *v, budget->sigma);
    if (auto v = f.integer_in(*b, "bound_iterations");
        v && *v != budget->bound_iterations) {
      f.flag("budget", "bound_iterations " + std::to_string(*v) +
                           ", recomputed " +
                           std::to_string(budget->bound_iterations));
    }
  }
  if (budget && k_steps > budget->bound_iterations) {
    f.flag("budget", std::to_string(k_steps) + " iterations exceed the bound " +
                         std::to_string(budget->bound_iterations));
  }
  if (budget && *max_src == "default" &&
      *max_it != std::max(1, 10 * budget->bound_iterations)) {
    hf.flag("max_iterations", "default cap is not 10 times the bound");
  }
  if (k_steps > *max_it) f.flag("iterations", "exceed max_iterations");

  const json* off = f.get(footer->j, "offending");
  std::optional<std::pair<std::string, long long>> offending;
  if (off && !off->is_null()) {
    auto id = f.string_in(*off, "id");
    auto it = f.integer_in(*off, "iteration");
    if (id && it) offending = std::make_pair(*id, *it);
  }

  if (!status) return rep;
  const std::string& st = *status;
  const bool converged_now = final_phi <= params.epsilon;
  if (st == "Converged") {
    if (!converged_now) f.flag("status", "Converged but the final gap exceeds epsilon");
  } else if (st == "DivergenceGuard") {
    if (!(k_steps > 0 && final_phi - prev_phim > 0)) {
      f.flag("status", "DivergenceGuard but phi did not increase");
    }
  } else if (st == "IterationCap") {
    if (k_steps != *max_it || converged_now) {
      f.flag("status", "IterationCap without reaching max_iterations");
    }
  } else if (st == "InvariantViolation") {
    if (!strict) f.flag("status", "InvariantViolation outside strict mode");
    const std::optional<std::string>& first =
        k_steps == 0 ? init_first_failed : results.back().first_failed;
    const long long at = k_steps;
    if (!first) {
      f.flag("status", "InvariantViolation but the last group passes");
    } else if (!offending || offending->first != *first ||
               offending->second != at) {
      f.flag("offending", "expected " + *first + " at iteration " +
                              std::to_string(at));
    }
  } else {
    f.flag("status", "unknown status '" + st + "'");
  }
  if (st != "InvariantViolation" && offending) {
    f.flag("offending", "set although the run was not aborted");
  }
  return rep;
}

}  // namespace csdp
