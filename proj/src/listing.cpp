#include "csdp/listing.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "csdp/catalog.hpp"
#include "csdp/detail/json_io.hpp"

namespace csdp {

std::string_view to_string(ListingFlavor f) {
  return f == ListingFlavor::kCLike ? "c-like" : "pseudo-matlab";
}

std::optional<ListingFlavor> parse_flavor(std::string_view name) {
  if (name == "pseudo-matlab") return ListingFlavor::kPseudoMatlab;
  if (name == "c-like") return ListingFlavor::kCLike;
  return std::nullopt;
}

std::string AnnotatedListing::text() const {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string format_constant(double x) {
  const double ax = std::abs(x);
  if (ax == 0 || (ax >= 1e-5 && ax < 1e15)) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
    return std::string(buf, res.ptr);
  }
  std::string s = detail::num_short(x);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mant = s.substr(0, e);
  std::string exp = s.substr(e + 1);
  std::string sign;
  if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
    if (exp[0] == '-') sign = "-";
    exp.erase(0, 1);
  }
  const auto nz = exp.find_first_not_of('0');
  exp = nz == std::string::npos ? "0" : exp.substr(nz);
  return mant + "e" + sign + exp;
}

namespace {

std::string replace_all(std::string s, std::string_view from,
                        std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

std::string matrix_literal(const Eigen::MatrixXd& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += format_constant(m(i, j));
    }
  }
  return s + "]";
}

std::string column_literal(const Eigen::VectorXd& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += "; ";
    s += format_constant(v(i));
  }
  return s + "]";
}

class Emitter {
 public:
  Emitter(ListingFlavor flavor, std::string ceiling, std::string sigma)
      : flavor_(flavor), ceiling_(std::move(ceiling)), sigma_(std::move(sigma)) {
    out_.flavor = flavor;
  }

  void comment(std::string_view text) {
    line(std::string(c_like() ? "// " : "% ") + std::string(text));
  }

  void rule(std::string_view text) {
    line(std::string(c_like() ? "//# rule: " : "%# rule: ") + std::string(text));
  }

  /// Emits the next clause of the clause map, which must belong to `id`.
  void contract(std::string_view id) {
    const auto clauses = clause_map();
    if (next_ >= clauses.size() || clauses[next_].contract_id != id) {
      throw std::logic_error("listing clause order differs from clause map at " +
                             std::string(id));
    }
    std::string text = std::string(clauses[next_++].clause);
    text = replace_all(std::move(text), "{c}", ceiling_);
    text = replace_all(std::move(text), "{s}", sigma_);
    line(c_like() ? "/*@ " + text + " */" : "%@ " + text);
    const int at = static_cast<int>(out_.lines.size());
    auto& loc = out_.contract_index[std::string(id)];
    loc.anchor = std::string(catalog_entry(id).anchor);
    loc.lines.push_back({at, at});
  }

  void open() {
    line("{");
    ++depth_;
  }
  void close() {
    --depth_;
    line("}");
  }
  void code(std::string_view text) { line(std::string(text)); }

  /// A block holding `stmts`, preceded by the given contracts.
  void block(std::initializer_list<std::string_view> ids,
             std::initializer_list<std::string> stmts) {
    for (auto id : ids) contract(id);
    open();
    for (const auto& s : stmts) code(s);
    close();
  }

  bool c_like() const { return flavor_ == ListingFlavor::kCLike; }

  AnnotatedListing finish() {
    if (next_ != clause_map().size()) {
      throw std::logic_error("listing left clauses of the clause map unused");
    }
    return std::move(out_);
  }

 private:
  void line(std::string text) {
    out_.lines.push_back(std::string(2 * depth_, ' ') + text);
  }

  ListingFlavor flavor_;
  std::string ceiling_;
  std::string sigma_;
  AnnotatedListing out_;
  std::size_t next_ = 0;
  int depth_ = 0;
};

}  // namespace

AnnotatedListing emit_annotated_listing(const SdpProblem& prob,
                                        const SolverOptions& opts,
                                        ListingFlavor flavor) {
  const int m = prob.m();
  const std::string sigma = format_constant(effective_sigma(prob, opts));
  Emitter e(flavor, format_constant(opts.gap_ceiling), sigma);

  e.comment("credible-sdp annotated listing (" + std::string(to_string(flavor)) +
            ")");
  e.comment("problem " + problem_hash(prob));
  e.comment("n=" + std::to_string(prob.n()) + " m=" + std::to_string(m));

  e.block({"init.F0_pd"}, {"F0=" + matrix_literal(prob.f0().matrix()) + ";"});
  {
    e.contract("init.F_symmetric");
    e.open();
    for (int i = 0; i < m; ++i) {
      e.code("F" + std::to_string(i + 1) + "=" +
             matrix_literal(prob.f(i).matrix()) + ";");
    }
    e.code("b=" + column_literal(prob.b()) + ";");
    e.close();
  }
  {
    std::string stack = "F=[";
    for (int i = 0; i < m; ++i) {
      if (i) stack += "; ";
      stack += "vecs(F" + std::to_string(i + 1) + ")";
    }
    e.block({}, {stack + "];", "Ft=F';"});
  }
  e.block({"init.sizes"}, {"n=length(F0);"});
  e.block({"init.sizes"}, {"m=length(b);"});
  e.block({"init.Z_pd", "init.Z_feasible"}, {"Z=mats(lsqr(F,-b),n);"});
  const auto& x0 = prob.hints().x0;
  e.block({"init.X_pd", "init.gap_ceiling"},
          {x0 ? "X=" + matrix_literal(x0->matrix()) + ";" : std::string("X=X0;")});
  e.rule("skip, X>0 && Z>0 implies trace(X*Z)>0");
  e.block({"init.gap_positive", "init.gap_positive"}, {});
  e.block({"init.P_symmetric", "init.p_feasible"},
          {"P=mats(lsqr(Ft,vecs(-X-F0)),n);", "p=vecs(P);"});
  e.block({"init.epsilon_positive"},
          {"epsilon=" + format_constant(opts.epsilon) + ";"});
  e.block({"init.sigma_value"}, {"sigma=" + sigma + ";"});
  e.rule("substitution, phi:=trace(X*Z)");
  e.block({"init.phi_bounds", "init.phi_bounds", "init.phi_bounds",
           "init.phi_bounds", "init.phi_gap"},
          {"phi=trace(X*Z);"});
  e.rule("consequence, phi>0 && " + sigma + "<0.76 implies phi-0.76*(1/" +
         sigma + "*phi)<0");
  e.block({"init.phi_contraction", "init.phi_contraction"},
          {"phim=1/" + sigma + "*phi;"});
  e.block({"init.mu", "init.central_path", "init.central_path_scaled"},
          {"mu=trace(X*Z)/n;"});

  e.rule("while, invariant X>0 && Z>0 && phi>0 && phi<=" +
         format_constant(opts.gap_ceiling) + " && phi-0.76*phim<0");
  e.contract("I1");
  e.contract("I2");
  e.contract("I4");
  e.contract("I1");
  e.contract("I2");
  e.contract("I3");
  e.contract("I4");
  e.open();
  e.code(e.c_like() ? "while (phi>epsilon)" : "while (phi>epsilon) do");
  e.open();
  e.rule("composition");
  e.block({}, {"Xm=X;", "Zm=Z;", "pm=p;"});
  e.block({}, {"mu=trace(Xm*Zm)/n;"});
  e.block({}, {"Zh=Zm^(0.5);", "Zhi=Zh^(-1);", "G=krons(Zhi,Zh'*Xm,n,m);",
               "H=krons(Zhi*Zm,Zh',n,m);"});
  e.block({"I9", "I5", "I10", "I6", "I7"},
          {"r=sigma*mu*eye(n,n)-Zh*Xm*Zh;", "dZm=lsqr(F,zeros(m,1));",
           "dXm=lsqr(H, vecs(r)-G*dZm);"});
  e.block({"I9"}, {"dpm=lsqr(Ft,-dXm);", "p=pm+dpm;"});
  e.rule("substitution, X:=Xm+mats(dXm,n), Z:=Zm+mats(dZm,n)");
  e.block({"I12", "I12", "I8", "I11", "I11"},
          {"X=Xm+mats(dXm,n);", "Z=Zm+mats(dZm,n);"});
  e.block({}, {"phim=trace(Xm*Zm);"});
  e.block({}, {"phi=trace(X*Z);"});
  e.block({}, {"mu=trace(X*Z)/n;"});
  e.close();
  if (!e.c_like()) e.code("end");
  e.close();
  return e.finish();
}

}  // namespace csdp
