#include "csdp/catalog.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace csdp {

namespace {

using enum Phase;

constexpr std::array kCatalog = {
    CatalogEntry{"init.F0_pd", kInitialization, "post F0 assignment: F0>0"},
    CatalogEntry{"init.F_symmetric", kInitialization,
                 "post Fi assignments: transpose(Fi)==Fi"},
    CatalogEntry{"init.sizes", kInitialization,
                 "post size computation: n>=1 && m>=1"},
    CatalogEntry{"init.Z_pd", kInitialization, "post Z=mats(lsqr(F,-b),n): Z>0"},
    CatalogEntry{"init.Z_feasible", kInitialization,
                 "lsqr default contract: F*vecs(Z)==-b"},
    CatalogEntry{"init.X_pd", kInitialization, "post X assignment: X>0"},
    CatalogEntry{"init.gap_ceiling", kInitialization,
                 "post X assignment: trace(X*Z)<=c"},
    CatalogEntry{"init.gap_positive", kInitialization,
                 "empty block, X>0 && Z>0 implies trace(X*Z)>0"},
    CatalogEntry{"init.P_symmetric", kInitialization,
                 "post P computation: transpose(P)==P"},
    CatalogEntry{"init.p_feasible", kInitialization,
                 "lsqr default contract: F0+sum(p(i)*Fi)+X==0"},
    CatalogEntry{"init.epsilon_positive", kInitialization,
                 "post epsilon assignment: epsilon>0"},
    CatalogEntry{"init.sigma_value", kInitialization,
                 "post sigma assignment: sigma==s"},
    CatalogEntry{"init.phi_gap", kInitialization,
                 "post phi assignment: phi==trace(X*Z)"},
    CatalogEntry{"init.phi_bounds", kInitialization,
                 "post phi assignment: phi>0 && phi<=c"},
    CatalogEntry{"init.phi_contraction", kInitialization,
                 "post phim assignment: phi-0.76*phim<0"},
    CatalogEntry{"init.mu", kInitialization,
                 "post mu assignment: mu==trace(X*Z)/n"},
    CatalogEntry{"init.central_path", kInitialization,
                 "initial neighborhood: norm(X*Z-mu*I)<=0.3105*mu"},
    CatalogEntry{"init.central_path_scaled", kInitialization,
                 "initial scaled neighborhood: "
                 "norm(Z^0.5*X*Z^0.5-mu*I)<=0.3105*mu"},
    CatalogEntry{"I1", kLoop, "while-loop invariant: X>0 && Z>0"},
    CatalogEntry{"I2", kLoop, "while-loop invariant: phi>0 && phi<=c"},
    CatalogEntry{"I3", kLoop, "while-loop invariant: phi-0.76*phim<0"},
    CatalogEntry{"I4", kLoop,
                 "while-loop invariant: norm(X*Z-mu*I)<=0.3105*mu"},
    CatalogEntry{"I5", kLoop, "post dZm: norm(Zhi*dZ*Zhi)<=0.7"},
    CatalogEntry{"I6", kLoop,
                 "post dXm: norm(Zhi*dX*dZ*Zh)<=0.3105*sigma*mu"},
    CatalogEntry{"I7", kLoop,
                 "trace identity: trace(Xm*dZ)+trace(dX*Zm)+trace(Xm*Zm)-"
                 "sigma*n*mu==0"},
    CatalogEntry{"I8", kLoop,
                 "post X,Z update: trace(X*Z)-sigma*trace(Xm*Zm)==0"},
    CatalogEntry{"I9", kLoop, "lsqr contracts: F*dZm==0 && Ft*dpm==-dXm"},
    CatalogEntry{"I10", kLoop,
                 "symmetrized Newton equation: mats(H*dXm)+mats(G*dZm)=="
                 "sigma*mu*I-Zh*Xm*Zh"},
    CatalogEntry{"I11", kLoop,
                 "neighborhood chain: norm(Z^0.5*X*Z^0.5-sigma*mu*I)<=0.5*"
                 "norm(Zhi*(Z*X-sigma*mu*I)*Zh+Zh*(X*Z-sigma*mu*I)*Zhi)<="
                 "0.3105*sigma*mu"},
    CatalogEntry{"I12", kLoop,
                 "step certificate: I+Zhi*dZ*Zhi>0 implies Z>0"},
};

constexpr std::size_t kInitCount = 18;
static_assert(kCatalog.size() == kInitCount + 12);

// {c} is the gap ceiling and {s} the reduction factor.
constexpr std::array kClauses = {
    ClauseMapping{"ensures F0>0;", "init.F0_pd"},
    ClauseMapping{"ensures transpose(Fi)==Fi;", "init.F_symmetric"},
    ClauseMapping{"ensures n>=1;", "init.sizes"},
    ClauseMapping{"ensures m>=1;", "init.sizes"},
    ClauseMapping{"ensures Z>0;", "init.Z_pd"},
    ClauseMapping{"ensures F*vecs(Z)==-b;", "init.Z_feasible"},
    ClauseMapping{"ensures X>0;", "init.X_pd"},
    ClauseMapping{"ensures trace(X*Z)<={c};", "init.gap_ceiling"},
    ClauseMapping{"requires X>0 && Z>0;", "init.gap_positive"},
    ClauseMapping{"ensures trace(X*Z)>0;", "init.gap_positive"},
    ClauseMapping{"ensures transpose(P)==P;", "init.P_symmetric"},
    ClauseMapping{"ensures F0+sum(p(i)*Fi)+X==0;", "init.p_feasible"},
    ClauseMapping{"ensures epsilon>0;", "init.epsilon_positive"},
    ClauseMapping{"ensures sigma=={s};", "init.sigma_value"},
    ClauseMapping{"requires trace(X*Z)>0;", "init.phi_bounds"},
    ClauseMapping{"requires trace(X*Z)<={c};", "init.phi_bounds"},
    ClauseMapping{"ensures phi>0;", "init.phi_bounds"},
    ClauseMapping{"ensures phi<={c};", "init.phi_bounds"},
    ClauseMapping{"ensures phi==trace(X*Z);", "init.phi_gap"},
    ClauseMapping{"requires phi>0;", "init.phi_contraction"},
    ClauseMapping{"ensures phi-0.76*phim<0;", "init.phi_contraction"},
    ClauseMapping{"ensures mu==trace(X*Z)/n;", "init.mu"},
    ClauseMapping{"ensures norm(X*Z-mu*eye(n,n),'fro')<=0.3105*mu;",
                  "init.central_path"},
    ClauseMapping{
        "ensures norm(Z^(0.5)*X*Z^(0.5)-mu*eye(n,n),'fro')<=0.3105*mu;",
        "init.central_path_scaled"},
    ClauseMapping{"requires X>0 && Z>0;", "I1"},
    ClauseMapping{"requires phi>0 && phi<={c};", "I2"},
    ClauseMapping{"requires norm(X*Z-mu*eye(n,n),'fro')<=0.3105*mu;", "I4"},
    ClauseMapping{"ensures X>0 && Z>0;", "I1"},
    ClauseMapping{"ensures phi>0 && phi<={c};", "I2"},
    ClauseMapping{"ensures phi-0.76*phim<0;", "I3"},
    ClauseMapping{"ensures norm(X*Z-mu*eye(n,n),'fro')<=0.3105*mu;", "I4"},
    ClauseMapping{"ensures F*dZm==zeros(m,1);", "I9"},
    ClauseMapping{"ensures norm(Zhi*mats(dZm,n)*Zhi,'fro')<=0.7;", "I5"},
    ClauseMapping{"ensures mats(H*dXm)+mats(G*dZm)==sigma*mu*eye(n,n)-Zh*Xm*Zh;",
                  "I10"},
    ClauseMapping{
        "ensures norm(Zhi*mats(dXm,n)*mats(dZm,n)*Zh,'fro')<=0.3105*sigma*mu;",
        "I6"},
    ClauseMapping{"ensures trace(Xm*mats(dZm,n))+trace(mats(dXm,n)*Zm)+"
                  "trace(Xm*Zm)-sigma*n*mu==0;",
                  "I7"},
    ClauseMapping{"ensures Ft*dpm==-dXm;", "I9"},
    ClauseMapping{"ensures eye(n,n)+Zhi*mats(dZm,n)*Zhi>0;", "I12"},
    ClauseMapping{"ensures Z>0;", "I12"},
    ClauseMapping{"ensures trace(X*Z) - {s}*trace(Xm*Zm)==0;", "I8"},
    ClauseMapping{
        "ensures norm(Z^(0.5)*X*Z^(0.5)-sigma*mu*eye(n,n),'fro')<=0.5*norm(Zhi*"
        "(Z*X-sigma*mu*eye(n,n))*Zh+Zh*(X*Z-sigma*mu*eye(n,n))*Zhi,'fro');",
        "I11"},
    ClauseMapping{"ensures 0.5*norm(Zhi*(Z*X-sigma*mu*eye(n,n))*Zh+Zh*(X*Z-"
                  "sigma*mu*eye(n,n))*Zhi,'fro')<=0.3105*sigma*mu;",
                  "I11"},
};

}  // namespace

std::span<const CatalogEntry> contract_catalog() { return kCatalog; }

std::span<const CatalogEntry> initialization_catalog() {
  return std::span<const CatalogEntry>(kCatalog).first(kInitCount);
}

std::span<const CatalogEntry> loop_catalog() {
  return std::span<const CatalogEntry>(kCatalog).subspan(kInitCount);
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("unknown contract id " + std::string(id));
}

std::span<const ClauseMapping> clause_map() { return kClauses; }

}  // namespace csdp
