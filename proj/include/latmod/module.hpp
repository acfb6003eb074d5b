#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latmod/element.hpp"
#include "latmod/lattice.hpp"
#include "latmod/mul_lattice.hpp"
#include "latmod/table.hpp"
#include "latmod/validation.hpp"

namespace latmod {

using ActionTable = Table2D<Scalar, Carrier, Carrier>;

/// Checks the five module axioms.  Join-distributivity in either argument is
/// checked on binary joins plus the empty join, which in a finite lattice
/// covers every family.
inline ValidationReport validate_module(MulLattice const& L, CarrierLattice const& M,
                                        ActionTable const& act) {
  ValidationReport report;
  auto sn = [&](Scalar x) { return L.name(x); };
  auto cn = [&](Carrier x) { return M.name(x); };
  for (auto A : M.elements()) {
    if (act(L.top(), A) != A) report.add("unital", {cn(A)});
    if (act(L.bottom(), A) != M.bottom()) report.add("annihilator", {cn(A)});
    for (auto a : L.elements()) {
      for (auto b : L.elements()) {
        if (act(L.join(a, b), A) != M.join(act(a, A), act(b, A))) {
          report.add("scalar-join-distributivity", {sn(a), sn(b), cn(A)});
        }
        if (act(L.mul(a, b), A) != act(a, act(b, A))) {
          report.add("associativity", {sn(a), sn(b), cn(A)});
        }
      }
    }
  }
  for (auto a : L.elements()) {
    if (act(a, M.bottom()) != M.bottom()) report.add("carrier-join-distributivity", {sn(a), "{}"});
    for (auto A : M.elements()) {
      for (auto B : M.elements()) {
        if (act(a, M.join(A, B)) != M.join(act(a, A), act(a, B))) {
          report.add("carrier-join-distributivity", {sn(a), cn(A), cn(B)});
        }
      }
    }
  }
  return report;
}

/// A finite lattice module M over a multiplicative lattice L.  Both residuals
/// are tabulated at construction.
class LatticeModule {
 public:
  LatticeModule() = default;

  static LatticeModule make(MulLattice L, CarrierLattice M, ActionTable act) {
    if (act.rows() != L.size() || act.cols() != M.size()) {
      throw IncompleteTable("action table has the wrong shape");
    }
    auto report = validate_module(L, M, act);
    if (!report.ok()) throw InvalidStructure("module action is invalid", std::move(report));
    LatticeModule out;
    out.L_ = std::move(L);
    out.M_ = std::move(M);
    out.act_ = std::move(act);
    out.tabulate();
    return out;
  }

  /// L acting on itself by its own multiplication.
  static LatticeModule over_itself(MulLattice L) {
    CarrierLattice M = L.lattice().rebind<carrier_tag>();
    ActionTable act(L.size(), M.size());
    for (auto a : L.elements()) {
      for (auto b : L.elements()) act(a, Carrier(b.index())) = Carrier(L.mul(a, b).index());
    }
    return make(std::move(L), std::move(M), std::move(act));
  }

  [[nodiscard]] MulLattice const& scalars() const noexcept { return L_; }
  [[nodiscard]] CarrierLattice const& carrier() const noexcept { return M_; }
  [[nodiscard]] ActionTable const& action() const noexcept { return act_; }
  [[nodiscard]] std::size_t size() const noexcept { return M_.size(); }
  [[nodiscard]] auto elements() const { return M_.elements(); }
  [[nodiscard]] std::string const& name(Carrier X) const { return M_.name(X); }
  [[nodiscard]] std::string const& name(Scalar a) const { return L_.name(a); }
  [[nodiscard]] bool leq(Carrier A, Carrier B) const noexcept { return M_.leq(A, B); }
  [[nodiscard]] Carrier meet(Carrier A, Carrier B) const noexcept { return M_.meet(A, B); }
  [[nodiscard]] Carrier join(Carrier A, Carrier B) const noexcept { return M_.join(A, B); }
  [[nodiscard]] Carrier top() const noexcept { return M_.top(); }
  [[nodiscard]] Carrier bottom() const noexcept { return M_.bottom(); }
  [[nodiscard]] bool is_proper(Carrier N) const noexcept { return M_.is_proper(N); }

  [[nodiscard]] Carrier act(Scalar a, Carrier X) const noexcept { return act_(a, X); }
  /// a * I_M
  [[nodiscard]] Carrier scale_top(Scalar a) const noexcept { return act_(a, M_.top()); }

  /// (N:a), the largest X with aX <= N.
  [[nodiscard]] Carrier residual(Carrier N, Scalar a) const noexcept { return res_scalar_(N, a); }
  /// (A:B), the largest x in L with xB <= A.
  [[nodiscard]] Scalar residual(Carrier A, Carrier B) const noexcept { return res_carrier_(A, B); }
  /// (N:I_M)
  [[nodiscard]] Scalar colon_top(Carrier N) const noexcept { return res_carrier_(N, M_.top()); }

  /// Is M literally L acting on itself?
  [[nodiscard]] bool is_self_module() const {
    if (M_.names() != L_.lattice().names()) return false;
    for (auto a : L_.elements()) {
      for (auto b : L_.elements()) {
        if (!(M_.leq(Carrier(a.index()), Carrier(b.index())) == L_.leq(a, b))) return false;
        if (act_(a, Carrier(b.index())).index() != L_.mul(a, b).index()) return false;
      }
    }
    return true;
  }

 private:
  using ResidualByScalar = Table2D<Carrier, Scalar, Carrier>;
  using ResidualByCarrier = Table2D<Carrier, Carrier, Scalar>;

  void tabulate() {
    res_scalar_ = ResidualByScalar(M_.size(), L_.size());
    for (auto N : M_.elements()) {
      for (auto a : L_.elements()) {
        Carrier acc = M_.bottom();
        for (auto X : M_.elements()) {
          if (M_.leq(act_(a, X), N)) acc = M_.join(acc, X);
        }
        res_scalar_(N, a) = acc;
      }
    }
    res_carrier_ = ResidualByCarrier(M_.size(), M_.size());
    for (auto A : M_.elements()) {
      for (auto B : M_.elements()) {
        Scalar acc = L_.bottom();
        for (auto x : L_.elements()) {
          if (M_.leq(act_(x, B), A)) acc = L_.join(acc, x);
        }
        res_carrier_(A, B) = acc;
      }
    }
  }

  MulLattice L_;
  CarrierLattice M_;
  ActionTable act_;
  ResidualByScalar res_scalar_;
  ResidualByCarrier res_carrier_;
};

inline bool is_faithful(LatticeModule const& M) {
  return M.residual(M.bottom(), M.top()) == M.scalars().bottom();
}

/// Every N has the form a * I_M.
inline bool is_multiplication_module(LatticeModule const& M) {
  std::vector<char> hit(M.size(), 0);
  for (auto a : M.scalars().elements()) hit[M.scale_top(a).index()] = 1;
  for (char h : hit) {
    if (!h) return false;
  }
  return true;
}

inline PrincipalFlags is_principal(LatticeModule const& M, Carrier N) {
  MulLattice const& L = M.scalars();
  PrincipalFlags f{true, true};
  for (auto b : L.elements()) {
    for (auto B : M.elements()) {
      if (f.meet_principal &&
          M.act(L.meet(b, M.residual(B, N)), N) != M.meet(M.act(b, N), B)) {
        f.meet_principal = false;
      }
      if (f.join_principal &&
          L.join(b, M.residual(B, N)) != M.residual(M.join(M.act(b, N), B), N)) {
        f.join_principal = false;
      }
      if (!f.meet_principal && !f.join_principal) return f;
    }
  }
  return f;
}

inline bool is_pg_module(LatticeModule const& M) {
  std::vector<char> principal(M.size(), 0);
  for (auto N : M.elements()) principal[N.index()] = is_principal(M, N).principal();
  for (auto X : M.elements()) {
    Carrier acc = M.bottom();
    for (auto N : M.elements()) {
      if (principal[N.index()] && M.leq(N, X)) acc = M.join(acc, N);
    }
    if (acc != X) return false;
  }
  return true;
}

/// Does meet(a_i * I_M) equal (meet a_i) * I_M for this family?
inline bool check_meet_distribution(LatticeModule const& M, std::span<Scalar const> family) {
  if (family.empty()) throw BadParameter("meet distribution needs a non-empty family");
  Carrier lhs = M.top();
  Scalar m = M.scalars().top();
  for (Scalar a : family) {
    lhs = M.meet(lhs, M.scale_top(a));
    m = M.scalars().meet(m, a);
  }
  return lhs == M.scale_top(m);
}

/// Standing hypotheses of the theorems, evaluated once per instance.
struct HypothesisFlags {
  bool faithful = false;
  bool multiplication_module = false;
  bool pg_lattice = false;
  bool pg_module = false;
  bool im_compact = true;  // finite carrier

  /// L a PG-lattice and M a faithful multiplication PG-lattice module with I_M compact.
  [[nodiscard]] bool standing() const noexcept {
    return faithful && multiplication_module && pg_lattice && pg_module && im_compact;
  }
  friend bool operator==(HypothesisFlags const&, HypothesisFlags const&) = default;
};

struct InstanceBundle {
  std::string name;
  LatticeModule module;
  HypothesisFlags flags;
};

inline InstanceBundle make_bundle(std::string name, LatticeModule module) {
  HypothesisFlags f;
  f.faithful = is_faithful(module);
  f.multiplication_module = is_multiplication_module(module);
  f.pg_lattice = is_pg_lattice(module.scalars());
  f.pg_module = is_pg_module(module);
  f.im_compact = true;
  return InstanceBundle{std::move(name), std::move(module), f};
}

}  // namespace latmod
