#pragma once

// Everything a theorem check needs about one instance, computed once:
// classifications, radicals, expansion pools with their delta-primary tables,
// and the enumerated families and chains the quantifiers range over.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latmod/classify.hpp"
#include "latmod/expansion.hpp"
#include "latmod/module.hpp"

namespace latmod::verify {

enum class ParamKind {
  scalar,
  carrier,
  expansion_m,
  expansion_l,
  scalar_family,
  carrier_family,
  carrier_chain,
  part,
};

struct Param {
  std::string name;
  ParamKind kind;
  std::size_t parts = 0;  // choices, for ParamKind::part only
};

using Tuple = std::vector<std::size_t>;

/// User-supplied expansions added to the pools.
struct ExtraExpansions {
  std::vector<ExpansionM> on_module;
  std::vector<ExpansionL> on_scalars;
};

/// Ground sets with at most this many elements have every non-empty subset
/// enumerated; larger ones use singletons, pairs, triples and the full set.
inline constexpr std::size_t kAllSubsetsLimit = 12;
/// Carriers with at most this many elements have every chain enumerated.
inline constexpr std::size_t kAllChainsLimit = 8;

namespace detail {

template <class E>
std::vector<std::vector<E>> families_of(std::size_t n) {
  std::vector<std::vector<E>> out;
  if (n <= kAllSubsetsLimit) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<E> f;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) f.push_back(E(i));
      }
      out.push_back(std::move(f));
    }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out.push_back({E(i)});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({E(i), E(j)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({E(i), E(j), E(k)});
    }
  }
  std::vector<E> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(E(i));
  out.push_back(std::move(all));
  return out;
}

inline std::vector<std::vector<Carrier>> chains_of(CarrierLattice const& M) {
  std::size_t const n = M.size();
  std::vector<std::vector<Carrier>> out;
  if (n <= kAllChainsLimit) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Carrier> f;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) f.push_back(Carrier(i));
      }
      if (M.is_chain(f)) out.push_back(std::move(f));
    }
    return out;
  }
  for (auto A : M.elements()) out.push_back({A});
  for (auto A : M.elements()) {
    for (auto B : M.elements()) {
      if (M.lt(A, B)) out.push_back({A, B});
    }
  }
  // Maximal chains of the proper part, following covers upward from bottom.
  auto covers = M.covers();
  std::vector<Carrier> path{M.bottom()};
  auto walk = [&](auto&& self) -> void {
    bool extended = false;
    for (auto const& [lo, hi] : covers) {
      if (lo == path.back() && M.is_proper(hi)) {
        extended = true;
        path.push_back(hi);
        self(self);
        path.pop_back();
      }
    }
    if (!extended && path.size() > 2) out.push_back(path);
  };
  if (M.is_proper(M.bottom())) walk(walk);
  return out;
}

}  // namespace detail

class Context {
 public:
  explicit Context(InstanceBundle bundle, ExtraExpansions const& extra = {})
      : bundle_(std::move(bundle)) {
    LatticeModule const& M = bundle_.module;
    MulLattice const& L = M.scalars();

    for (auto N : M.elements()) cls_.push_back(classify(M, N));
    for (auto N : M.elements()) {
      rad_.push_back(M.is_proper(N) ? latmod::rad(M, N) : M.top());
      minimal_primes_.push_back(minimal_primes_over(M, N));
    }
    for (auto p : L.elements()) {
      prime_l_.push_back(is_prime(L, p));
      two_abs_l_.push_back(is_two_absorbing(L, p));
      two_abs_primary_l_.push_back(is_two_absorbing_primary(L, p));
    }

    delta0_ = make_delta0(M).table();
    delta1_ = delta1_table(M);
    delta2_ = delta2_table(M);
    for (auto P : M.elements()) {
      delta1_primary_.push_back(is_delta_primary(M, std::span<Carrier const>(delta1_), P));
    }

    // Module-side pool: base maps, then E_delta of each, then pairwise meets.
    std::vector<ExpansionM> base;
    base.push_back(make_delta0(M));
    if (is_expansion<carrier_tag>(M.carrier(), delta1_)) base.push_back(make_delta1(M));
    base.push_back(make_delta2(M));
    base.push_back(make_top(M.carrier()));
    for (auto const& e : extra.on_module) base.push_back(e);
    pool_m_ = base;
    for (auto const& d : base) pool_m_.push_back(make_e_delta(M, d));
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        pool_m_.push_back(meet_expansions(M.carrier(), base[i], base[j]));
      }
    }
    for (auto const& d : pool_m_) {
      std::vector<char> row;
      for (auto P : M.elements()) row.push_back(is_delta_primary(M, d, P));
      delta_primary_.push_back(std::move(row));
      meet_preserving_m_.push_back(is_meet_preserving(M.carrier(), d));
    }

    // Scalar-side pool: identity, radical, maximal-meet, top, extras, meets.
    std::vector<ExpansionL> lbase{make_delta0_l(L), make_delta1_l(L), make_delta2_l(L),
                                  make_top(L.lattice(), "top_L")};
    for (auto const& e : extra.on_scalars) lbase.push_back(e);
    pool_l_ = lbase;
    for (std::size_t i = 0; i < lbase.size(); ++i) {
      for (std::size_t j = i + 1; j < lbase.size(); ++j) {
        pool_l_.push_back(meet_expansions(L.lattice(), lbase[i], lbase[j]));
      }
    }
    for (auto const& d : pool_l_) {
      std::vector<char> row_m, row_l;
      for (auto P : M.elements()) row_m.push_back(is_delta_l_primary(M, d, P));
      for (auto p : L.elements()) row_l.push_back(is_delta_primary(L, d, p));
      delta_l_primary_.push_back(std::move(row_m));
      delta_primary_in_l_.push_back(std::move(row_l));
      meet_preserving_l_.push_back(is_meet_preserving(L.lattice(), d));
    }

    scalar_families_ = detail::families_of<Scalar>(L.size());
    carrier_families_ = detail::families_of<Carrier>(M.size());
    carrier_chains_ = detail::chains_of(M.carrier());
  }

  [[nodiscard]] InstanceBundle const& bundle() const noexcept { return bundle_; }
  [[nodiscard]] LatticeModule const& M() const noexcept { return bundle_.module; }
  [[nodiscard]] MulLattice const& L() const noexcept { return bundle_.module.scalars(); }
  [[nodiscard]] bool multiplication() const noexcept {
    return bundle_.flags.multiplication_module;
  }
  [[nodiscard]] bool standing() const noexcept { return bundle_.flags.standing(); }

  [[nodiscard]] MClassification const& cls(Carrier N) const { return cls_[N.index()]; }
  [[nodiscard]] Carrier rad(Carrier N) const { return rad_[N.index()]; }
  [[nodiscard]] std::vector<Carrier> const& minimal_primes(Carrier N) const {
    return minimal_primes_[N.index()];
  }
  [[nodiscard]] bool prime_l(Scalar p) const { return prime_l_[p.index()]; }
  [[nodiscard]] bool two_abs_l(Scalar p) const { return two_abs_l_[p.index()]; }
  [[nodiscard]] bool two_abs_primary_l(Scalar p) const { return two_abs_primary_l_[p.index()]; }

  [[nodiscard]] std::span<Carrier const> delta0() const noexcept { return delta0_; }
  /// The raw table A -> sqrt(A:I_M) I_M, whether or not it is an expansion.
  [[nodiscard]] std::span<Carrier const> delta1() const noexcept { return delta1_; }
  [[nodiscard]] Carrier delta1(Carrier A) const { return delta1_[A.index()]; }
  [[nodiscard]] bool delta1_primary(Carrier P) const { return delta1_primary_[P.index()]; }
  [[nodiscard]] std::span<Carrier const> delta2() const noexcept { return delta2_; }

  [[nodiscard]] std::size_t pool_m_size() const noexcept { return pool_m_.size(); }
  [[nodiscard]] ExpansionM const& pool_m(std::size_t k) const { return pool_m_[k]; }
  [[nodiscard]] std::span<Carrier const> delta_m(std::size_t k) const { return pool_m_[k].table(); }
  [[nodiscard]] bool delta_primary(std::size_t k, Carrier P) const {
    return delta_primary_[k][P.index()];
  }
  [[nodiscard]] bool meet_preserving_m(std::size_t k) const { return meet_preserving_m_[k]; }

  [[nodiscard]] std::size_t pool_l_size() const noexcept { return pool_l_.size(); }
  [[nodiscard]] ExpansionL const& pool_l(std::size_t k) const { return pool_l_[k]; }
  [[nodiscard]] std::span<Scalar const> delta_l(std::size_t k) const { return pool_l_[k].table(); }
  /// delta_L-primary element of M.
  [[nodiscard]] bool delta_l_primary(std::size_t k, Carrier P) const {
    return delta_l_primary_[k][P.index()];
  }
  /// delta_L-primary element of L.
  [[nodiscard]] bool delta_primary_in_l(std::size_t k, Scalar p) const {
    return delta_primary_in_l_[k][p.index()];
  }
  [[nodiscard]] bool meet_preserving_l(std::size_t k) const { return meet_preserving_l_[k]; }

  /// Pool positions of the fixed expansions.
  static constexpr std::size_t kDelta0 = 0;
  static constexpr std::size_t kDelta0L = 0;
  static constexpr std::size_t kDelta1L = 1;

  [[nodiscard]] std::vector<std::vector<Scalar>> const& scalar_families() const noexcept {
    return scalar_families_;
  }
  [[nodiscard]] std::vector<std::vector<Carrier>> const& carrier_families() const noexcept {
    return carrier_families_;
  }
  [[nodiscard]] std::vector<std::vector<Carrier>> const& carrier_chains() const noexcept {
    return carrier_chains_;
  }

  [[nodiscard]] std::size_t domain_size(Param const& p) const {
    switch (p.kind) {
      case ParamKind::scalar: return L().size();
      case ParamKind::carrier: return M().size();
      case ParamKind::expansion_m: return pool_m_.size();
      case ParamKind::expansion_l: return pool_l_.size();
      case ParamKind::scalar_family: return scalar_families_.size();
      case ParamKind::carrier_family: return carrier_families_.size();
      case ParamKind::carrier_chain: return carrier_chains_.size();
      case ParamKind::part: return p.parts;
    }
    return 0;
  }

  [[nodiscard]] std::string render(Param const& p, std::size_t v) const {
    auto braces = [](auto const& fam, auto const& namer) {
      std::string s = "{";
      for (std::size_t i = 0; i < fam.size(); ++i) s += (i ? "," : "") + namer(fam[i]);
      return s + "}";
    };
    auto sname = [&](Scalar a) { return L().name(a); };
    auto cname = [&](Carrier A) { return M().name(A); };
    switch (p.kind) {
      case ParamKind::scalar: return L().name(Scalar(v));
      case ParamKind::carrier: return M().name(Carrier(v));
      case ParamKind::expansion_m: return pool_m_[v].label();
      case ParamKind::expansion_l: return pool_l_[v].label();
      case ParamKind::scalar_family: return braces(scalar_families_[v], sname);
      case ParamKind::carrier_family: return braces(carrier_families_[v], cname);
      case ParamKind::carrier_chain: return braces(carrier_chains_[v], cname);
      case ParamKind::part: return std::to_string(v);
    }
    return {};
  }

 private:
  InstanceBundle bundle_;
  std::vector<MClassification> cls_;
  std::vector<Carrier> rad_;
  std::vector<std::vector<Carrier>> minimal_primes_;
  std::vector<char> prime_l_, two_abs_l_, two_abs_primary_l_;
  std::vector<Carrier> delta0_, delta1_, delta2_;
  std::vector<char> delta1_primary_;
  std::vector<ExpansionM> pool_m_;
  std::vector<std::vector<char>> delta_primary_;
  std::vector<char> meet_preserving_m_;
  std::vector<ExpansionL> pool_l_;
  std::vector<std::vector<char>> delta_l_primary_, delta_primary_in_l_;
  std::vector<char> meet_preserving_l_;
  std::vector<std::vector<Scalar>> scalar_families_;
  std::vector<std::vector<Carrier>> carrier_families_;
  std::vector<std::vector<Carrier>> carrier_chains_;
};

}  // namespace latmod::verify
