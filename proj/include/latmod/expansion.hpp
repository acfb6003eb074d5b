#pragma once

// Expansion functions (inflationary monotone self-maps) on the carrier M and
// on the scalars L, and the delta-primary predicates built on them.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latmod/classify.hpp"
#include "latmod/lattice.hpp"
#include "latmod/module.hpp"

namespace latmod {

template <class Tag>
class Expansion;

template <class Tag>
Expansion<Tag> from_table(BasicLattice<Tag> const& lat, std::vector<Element<Tag>> table,
                          std::string label);

/// A validated expansion function stored as a table.
template <class Tag>
class Expansion {
 public:
  using element_type = Element<Tag>;

  Expansion() = default;

  [[nodiscard]] std::string const& label() const noexcept { return label_; }
  [[nodiscard]] std::vector<element_type> const& table() const noexcept { return table_; }
  [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }
  [[nodiscard]] element_type operator()(element_type e) const noexcept { return table_[e.index()]; }

  friend bool operator==(Expansion const& x, Expansion const& y) { return x.table_ == y.table_; }

 private:
  friend Expansion from_table<Tag>(BasicLattice<Tag> const&, std::vector<element_type>,
                                   std::string);

  std::string label_;
  std::vector<element_type> table_;
};

using ExpansionM = Expansion<carrier_tag>;
using ExpansionL = Expansion<scalar_tag>;

struct ExpansionViolation {
  std::string axiom;  // "total", "inflationary" or "monotone"
  std::vector<std::string> witness;
};

/// First violated expansion axiom of a raw table, if any.
template <class Tag>
std::optional<ExpansionViolation> expansion_violation(BasicLattice<Tag> const& lat,
                                                      std::span<Element<Tag> const> table) {
  if (table.size() != lat.size()) return ExpansionViolation{"total", {}};
  for (auto A : lat.elements()) {
    if (table[A.index()].index() >= lat.size()) return ExpansionViolation{"total", {lat.name(A)}};
  }
  for (auto A : lat.elements()) {
    if (!lat.leq(A, table[A.index()])) return ExpansionViolation{"inflationary", {lat.name(A)}};
  }
  for (auto A : lat.elements()) {
    for (auto B : lat.elements()) {
      if (lat.leq(A, B) && !lat.leq(table[A.index()], table[B.index()])) {
        return ExpansionViolation{"monotone", {lat.name(A), lat.name(B)}};
      }
    }
  }
  return std::nullopt;
}

template <class Tag>
bool is_expansion(BasicLattice<Tag> const& lat, std::span<Element<Tag> const> table) {
  return !expansion_violation(lat, table);
}

/// Validates a table; throws NotAnExpansion with the witness otherwise.
template <class Tag>
Expansion<Tag> from_table(BasicLattice<Tag> const& lat, std::vector<Element<Tag>> table,
                          std::string label) {
  if (auto v = expansion_violation<Tag>(lat, table)) {
    throw NotAnExpansion(label, v->witness, v->axiom);
  }
  Expansion<Tag> out;
  out.label_ = std::move(label);
  out.table_ = std::move(table);
  return out;
}

/// Table given by element names, as read from a file.
template <class Tag>
Expansion<Tag> from_named_table(BasicLattice<Tag> const& lat,
                                std::map<std::string, std::string> const& entries,
                                std::string label) {
  std::vector<Element<Tag>> table;
  table.reserve(lat.size());
  for (auto A : lat.elements()) {
    auto it = entries.find(lat.name(A));
    if (it == entries.end()) {
      throw IncompleteTable("expansion '" + label + "' has no entry for " + lat.name(A));
    }
    table.push_back(lat.at(it->second));
  }
  for (auto const& [k, v] : entries) (void)lat.at(k);
  return from_table(lat, std::move(table), std::move(label));
}

template <class Tag>
Expansion<Tag> make_identity(BasicLattice<Tag> const& lat, std::string label) {
  std::vector<Element<Tag>> t;
  t.reserve(lat.size());
  for (auto A : lat.elements()) t.push_back(A);
  return from_table(lat, std::move(t), std::move(label));
}

/// The constant-top map, the largest expansion.
template <class Tag>
Expansion<Tag> make_top(BasicLattice<Tag> const& lat, std::string label = "top") {
  return from_table(lat, std::vector<Element<Tag>>(lat.size(), lat.top()), std::move(label));
}

/// Pointwise meet of two expansions.
template <class Tag>
Expansion<Tag> meet_expansions(BasicLattice<Tag> const& lat, Expansion<Tag> const& d1,
                               Expansion<Tag> const& d2) {
  std::vector<Element<Tag>> t;
  t.reserve(lat.size());
  for (auto A : lat.elements()) t.push_back(lat.meet(d1(A), d2(A)));
  return from_table(lat, std::move(t), "meet(" + d1.label() + "," + d2.label() + ")");
}

/// Pointwise meet table without validation.
template <class Tag>
std::vector<Element<Tag>> meet_table(BasicLattice<Tag> const& lat,
                                     std::span<Element<Tag> const> d1,
                                     std::span<Element<Tag> const> d2) {
  std::vector<Element<Tag>> t;
  t.reserve(lat.size());
  for (auto A : lat.elements()) t.push_back(lat.meet(d1[A.index()], d2[A.index()]));
  return t;
}

template <class Tag>
bool is_meet_preserving(BasicLattice<Tag> const& lat, std::span<Element<Tag> const> d) {
  for (auto A : lat.elements()) {
    for (auto B : lat.elements()) {
      if (d[lat.meet(A, B).index()] != lat.meet(d[A.index()], d[B.index()])) return false;
    }
  }
  return true;
}

template <class Tag>
bool is_meet_preserving(BasicLattice<Tag> const& lat, Expansion<Tag> const& d) {
  return is_meet_preserving<Tag>(lat, d.table());
}

/// delta(A) <= gamma(A) everywhere.
template <class Tag>
bool pointwise_leq(BasicLattice<Tag> const& lat, std::span<Element<Tag> const> d,
                   std::span<Element<Tag> const> g) {
  for (auto A : lat.elements()) {
    if (!lat.leq(d[A.index()], g[A.index()])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard expansions on M

inline ExpansionM make_delta0(LatticeModule const& M) { return make_identity(M.carrier(), "delta0"); }

/// A -> sqrt(A:I_M) * I_M, unvalidated.  Inflationary only on multiplication
/// modules in general.
inline std::vector<Carrier> delta1_table(LatticeModule const& M) {
  std::vector<Carrier> t;
  t.reserve(M.size());
  for (auto A : M.elements()) t.push_back(M.scale_top(M.scalars().radical(M.colon_top(A))));
  return t;
}

/// Throws NotAnExpansion when the table is not inflationary or monotone.
inline ExpansionM make_delta1(LatticeModule const& M) {
  return from_table(M.carrier(), delta1_table(M), "delta1");
}

/// A -> meet of the maximal elements above A; I_M -> I_M.
inline std::vector<Carrier> delta2_table(LatticeModule const& M) {
  std::vector<Carrier> maximal;
  for (auto H : M.elements()) {
    if (is_maximal(M, H)) maximal.push_back(H);
  }
  std::vector<Carrier> t;
  t.reserve(M.size());
  for (auto A : M.elements()) {
    Carrier acc = M.top();
    if (M.is_proper(A)) {
      for (auto H : maximal) {
        if (M.leq(A, H)) acc = M.meet(acc, H);
      }
    }
    t.push_back(acc);
  }
  return t;
}

inline ExpansionM make_delta2(LatticeModule const& M) {
  return from_table(M.carrier(), delta2_table(M), "delta2");
}

// ---------------------------------------------------------------------------
// delta-primary elements of M (expansion on M)

/// (a, A) with aA <= P, A not below P and aI_M not below delta(P).
inline std::optional<std::pair<Scalar, Carrier>> delta_primary_violation(
    LatticeModule const& M, std::span<Carrier const> delta, Carrier P) {
  Carrier const dP = delta[P.index()];
  for (auto a : M.scalars().elements()) {
    if (M.leq(M.scale_top(a), dP)) continue;
    for (auto A : M.elements()) {
      if (M.leq(M.act(a, A), P) && !M.leq(A, P)) return std::pair{a, A};
    }
  }
  return std::nullopt;
}

inline bool is_delta_primary(LatticeModule const& M, std::span<Carrier const> delta, Carrier P) {
  return M.is_proper(P) && !delta_primary_violation(M, delta, P);
}

inline bool is_delta_primary(LatticeModule const& M, ExpansionM const& d, Carrier P) {
  return is_delta_primary(M, std::span<Carrier const>(d.table()), P);
}

/// The swapped form: aA <= P implies A <= delta(P) or aI_M <= P.
inline bool is_delta_primary_alt(LatticeModule const& M, std::span<Carrier const> delta,
                                 Carrier P) {
  if (!M.is_proper(P)) return false;
  Carrier const dP = delta[P.index()];
  for (auto a : M.scalars().elements()) {
    if (M.leq(M.scale_top(a), P)) continue;
    for (auto A : M.elements()) {
      if (M.leq(M.act(a, A), P) && !M.leq(A, dP)) return false;
    }
  }
  return true;
}

inline bool is_delta_primary_alt(LatticeModule const& M, ExpansionM const& d, Carrier P) {
  return is_delta_primary_alt(M, std::span<Carrier const>(d.table()), P);
}

/// (N:r) = N for every r not below (delta(N):I_M).
inline bool delta_primary_by_scalar_residual(LatticeModule const& M,
                                             std::span<Carrier const> delta, Carrier N) {
  if (!M.is_proper(N)) return false;
  Scalar const bound = M.colon_top(delta[N.index()]);
  for (auto r : M.scalars().elements()) {
    if (!M.scalars().leq(r, bound) && M.residual(N, r) != N) return false;
  }
  return true;
}

/// (N:A) <= (delta(N):I_M) for every A not below N.
inline bool delta_primary_by_carrier_residual(LatticeModule const& M,
                                              std::span<Carrier const> delta, Carrier N) {
  if (!M.is_proper(N)) return false;
  Scalar const bound = M.colon_top(delta[N.index()]);
  for (auto A : M.elements()) {
    if (!M.leq(A, N) && !M.scalars().leq(M.residual(N, A), bound)) return false;
  }
  return true;
}

/// The defining implication restricted to compact r and compact A.
inline bool delta_primary_on_compacts(LatticeModule const& M, std::span<Carrier const> delta,
                                      Carrier N) {
  if (!M.is_proper(N)) return false;
  Carrier const dN = delta[N.index()];
  for (auto r : M.scalars().elements()) {
    if (!is_compact(M.scalars().lattice(), r)) continue;
    for (auto A : M.elements()) {
      if (!is_compact(M.carrier(), A)) continue;
      if (M.leq(M.act(r, A), N) && !M.leq(A, N) && !M.leq(M.scale_top(r), dN)) return false;
    }
  }
  return true;
}

/// A -> meet of the delta-primary J above A; I_M -> I_M.  Unvalidated.
inline std::vector<Carrier> e_delta_table(LatticeModule const& M, std::span<Carrier const> delta) {
  std::vector<char> primary(M.size(), 0);
  for (auto J : M.elements()) primary[J.index()] = is_delta_primary(M, delta, J);
  std::vector<Carrier> t;
  t.reserve(M.size());
  for (auto A : M.elements()) {
    Carrier acc = M.top();
    if (M.is_proper(A)) {
      for (auto J : M.elements()) {
        if (primary[J.index()] && M.leq(A, J)) acc = M.meet(acc, J);
      }
    }
    t.push_back(acc);
  }
  return t;
}

inline ExpansionM make_e_delta(LatticeModule const& M, ExpansionM const& d) {
  return from_table(M.carrier(), e_delta_table(M, d.table()), "E(" + d.label() + ")");
}

// ---------------------------------------------------------------------------
// Expansions on L

inline ExpansionL make_delta0_l(MulLattice const& L) { return make_identity(L.lattice(), "delta0_L"); }

/// a -> sqrt(a)
inline ExpansionL make_delta1_l(MulLattice const& L) {
  std::vector<Scalar> t;
  for (auto a : L.elements()) t.push_back(L.radical(a));
  return from_table(L.lattice(), std::move(t), "delta1_L");
}

/// a -> meet of the maximal elements of L above a; 1 -> 1.
inline ExpansionL make_delta2_l(MulLattice const& L) {
  std::vector<Scalar> t;
  for (auto a : L.elements()) {
    Scalar acc = L.top();
    if (L.is_proper(a)) {
      for (auto h : L.elements()) {
        if (is_maximal(L, h) && L.leq(a, h)) acc = L.meet(acc, h);
      }
    }
    t.push_back(acc);
  }
  return from_table(L.lattice(), std::move(t), "delta2_L");
}

/// delta_L-primary element p of L: ab <= p implies a <= p or b <= delta_L(p).
inline bool is_delta_primary(MulLattice const& L, std::span<Scalar const> delta, Scalar p) {
  if (!L.is_proper(p)) return false;
  Scalar const dp = delta[p.index()];
  for (auto a : L.elements()) {
    if (L.leq(a, p)) continue;
    for (auto b : L.elements()) {
      if (L.leq(L.mul(a, b), p) && !L.leq(b, dp)) return false;
    }
  }
  return true;
}

inline bool is_delta_primary(MulLattice const& L, ExpansionL const& d, Scalar p) {
  return is_delta_primary(L, std::span<Scalar const>(d.table()), p);
}

// ---------------------------------------------------------------------------
// delta_L-primary elements of M (expansion on L)

/// aA <= P implies A <= P or a <= delta_L(P:I_M).
inline std::optional<std::pair<Scalar, Carrier>> delta_l_primary_violation(
    LatticeModule const& M, std::span<Scalar const> delta_l, Carrier P) {
  Scalar const bound = delta_l[M.colon_top(P).index()];
  for (auto a : M.scalars().elements()) {
    if (M.scalars().leq(a, bound)) continue;
    for (auto A : M.elements()) {
      if (M.leq(M.act(a, A), P) && !M.leq(A, P)) return std::pair{a, A};
    }
  }
  return std::nullopt;
}

inline bool is_delta_l_primary(LatticeModule const& M, std::span<Scalar const> delta_l, Carrier P) {
  return M.is_proper(P) && !delta_l_primary_violation(M, delta_l, P);
}

inline bool is_delta_l_primary(LatticeModule const& M, ExpansionL const& d, Carrier P) {
  return is_delta_l_primary(M, std::span<Scalar const>(d.table()), P);
}

/// (N:r) = N for every r not below delta_L(N:I_M).
inline bool delta_l_primary_by_scalar_residual(LatticeModule const& M,
                                               std::span<Scalar const> delta_l, Carrier N) {
  if (!M.is_proper(N)) return false;
  Scalar const bound = delta_l[M.colon_top(N).index()];
  for (auto r : M.scalars().elements()) {
    if (!M.scalars().leq(r, bound) && M.residual(N, r) != N) return false;
  }
  return true;
}

/// (N:A) <= delta_L(N:I_M) for every A not below N.
inline bool delta_l_primary_by_carrier_residual(LatticeModule const& M,
                                                std::span<Scalar const> delta_l, Carrier N) {
  if (!M.is_proper(N)) return false;
  Scalar const bound = delta_l[M.colon_top(N).index()];
  for (auto A : M.elements()) {
    if (!M.leq(A, N) && !M.scalars().leq(M.residual(N, A), bound)) return false;
  }
  return true;
}

inline bool delta_l_primary_on_compacts(LatticeModule const& M, std::span<Scalar const> delta_l,
                                        Carrier N) {
  if (!M.is_proper(N)) return false;
  Scalar const bound = delta_l[M.colon_top(N).index()];
  for (auto r : M.scalars().elements()) {
    if (!is_compact(M.scalars().lattice(), r)) continue;
    for (auto A : M.elements()) {
      if (!is_compact(M.carrier(), A)) continue;
      if (M.leq(M.act(r, A), N) && !M.leq(A, N) && !M.scalars().leq(r, bound)) return false;
    }
  }
  return true;
}

}  // namespace latmod
