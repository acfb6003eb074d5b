#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "latmod/element.hpp"
#include "latmod/lattice.hpp"
#include "latmod/table.hpp"
#include "latmod/validation.hpp"

namespace latmod {

using MulTable = Table2D<Scalar, Scalar, Scalar>;

struct PrincipalFlags {
  bool meet_principal = false;
  bool join_principal = false;

  [[nodiscard]] bool principal() const noexcept { return meet_principal && join_principal; }
  friend bool operator==(PrincipalFlags, PrincipalFlags) = default;
};

/// Checks every multiplicative-lattice axiom on a candidate table and reports
/// each violated axiom once with its first witness (lexicographic order).
inline ValidationReport validate_mul(Lattice const& lat, MulTable const& mul) {
  ValidationReport report;
  auto nm = [&](Scalar x) { return lat.name(x); };
  for (auto a : lat.elements()) {
    if (mul(lat.top(), a) != a || mul(a, lat.top()) != a) report.add("identity", {nm(a)});
    if (mul(lat.bottom(), a) != lat.bottom()) report.add("annihilator", {nm(a)});
    for (auto b : lat.elements()) {
      if (mul(a, b) != mul(b, a)) report.add("commutativity", {nm(a), nm(b)});
      if (!lat.leq(mul(a, b), lat.meet(a, b))) report.add("product-below-meet", {nm(a), nm(b)});
      for (auto c : lat.elements()) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          report.add("associativity", {nm(a), nm(b), nm(c)});
        }
        if (mul(a, lat.join(b, c)) != lat.join(mul(a, b), mul(a, c))) {
          report.add("join-distributivity", {nm(a), nm(b), nm(c)});
        }
      }
    }
  }
  return report;
}

/// A finite multiplicative lattice: commutative, associative, join-distributive
/// multiplication with top as identity.  Residuals, radicals and principal
/// flags are tabulated at construction.
class MulLattice {
 public:
  MulLattice() = default;

  /// Throws InvalidStructure when the table violates an axiom.
  static MulLattice make(Lattice lat, MulTable mul) {
    if (mul.rows() != lat.size() || mul.cols() != lat.size()) {
      throw IncompleteTable("multiplication table has the wrong shape");
    }
    auto report = validate_mul(lat, mul);
    if (!report.ok()) throw InvalidStructure("multiplication table is invalid", std::move(report));
    MulLattice out;
    out.lat_ = std::move(lat);
    out.mul_ = std::move(mul);
    out.tabulate();
    return out;
  }

  /// Multiplication := meet; valid exactly when the lattice is distributive.
  static MulLattice with_meet(Lattice lat) {
    MulTable mul(lat.size(), lat.size());
    for (auto a : lat.elements()) {
      for (auto b : lat.elements()) mul(a, b) = lat.meet(a, b);
    }
    return make(std::move(lat), std::move(mul));
  }

  [[nodiscard]] Lattice const& lattice() const noexcept { return lat_; }
  [[nodiscard]] MulTable const& mul_table() const noexcept { return mul_; }
  [[nodiscard]] std::size_t size() const noexcept { return lat_.size(); }
  [[nodiscard]] auto elements() const { return lat_.elements(); }
  [[nodiscard]] std::string const& name(Scalar a) const { return lat_.name(a); }
  [[nodiscard]] Scalar at(std::string_view n) const { return lat_.at(n); }
  [[nodiscard]] bool leq(Scalar a, Scalar b) const noexcept { return lat_.leq(a, b); }
  [[nodiscard]] Scalar meet(Scalar a, Scalar b) const noexcept { return lat_.meet(a, b); }
  [[nodiscard]] Scalar join(Scalar a, Scalar b) const noexcept { return lat_.join(a, b); }
  [[nodiscard]] Scalar top() const noexcept { return lat_.top(); }
  [[nodiscard]] Scalar bottom() const noexcept { return lat_.bottom(); }
  [[nodiscard]] bool is_proper(Scalar a) const noexcept { return lat_.is_proper(a); }

  [[nodiscard]] Scalar mul(Scalar a, Scalar b) const noexcept { return mul_(a, b); }

  /// a^n for n >= 1.
  [[nodiscard]] Scalar power(Scalar a, std::size_t n) const noexcept {
    Scalar acc = a;
    for (std::size_t i = 1; i < n; ++i) acc = mul_(acc, a);
    return acc;
  }

  /// Is x^n <= a for some n >= 1?  Powers descend (x^(k+1) <= x^k), so the
  /// sequence settles within |L| steps.
  [[nodiscard]] bool has_power_below(Scalar x, Scalar a) const noexcept {
    Scalar p = x;
    for (std::size_t n = 1; n <= size(); ++n) {
      if (leq(p, a)) return true;
      Scalar next = mul_(p, x);
      if (next == p) return false;
      p = next;
    }
    return leq(p, a);
  }

  /// (a:b), the largest x with x*b <= a.
  [[nodiscard]] Scalar residual(Scalar a, Scalar b) const noexcept { return residual_(a, b); }

  /// sqrt(a), the join of all x having a power below a.
  [[nodiscard]] Scalar radical(Scalar a) const noexcept { return radical_[a.index()]; }

  [[nodiscard]] PrincipalFlags principal_flags(Scalar e) const noexcept {
    return principal_[e.index()];
  }

  friend bool operator==(MulLattice const& x, MulLattice const& y) {
    return x.lat_ == y.lat_ && x.mul_ == y.mul_;
  }

 private:
  void tabulate() {
    std::size_t const n = lat_.size();
    residual_ = MulTable(n, n);
    for (auto a : lat_.elements()) {
      for (auto b : lat_.elements()) {
        Scalar acc = lat_.bottom();
        for (auto x : lat_.elements()) {
          if (leq(mul_(x, b), a)) acc = join(acc, x);
        }
        residual_(a, b) = acc;
      }
    }
    radical_.assign(n, lat_.bottom());
    for (auto a : lat_.elements()) {
      Scalar acc = lat_.bottom();
      for (auto x : lat_.elements()) {
        if (has_power_below(x, a)) acc = join(acc, x);
      }
      radical_[a.index()] = acc;
    }
    principal_.assign(n, PrincipalFlags{});
    for (auto e : lat_.elements()) {
      PrincipalFlags f{true, true};
      for (auto a : lat_.elements()) {
        for (auto b : lat_.elements()) {
          if (f.meet_principal &&
              meet(a, mul_(b, e)) != mul_(meet(residual_(a, e), b), e)) {
            f.meet_principal = false;
          }
          if (f.join_principal &&
              residual_(join(mul_(a, e), b), e) != join(residual_(b, e), a)) {
            f.join_principal = false;
          }
        }
      }
      principal_[e.index()] = f;
    }
  }

  Lattice lat_;
  MulTable mul_;
  MulTable residual_;
  std::vector<Scalar> radical_;
  std::vector<PrincipalFlags> principal_;
};

// ---------------------------------------------------------------------------
// Element predicates on L.  All of them return false on the top element.

/// A pair (a, b) with ab <= p but a, b not below p.
inline std::optional<std::pair<Scalar, Scalar>> prime_violation(MulLattice const& L, Scalar p) {
  for (auto a : L.elements()) {
    if (L.leq(a, p)) continue;
    for (auto b : L.elements()) {
      if (L.leq(L.mul(a, b), p) && !L.leq(b, p)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

inline bool is_prime(MulLattice const& L, Scalar p) {
  return L.is_proper(p) && !prime_violation(L, p);
}

/// A pair (a, b) with ab <= p, a not below p and no power of b below p.
inline std::optional<std::pair<Scalar, Scalar>> primary_violation(MulLattice const& L, Scalar p) {
  for (auto a : L.elements()) {
    if (L.leq(a, p)) continue;
    for (auto b : L.elements()) {
      if (L.leq(L.mul(a, b), p) && !L.has_power_below(b, p)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

inline bool is_primary(MulLattice const& L, Scalar p) {
  return L.is_proper(p) && !primary_violation(L, p);
}

inline std::optional<std::tuple<Scalar, Scalar, Scalar>> two_absorbing_violation(MulLattice const& L,
                                                                                Scalar q) {
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      Scalar ab = L.mul(a, b);
      if (L.leq(ab, q)) continue;
      for (auto c : L.elements()) {
        if (L.leq(L.mul(ab, c), q) && !L.leq(L.mul(b, c), q) && !L.leq(L.mul(c, a), q)) {
          return std::tuple{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_two_absorbing(MulLattice const& L, Scalar q) {
  return L.is_proper(q) && !two_absorbing_violation(L, q);
}

inline std::optional<std::tuple<Scalar, Scalar, Scalar>> two_absorbing_primary_violation(
    MulLattice const& L, Scalar q) {
  Scalar const rq = L.radical(q);
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      Scalar ab = L.mul(a, b);
      if (L.leq(ab, q)) continue;
      for (auto c : L.elements()) {
        if (L.leq(L.mul(ab, c), q) && !L.leq(L.mul(b, c), rq) && !L.leq(L.mul(c, a), rq)) {
          return std::tuple{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_two_absorbing_primary(MulLattice const& L, Scalar q) {
  return L.is_proper(q) && !two_absorbing_primary_violation(L, q);
}

/// Proper, and nothing lies strictly between p and top.
inline bool is_maximal(MulLattice const& L, Scalar p) {
  if (!L.is_proper(p)) return false;
  for (auto x : L.elements()) {
    if (L.lattice().lt(p, x) && x != L.top()) return false;
  }
  return true;
}

inline PrincipalFlags is_principal(MulLattice const& L, Scalar e) { return L.principal_flags(e); }

/// Every element is the join of the principal elements below it.
inline bool is_pg_lattice(MulLattice const& L) {
  for (auto a : L.elements()) {
    Scalar acc = L.bottom();
    for (auto e : L.elements()) {
      if (L.leq(e, a) && L.principal_flags(e).principal()) acc = L.join(acc, e);
    }
    if (acc != a) return false;
  }
  return true;
}

}  // namespace latmod
