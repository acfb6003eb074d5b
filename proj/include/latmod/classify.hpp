#pragma once

// Element classes of a lattice module.  Every predicate is decided by direct
// quantification over the finite structures; scalar powers are capped at |L|.

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "latmod/module.hpp"

namespace latmod {

/// a^n * I_M <= N for some n >= 1.
inline bool power_scales_below(LatticeModule const& M, Scalar a, Carrier N) {
  MulLattice const& L = M.scalars();
  Scalar p = a;
  for (std::size_t n = 1; n <= L.size(); ++n) {
    if (M.leq(M.scale_top(p), N)) return true;
    p = L.mul(p, a);
  }
  return false;
}

inline bool is_maximal(LatticeModule const& M, Carrier N) {
  if (!M.is_proper(N)) return false;
  for (auto B : M.elements()) {
    if (B != N && B != M.top() && M.leq(N, B)) return false;
  }
  return true;
}

/// (a, X) with aX <= N, X not below N and aI_M not below N.
inline std::optional<std::pair<Scalar, Carrier>> prime_violation(LatticeModule const& M, Carrier N) {
  for (auto a : M.scalars().elements()) {
    if (M.leq(M.scale_top(a), N)) continue;
    for (auto X : M.elements()) {
      if (M.leq(M.act(a, X), N) && !M.leq(X, N)) return std::pair{a, X};
    }
  }
  return std::nullopt;
}

inline bool is_prime(LatticeModule const& M, Carrier N) {
  return M.is_proper(N) && !prime_violation(M, N);
}

inline std::optional<std::pair<Scalar, Carrier>> primary_violation(LatticeModule const& M,
                                                                  Carrier N) {
  for (auto a : M.scalars().elements()) {
    if (power_scales_below(M, a, N)) continue;
    for (auto X : M.elements()) {
      if (M.leq(M.act(a, X), N) && !M.leq(X, N)) return std::pair{a, X};
    }
  }
  return std::nullopt;
}

inline bool is_primary(LatticeModule const& M, Carrier N) {
  return M.is_proper(N) && !primary_violation(M, N);
}

inline bool is_radical_element(LatticeModule const& M, Carrier N) {
  Scalar p = M.colon_top(N);
  return M.is_proper(N) && p == M.scalars().radical(p);
}

inline bool is_semiprime(LatticeModule const& M, Carrier N) {
  if (!M.is_proper(N)) return false;
  MulLattice const& L = M.scalars();
  for (auto a : L.elements()) {
    if (M.leq(M.scale_top(a), N)) continue;
    for (auto b : L.elements()) {
      if (M.leq(M.scale_top(L.mul(a, b)), N) && !M.leq(M.scale_top(b), N)) return false;
    }
  }
  return true;
}

/// sqrt(N:I_M) is prime in L.
inline bool is_semiprimary(LatticeModule const& M, Carrier N) {
  return M.is_proper(N) && is_prime(M.scalars(), M.scalars().radical(M.colon_top(N)));
}

inline bool is_meet_prime(LatticeModule const& M, Carrier N) {
  if (!M.is_proper(N)) return false;
  for (auto A : M.elements()) {
    if (M.leq(A, N)) continue;
    for (auto B : M.elements()) {
      if (M.leq(M.meet(A, B), N) && !M.leq(B, N)) return false;
    }
  }
  return true;
}

/// (a, b, X) with abX <= Q but ab not below (Q:I_M), bX and aX not below Q.
inline std::optional<std::tuple<Scalar, Scalar, Carrier>> two_absorbing_violation(
    LatticeModule const& M, Carrier Q) {
  MulLattice const& L = M.scalars();
  Scalar const q = M.colon_top(Q);
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      Scalar ab = L.mul(a, b);
      if (L.leq(ab, q)) continue;
      for (auto X : M.elements()) {
        if (M.leq(M.act(ab, X), Q) && !M.leq(M.act(b, X), Q) && !M.leq(M.act(a, X), Q)) {
          return std::tuple{a, b, X};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_two_absorbing(LatticeModule const& M, Carrier Q) {
  return M.is_proper(Q) && !two_absorbing_violation(M, Q);
}

inline std::optional<std::tuple<Scalar, Scalar, Carrier>> two_absorbing_primary_violation(
    LatticeModule const& M, Carrier Q) {
  MulLattice const& L = M.scalars();
  Scalar const q = M.colon_top(Q);
  Carrier const bound = M.scale_top(L.radical(q));
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      Scalar ab = L.mul(a, b);
      if (L.leq(ab, q)) continue;
      for (auto X : M.elements()) {
        if (M.leq(M.act(ab, X), Q) && !M.leq(M.act(b, X), bound) &&
            !M.leq(M.act(a, X), bound)) {
          return std::tuple{a, b, X};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_two_absorbing_primary(LatticeModule const& M, Carrier Q) {
  return M.is_proper(Q) && !two_absorbing_primary_violation(M, Q);
}

struct MClassification {
  bool proper = false;
  bool maximal = false;
  bool prime = false;
  bool p_prime = false;
  bool primary = false;
  bool p_primary = false;
  bool semiprime = false;
  bool semiprimary = false;
  bool radical_element = false;
  bool meet_prime = false;
  bool two_absorbing = false;
  bool two_absorbing_primary = false;
  /// (N:I_M)
  Scalar colon_im;
  /// sqrt(N:I_M)
  Scalar sqrt_colon_im;
  /// p = (N:I_M) when p_prime holds.
  std::optional<Scalar> p_prime_witness;
  /// p = sqrt(N:I_M) when p_primary holds.
  std::optional<Scalar> p_primary_witness;

  friend bool operator==(MClassification const&, MClassification const&) = default;
};

inline MClassification classify(LatticeModule const& M, Carrier N) {
  MulLattice const& L = M.scalars();
  MClassification c;
  c.colon_im = M.colon_top(N);
  c.sqrt_colon_im = L.radical(c.colon_im);
  c.proper = M.is_proper(N);
  if (!c.proper) return c;
  c.maximal = is_maximal(M, N);
  c.prime = is_prime(M, N);
  c.primary = is_primary(M, N);
  c.semiprime = is_semiprime(M, N);
  c.semiprimary = is_prime(L, c.sqrt_colon_im);
  c.radical_element = c.colon_im == c.sqrt_colon_im;
  c.meet_prime = is_meet_prime(M, N);
  c.two_absorbing = is_two_absorbing(M, N);
  c.two_absorbing_primary = is_two_absorbing_primary(M, N);
  c.p_prime = c.prime && is_prime(L, c.colon_im);
  if (c.p_prime) c.p_prime_witness = c.colon_im;
  c.p_primary = c.primary && c.semiprimary;
  if (c.p_primary) c.p_primary_witness = c.sqrt_colon_im;
  return c;
}

/// rad(N): meet of the prime elements above N (top when there are none).
inline Carrier rad(LatticeModule const& M, Carrier N) {
  if (!M.is_proper(N)) throw NotProper("rad is only defined on proper elements");
  Carrier acc = M.top();
  for (auto P : M.elements()) {
    if (M.leq(N, P) && is_prime(M, P)) acc = M.meet(acc, P);
  }
  return acc;
}

/// Primes P >= X with no prime strictly between X and P.
inline std::vector<Carrier> minimal_primes_over(LatticeModule const& M, Carrier X) {
  std::vector<Carrier> primes;
  for (auto P : M.elements()) {
    if (M.leq(X, P) && is_prime(M, P)) primes.push_back(P);
  }
  std::vector<Carrier> out;
  for (auto P : primes) {
    bool minimal = true;
    for (auto Q : primes) {
      if (Q != P && M.leq(Q, P)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(P);
  }
  return out;
}

}  // namespace latmod
