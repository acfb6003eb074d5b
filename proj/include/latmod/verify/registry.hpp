#pragma once

// The catalogue of checkable statements.  Each entry quantifies over the
// parameters listed in `params`; an instantiation counts when the standing
// assumption and the hypothesis hold, and fails when the conclusion does not.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "latmod/verify/context.hpp"

namespace latmod::verify {

enum class Assumption { none, multiplication, standing };

inline std::string to_string(Assumption a) {
  switch (a) {
    case Assumption::none: return "-";
    case Assumption::multiplication: return "mult";
    case Assumption::standing: return "standing";
  }
  return "-";
}

using Predicate = std::function<bool(Context const&, Tuple const&)>;

struct TheoremEntry {
  std::string id;
  std::vector<std::string> aliases;
  std::string statement;
  Assumption assumption = Assumption::none;
  std::vector<Param> params;
  Predicate hypothesis;
  Predicate conclusion;

  [[nodiscard]] bool assumption_holds(Context const& c) const {
    switch (assumption) {
      case Assumption::none: return true;
      case Assumption::multiplication: return c.multiplication();
      case Assumption::standing: return c.standing();
    }
    return false;
  }
  [[nodiscard]] bool matches(std::string_view name) const {
    return id == name || std::find(aliases.begin(), aliases.end(), name) != aliases.end();
  }
};

namespace detail {

using C = Context const&;
using T = Tuple const&;

inline Param carrier(std::string n) { return {std::move(n), ParamKind::carrier}; }
inline Param scalar(std::string n) { return {std::move(n), ParamKind::scalar}; }
inline Param exp_m(std::string n) { return {std::move(n), ParamKind::expansion_m}; }
inline Param exp_l(std::string n) { return {std::move(n), ParamKind::expansion_l}; }
inline Param scalar_family() { return {"family", ParamKind::scalar_family}; }
inline Param carrier_family() { return {"family", ParamKind::carrier_family}; }
inline Param chain() { return {"chain", ParamKind::carrier_chain}; }
inline Param part(std::size_t k) { return {"part", ParamKind::part, k}; }

inline Carrier car(T t, std::size_t i) { return Carrier(t[i]); }
inline Scalar sca(T t, std::size_t i) { return Scalar(t[i]); }

inline bool always(C, T) { return true; }
inline bool proper_at0(C c, T t) { return c.M().is_proper(car(t, 0)); }
inline bool proper_at1(C c, T t) { return c.M().is_proper(car(t, 1)); }

inline Scalar colon(C c, Carrier N) { return c.cls(N).colon_im; }
inline Scalar sqrt_colon(C c, Carrier N) { return c.cls(N).sqrt_colon_im; }

/// (Q:I_M) and sqrt(Q:I_M) are both 2-absorbing primary in L, and the
/// radical is 2-absorbing.
inline bool l_side_two_absorbing_primary(C c, Carrier Q) {
  return c.two_abs_primary_l(colon(c, Q)) && c.two_abs_l(sqrt_colon(c, Q));
}

inline bool l_side_all(C c, Carrier Q) {
  Scalar q = colon(c, Q), s = sqrt_colon(c, Q);
  return c.two_abs_l(q) && c.two_abs_l(s) && c.two_abs_primary_l(q) && c.two_abs_primary_l(s);
}

inline bool scale_eq_exists(C c, Carrier N, auto&& pred) {
  for (auto q : c.L().elements()) {
    if (c.M().scale_top(q) == N && pred(q)) return true;
  }
  return false;
}

inline std::vector<TheoremEntry> build_registry() {
  std::vector<TheoremEntry> r;
  auto add = [&](std::string id, std::string statement, Assumption a, std::vector<Param> params,
                 Predicate hyp, Predicate concl, std::vector<std::string> aliases = {}) {
    r.push_back(TheoremEntry{std::move(id), std::move(aliases), std::move(statement), a,
                             std::move(params), std::move(hyp), std::move(concl)});
  };
  auto const none = Assumption::none;
  auto const mult = Assumption::multiplication;
  auto const full = Assumption::standing;

  // --- expansions -----------------------------------------------------------

  add("STD-EXP", "delta0, delta1 (on multiplication modules) and delta2 are expansions", none,
      {part(3)},
      [](C c, T t) { return t[0] != 1 || c.multiplication(); },
      [](C c, T t) {
        auto const& M = c.M().carrier();
        switch (t[0]) {
          case 0: return is_expansion<carrier_tag>(M, c.delta0());
          case 1: return is_expansion<carrier_tag>(M, c.delta1());
          default: return is_expansion<carrier_tag>(M, c.delta2());
        }
      });

  add("EXP-MEET", "the pointwise meet of two expansions is an expansion", none,
      {exp_m("delta"), exp_m("gamma")}, always, [](C c, T t) {
        auto m = meet_table<carrier_tag>(c.M().carrier(), c.delta_m(t[0]), c.delta_m(t[1]));
        return is_expansion<carrier_tag>(c.M().carrier(), m);
      });

  add("EQUIV-DEF", "aA <= P => A <= P or aI <= d(P)  iff  aA <= P => A <= d(P) or aI <= P", none,
      {exp_m("delta"), carrier("P")}, proper_at1, [](C c, T t) {
        return is_delta_primary(c.M(), c.delta_m(t[0]), car(t, 1)) ==
               is_delta_primary_alt(c.M(), c.delta_m(t[0]), car(t, 1));
      });

  add("EDELTA-EXP", "E_delta is an expansion", none, {exp_m("delta")}, always, [](C c, T t) {
    auto e = e_delta_table(c.M(), c.delta_m(t[0]));
    return is_expansion<carrier_tag>(c.M().carrier(), e);
  });

  add("CHAR-COLON-R", "N delta-primary iff (N:r) = N for all r not below (d(N):I)", none,
      {exp_m("delta"), carrier("N")}, proper_at1, [](C c, T t) {
        auto d = c.delta_m(t[0]);
        Carrier N = car(t, 1);
        bool a = c.delta_primary(t[0], N);
        return a == delta_primary_by_scalar_residual(c.M(), d, N) &&
               a == delta_primary_on_compacts(c.M(), d, N);
      });

  add("CHAR-COLON-A", "N delta-primary iff (N:A) <= (d(N):I) for all A not below N", none,
      {exp_m("delta"), carrier("N")}, proper_at1, [](C c, T t) {
        auto d = c.delta_m(t[0]);
        Carrier N = car(t, 1);
        bool a = c.delta_primary(t[0], N);
        return a == delta_primary_by_carrier_residual(c.M(), d, N) &&
               a == delta_primary_on_compacts(c.M(), d, N);
      });

  // --- delta0 and delta1 ----------------------------------------------------

  add("T-C41", "delta0-primary iff prime", none, {carrier("P")}, proper_at0, [](C c, T t) {
    return c.delta_primary(Context::kDelta0, car(t, 0)) == c.cls(car(t, 0)).prime;
  });

  add("T-C4", "delta1-primary iff primary", full, {carrier("P")}, proper_at0,
      [](C c, T t) { return c.delta1_primary(car(t, 0)) == c.cls(car(t, 0)).primary; });

  add("C-C01", "primary => delta1-primary", mult, {carrier("P")},
      [](C c, T t) { return c.cls(car(t, 0)).primary; },
      [](C c, T t) { return c.delta1_primary(car(t, 0)); });

  add("D0-IMP-D1", "delta0-primary => delta1-primary", mult, {carrier("P")},
      [](C c, T t) { return c.delta_primary(Context::kDelta0, car(t, 0)); },
      [](C c, T t) { return c.delta1_primary(car(t, 0)); });

  add("RADICAL-D1-D0", "radical and delta1-primary => delta0-primary", mult, {carrier("P")},
      [](C c, T t) { return c.cls(car(t, 0)).radical_element && c.delta1_primary(car(t, 0)); },
      [](C c, T t) { return c.delta_primary(Context::kDelta0, car(t, 0)); });

  add("SEMIPRIME-D0", "semiprime => delta0-primary", mult, {carrier("P")},
      [](C c, T t) { return c.cls(car(t, 0)).semiprime; },
      [](C c, T t) { return c.delta_primary(Context::kDelta0, car(t, 0)); });

  add("SEMIPRIMARY-COR",
      "semiprimary => sqrt(N:I) delta0_L-primary; p-prime => delta0-primary and (N:I) "
      "delta0_L-primary; p-primary (mult) => delta1-primary and sqrt(N:I) delta0_L-primary",
      none, {carrier("N"), part(3)},
      [](C c, T t) {
        auto const& k = c.cls(car(t, 0));
        switch (t[1]) {
          case 0: return k.semiprimary;
          case 1: return k.p_prime;
          default: return c.multiplication() && k.p_primary;
        }
      },
      [](C c, T t) {
        Carrier N = car(t, 0);
        switch (t[1]) {
          case 0: return c.delta_primary_in_l(Context::kDelta0L, sqrt_colon(c, N));
          case 1:
            return c.delta_primary(Context::kDelta0, N) &&
                   c.delta_primary_in_l(Context::kDelta0L, colon(c, N));
          default:
            return c.delta1_primary(N) && c.delta_primary_in_l(Context::kDelta0L, sqrt_colon(c, N));
        }
      });

  // --- general delta --------------------------------------------------------

  add("T-C2", "delta <= gamma and delta-primary => gamma-primary; prime => delta-primary", none,
      {exp_m("delta"), exp_m("gamma"), carrier("P"), part(2)},
      [](C c, T t) {
        Carrier P = car(t, 2);
        if (t[3] == 0) {
          return pointwise_leq<carrier_tag>(c.M().carrier(), c.delta_m(t[0]), c.delta_m(t[1])) &&
                 c.delta_primary(t[0], P);
        }
        return t[1] == 0 && c.cls(P).prime;
      },
      [](C c, T t) { return c.delta_primary(t[t[3] == 0 ? 1 : 0], car(t, 2)); });

  add("DELTA-EQ-DELTA1", "delta <= delta1 and P delta-primary => d(P) = delta1(P)", full,
      {exp_m("delta"), carrier("P")},
      [](C c, T t) {
        return pointwise_leq<carrier_tag>(c.M().carrier(), c.delta_m(t[0]), c.delta1()) &&
               c.delta_primary(t[0], car(t, 1));
      },
      [](C c, T t) { return c.delta_m(t[0])[t[1]] == c.delta1(car(t, 1)); });

  add("T-C90",
      "P delta-primary and aI not below d(P) => (P:a) = P; P delta-primary and (P:a) proper => "
      "(P:a) delta-primary",
      none, {exp_m("delta"), carrier("P"), scalar("a"), part(2)},
      [](C c, T t) {
        Carrier P = car(t, 1);
        Scalar a = sca(t, 2);
        if (!c.delta_primary(t[0], P)) return false;
        if (t[3] == 0) return !c.M().leq(c.M().scale_top(a), c.delta_m(t[0])[P.index()]);
        return c.M().is_proper(c.M().residual(P, a));
      },
      [](C c, T t) {
        Carrier P = car(t, 1);
        Carrier R = c.M().residual(P, sca(t, 2));
        return t[3] == 0 ? R == P : c.delta_primary(t[0], R);
      });

  add("T-C91", "the join of a chain of delta-primary elements is delta-primary", none,
      {exp_m("delta"), chain()},
      [](C c, T t) {
        auto const& ch = c.carrier_chains()[t[1]];
        return std::all_of(ch.begin(), ch.end(), [&](Carrier P) { return c.delta_primary(t[0], P); });
      },
      [](C c, T t) { return c.delta_primary(t[0], c.M().carrier().join_of(c.carrier_chains()[t[1]])); });

  add("T-C92",
      "delta meet-preserving, Q_i delta-primary with a common d(Q_i) => meet Q_i delta-primary",
      none, {exp_m("delta"), carrier_family()},
      [](C c, T t) {
        if (!c.meet_preserving_m(t[0])) return false;
        auto const& fam = c.carrier_families()[t[1]];
        auto d = c.delta_m(t[0]);
        for (Carrier Q : fam) {
          if (!c.delta_primary(t[0], Q) || d[Q.index()] != d[fam.front().index()]) return false;
        }
        return true;
      },
      [](C c, T t) { return c.delta_primary(t[0], c.M().carrier().meet_of(c.carrier_families()[t[1]])); });

  // --- meets ----------------------------------------------------------------

  add("L-C91", "meet(a_i I) = (meet a_i) I", full, {scalar_family()}, always, [](C c, T t) {
    auto const& fam = c.scalar_families()[t[0]];
    return check_meet_distribution(c.M(), std::span<Scalar const>(fam));
  });

  add("D1-MEET", "delta1(A meet B) = delta1(A) meet delta1(B)", full, {carrier("A"), carrier("B")},
      always, [](C c, T t) {
        Carrier A = car(t, 0), B = car(t, 1);
        return c.delta1(c.M().meet(A, B)) == c.M().meet(c.delta1(A), c.delta1(B));
      });

  add("L-C92", "maximal => meet prime", mult, {carrier("H")},
      [](C c, T t) { return c.cls(car(t, 0)).maximal; },
      [](C c, T t) { return c.cls(car(t, 0)).meet_prime; });

  add("D2-MEET", "delta2(A meet B) = delta2(A) meet delta2(B)", mult, {carrier("A"), carrier("B")},
      always, [](C c, T t) {
        auto d = c.delta2();
        Carrier A = car(t, 0), B = car(t, 1);
        return d[c.M().meet(A, B).index()] == c.M().meet(d[A.index()], d[B.index()]);
      });

  // --- 2-absorbing ----------------------------------------------------------

  add("T-C04", "prime => primary and 2-absorbing", none, {carrier("P")},
      [](C c, T t) { return c.cls(car(t, 0)).prime; },
      [](C c, T t) { return c.cls(car(t, 0)).primary && c.cls(car(t, 0)).two_absorbing; });

  add("T-C05", "primary => sqrt(Q:I) prime, 2-absorbing and 2-absorbing primary in L", none,
      {carrier("Q")}, [](C c, T t) { return c.cls(car(t, 0)).primary; },
      [](C c, T t) {
        Scalar s = sqrt_colon(c, car(t, 0));
        return c.prime_l(s) && c.two_abs_l(s) && c.two_abs_primary_l(s);
      });

  add("T-C06", "2-absorbing => (Q:I) and sqrt(Q:I) 2-absorbing and 2-absorbing primary in L",
      none, {carrier("Q")}, [](C c, T t) { return c.cls(car(t, 0)).two_absorbing; },
      [](C c, T t) { return l_side_all(c, car(t, 0)); });

  add("T-C01", "2-absorbing => 2-absorbing primary", mult, {carrier("Q")},
      [](C c, T t) { return c.cls(car(t, 0)).two_absorbing; },
      [](C c, T t) { return c.cls(car(t, 0)).two_absorbing_primary; });

  add("T-C02", "primary => 2-absorbing primary", mult, {carrier("Q")},
      [](C c, T t) { return c.cls(car(t, 0)).primary; },
      [](C c, T t) { return c.cls(car(t, 0)).two_absorbing_primary; });

  add("T-C07", "2-absorbing primary => (Q:I) 2-absorbing primary and sqrt(Q:I) 2-absorbing in L",
      full, {carrier("Q")}, [](C c, T t) { return c.cls(car(t, 0)).two_absorbing_primary; },
      [](C c, T t) { return l_side_two_absorbing_primary(c, car(t, 0)); });

  add("T-C08", "delta0-primary => primary, 2-absorbing, and both colons 2-absorbing (primary) in L",
      none, {carrier("Q")},
      [](C c, T t) { return c.delta_primary(Context::kDelta0, car(t, 0)); },
      [](C c, T t) {
        auto const& k = c.cls(car(t, 0));
        return k.primary && k.two_absorbing && l_side_all(c, car(t, 0));
      });

  add("T-C09",
      "delta0-primary => 2-absorbing primary (mult); (Q:I) 2-absorbing primary and sqrt(Q:I) "
      "2-absorbing in L (standing)",
      none, {carrier("Q"), part(3)},
      [](C c, T t) {
        bool ctx = t[1] == 0 ? c.multiplication() : c.standing();
        return ctx && c.delta_primary(Context::kDelta0, car(t, 0));
      },
      [](C c, T t) {
        Carrier Q = car(t, 0);
        switch (t[1]) {
          case 0: return c.cls(Q).two_absorbing_primary;
          case 1: return c.two_abs_primary_l(colon(c, Q));
          default: return c.two_abs_l(sqrt_colon(c, Q));
        }
      });

  add("T-C03", "delta1-primary => 2-absorbing primary", mult, {carrier("Q")},
      [](C c, T t) { return c.delta1_primary(car(t, 0)); },
      [](C c, T t) { return c.cls(car(t, 0)).two_absorbing_primary; });

  add("T-C10", "delta1-primary => (Q:I) 2-absorbing primary and sqrt(Q:I) 2-absorbing in L", full,
      {carrier("Q")}, [](C c, T t) { return c.delta1_primary(car(t, 0)); },
      [](C c, T t) { return l_side_two_absorbing_primary(c, car(t, 0)); });

  // --- delta1(N) ------------------------------------------------------------

  add("T-C14", "N prime => sqrt(N:I) delta1(N) <= N <= delta1(N)", mult, {carrier("N")},
      [](C c, T t) { return c.cls(car(t, 0)).prime; },
      [](C c, T t) {
        Carrier N = car(t, 0);
        return c.M().leq(c.M().act(sqrt_colon(c, N), c.delta1(N)), N) && c.M().leq(N, c.delta1(N));
      });

  add("PD1N", "N p-primary and 2-absorbing => p delta1(N) <= N <= delta1(N)", mult, {carrier("N")},
      [](C c, T t) { return c.cls(car(t, 0)).p_primary && c.cls(car(t, 0)).two_absorbing; },
      [](C c, T t) {
        Carrier N = car(t, 0);
        Scalar p = *c.cls(N).p_primary_witness;
        return c.M().leq(c.M().act(p, c.delta1(N)), N) && c.M().leq(N, c.delta1(N));
      });

  add("N-LE-D1NN", "N proper => N <= delta1((N:I)N); N prime => equality", mult,
      {carrier("N"), part(2)},
      [](C c, T t) { return t[1] == 0 ? c.M().is_proper(car(t, 0)) : c.cls(car(t, 0)).prime; },
      [](C c, T t) {
        Carrier N = car(t, 0);
        Carrier D = c.delta1(c.M().act(colon(c, N), N));
        return t[1] == 0 ? c.M().leq(N, D) : N == D;
      });

  add("T-C13", "(delta1(N):I) = sqrt(N:I)", full, {carrier("N")}, proper_at0,
      [](C c, T t) {
        Carrier N = car(t, 0);
        return c.M().colon_top(c.delta1(N)) == sqrt_colon(c, N);
      },
      {"D1-COLON"});

  add("L-C93", "sqrt(meet q_i) = meet sqrt(q_i)", none, {scalar_family()}, always, [](C c, T t) {
    auto const& fam = c.scalar_families()[t[0]];
    auto const& L = c.L();
    Scalar acc = L.top();
    for (Scalar q : fam) acc = L.meet(acc, L.radical(q));
    return L.radical(L.lattice().meet_of(fam)) == acc;
  });

  add("D1-BIGMEET", "meet delta1(N_i) = delta1(meet N_i)", full, {carrier_family()}, always,
      [](C c, T t) {
        auto const& fam = c.carrier_families()[t[0]];
        Carrier acc = c.M().top();
        for (Carrier N : fam) acc = c.M().meet(acc, c.delta1(N));
        return acc == c.delta1(c.M().carrier().meet_of(fam));
      });

  add("D1-LE-RAD", "delta1(N) <= rad(N)", mult, {carrier("N")}, proper_at0,
      [](C c, T t) { return c.M().leq(c.delta1(car(t, 0)), c.rad(car(t, 0))); });

  add("T-C11", "delta1(N) = rad(N)", full, {carrier("N")}, proper_at0,
      [](C c, T t) { return c.delta1(car(t, 0)) == c.rad(car(t, 0)); }, {"D1-EQ-RAD"});

  add("T-C12", "N 2-absorbing => delta1(N) 2-absorbing and 2-absorbing primary", full,
      {carrier("N")}, [](C c, T t) { return c.cls(car(t, 0)).two_absorbing; },
      [](C c, T t) {
        auto const& k = c.cls(c.delta1(car(t, 0)));
        return k.two_absorbing && k.two_absorbing_primary;
      },
      {"D1-2ABS"});

  add("MINPRIME-DECOMP",
      "N 2-absorbing => delta1(N) = pI prime with p^2 I <= N, or N has exactly two minimal primes "
      "p1 I != p2 I with delta1(N) = p1 I meet p2 I and p1 p2 I <= N",
      full, {carrier("N")}, [](C c, T t) { return c.cls(car(t, 0)).two_absorbing; },
      [](C c, T t) {
        Carrier N = car(t, 0);
        Carrier D = c.delta1(N);
        auto const& M = c.M();
        auto const& L = c.L();
        if (c.cls(D).prime && scale_eq_exists(c, D, [&](Scalar p) {
              return M.leq(M.scale_top(L.mul(p, p)), N);
            })) {
          return true;
        }
        auto const& mins = c.minimal_primes(N);
        if (mins.size() != 2 || D != M.meet(mins[0], mins[1])) return false;
        return scale_eq_exists(c, mins[0], [&](Scalar p1) {
          return scale_eq_exists(c, mins[1], [&](Scalar p2) {
            return M.leq(M.scale_top(L.mul(p1, p2)), N);
          });
        });
      });

  add("CHAIN-2ABS",
      "N_i 2-absorbing with delta1(N_i) a chain => meet and join of the delta1(N_i) are "
      "2-absorbing and 2-absorbing primary",
      full, {carrier_family()},
      [](C c, T t) {
        auto const& fam = c.carrier_families()[t[0]];
        std::vector<Carrier> img;
        for (Carrier N : fam) {
          if (!c.cls(N).two_absorbing) return false;
          img.push_back(c.delta1(N));
        }
        return c.M().carrier().is_chain(img);
      },
      [](C c, T t) {
        std::vector<Carrier> img;
        for (Carrier N : c.carrier_families()[t[0]]) img.push_back(c.delta1(N));
        auto const& lo = c.cls(c.M().carrier().meet_of(img));
        auto const& hi = c.cls(c.M().carrier().join_of(img));
        return lo.two_absorbing && lo.two_absorbing_primary && hi.two_absorbing &&
               hi.two_absorbing_primary;
      });

  add("SQRT-NK", "N, K proper, K not below N => sqrt(N:K) K <= delta1(N)", full,
      {carrier("N"), carrier("K")},
      [](C c, T t) {
        Carrier N = car(t, 0), K = car(t, 1);
        return c.M().is_proper(N) && c.M().is_proper(K) && !c.M().leq(K, N);
      },
      [](C c, T t) {
        Carrier N = car(t, 0), K = car(t, 1);
        Scalar s = c.L().radical(c.M().residual(N, K));
        return c.M().leq(c.M().act(s, K), c.delta1(N));
      });

  // --- expansions on L acting on M -----------------------------------------

  add("DL-CHAR-R", "N delta_L-primary iff (N:r) = N for all r not below d_L(N:I)", none,
      {exp_l("deltaL"), carrier("N")}, proper_at1, [](C c, T t) {
        auto d = c.delta_l(t[0]);
        Carrier N = car(t, 1);
        bool a = c.delta_l_primary(t[0], N);
        return a == delta_l_primary_by_scalar_residual(c.M(), d, N) &&
               a == delta_l_primary_on_compacts(c.M(), d, N);
      });

  add("DL-CHAR-A", "N delta_L-primary iff (N:A) <= d_L(N:I) for all A not below N", none,
      {exp_l("deltaL"), carrier("N")}, proper_at1, [](C c, T t) {
        auto d = c.delta_l(t[0]);
        Carrier N = car(t, 1);
        bool a = c.delta_l_primary(t[0], N);
        return a == delta_l_primary_by_carrier_residual(c.M(), d, N) &&
               a == delta_l_primary_on_compacts(c.M(), d, N);
      });

  add("DL-0", "(delta0)_L-primary iff prime", none, {carrier("P")}, proper_at0, [](C c, T t) {
    return c.delta_l_primary(Context::kDelta0L, car(t, 0)) == c.cls(car(t, 0)).prime;
  });

  add("DL-1", "(delta1)_L-primary iff primary", none, {carrier("P")}, proper_at0, [](C c, T t) {
    return c.delta_l_primary(Context::kDelta1L, car(t, 0)) == c.cls(car(t, 0)).primary;
  });

  add("DL-0-IMP-1", "(delta0)_L-primary => (delta1)_L-primary", mult, {carrier("P")},
      [](C c, T t) { return c.delta_l_primary(Context::kDelta0L, car(t, 0)); },
      [](C c, T t) { return c.delta_l_primary(Context::kDelta1L, car(t, 0)); });

  add("DL-2ABS-0",
      "(delta0)_L-primary => primary, 2-absorbing, and both colons 2-absorbing (primary) in L",
      none, {carrier("Q")},
      [](C c, T t) { return c.delta_l_primary(Context::kDelta0L, car(t, 0)); },
      [](C c, T t) {
        auto const& k = c.cls(car(t, 0));
        return k.primary && k.two_absorbing && l_side_all(c, car(t, 0));
      });

  add("DL-2ABS-0M",
      "(delta0)_L-primary => 2-absorbing primary (mult); (Q:I) 2-absorbing primary and "
      "sqrt(Q:I) 2-absorbing in L (standing)",
      none, {carrier("Q"), part(3)},
      [](C c, T t) {
        bool ctx = t[1] == 0 ? c.multiplication() : c.standing();
        return ctx && c.delta_l_primary(Context::kDelta0L, car(t, 0));
      },
      [](C c, T t) {
        Carrier Q = car(t, 0);
        switch (t[1]) {
          case 0: return c.cls(Q).two_absorbing_primary;
          case 1: return c.two_abs_primary_l(colon(c, Q));
          default: return c.two_abs_l(sqrt_colon(c, Q));
        }
      });

  add("DL-2ABS-1", "(delta1)_L-primary => 2-absorbing primary", mult, {carrier("Q")},
      [](C c, T t) { return c.delta_l_primary(Context::kDelta1L, car(t, 0)); },
      [](C c, T t) { return c.cls(car(t, 0)).two_absorbing_primary; });

  add("DL-2ABS-1F",
      "(delta1)_L-primary => (Q:I) 2-absorbing primary and sqrt(Q:I) 2-absorbing in L", full,
      {carrier("Q")}, [](C c, T t) { return c.delta_l_primary(Context::kDelta1L, car(t, 0)); },
      [](C c, T t) { return l_side_two_absorbing_primary(c, car(t, 0)); });

  add("DL-MONO",
      "d_L <= g_L on colons and N d_L-primary => g_L-primary; N prime => (N:I) d_L-primary in L",
      none, {exp_l("deltaL"), exp_l("gammaL"), carrier("N"), part(2)},
      [](C c, T t) {
        Carrier N = car(t, 2);
        if (t[3] == 1) return t[1] == 0 && c.cls(N).prime;
        auto d = c.delta_l(t[0]), g = c.delta_l(t[1]);
        for (auto P : c.M().elements()) {
          if (!c.M().is_proper(P)) continue;
          std::size_t q = colon(c, P).index();
          if (!c.L().leq(d[q], g[q])) return false;
        }
        return c.delta_l_primary(t[0], N);
      },
      [](C c, T t) {
        Carrier N = car(t, 2);
        return t[3] == 0 ? c.delta_l_primary(t[1], N) : c.delta_primary_in_l(t[0], colon(c, N));
      });

  add("DL-COLON",
      "P d_L-primary and a not below d_L(P:I) => (P:a) = P; P d_L-primary and (P:a) proper => "
      "(P:a) d_L-primary",
      none, {exp_l("deltaL"), carrier("P"), scalar("a"), part(2)},
      [](C c, T t) {
        Carrier P = car(t, 1);
        Scalar a = sca(t, 2);
        if (!c.delta_l_primary(t[0], P)) return false;
        if (t[3] == 0) return !c.L().leq(a, c.delta_l(t[0])[colon(c, P).index()]);
        return c.M().is_proper(c.M().residual(P, a));
      },
      [](C c, T t) {
        Carrier P = car(t, 1);
        Carrier R = c.M().residual(P, sca(t, 2));
        return t[3] == 0 ? R == P : c.delta_l_primary(t[0], R);
      });

  add("DL-CHAIN", "the join of a chain of d_L-primary elements is d_L-primary", none,
      {exp_l("deltaL"), chain()},
      [](C c, T t) {
        auto const& ch = c.carrier_chains()[t[1]];
        return std::all_of(ch.begin(), ch.end(),
                           [&](Carrier P) { return c.delta_l_primary(t[0], P); });
      },
      [](C c, T t) {
        return c.delta_l_primary(t[0], c.M().carrier().join_of(c.carrier_chains()[t[1]]));
      });

  add("DL-MEET",
      "d_L meet-preserving, Q_i d_L-primary with a common d_L(Q_i:I) => meet Q_i d_L-primary",
      none, {exp_l("deltaL"), carrier_family()},
      [](C c, T t) {
        if (!c.meet_preserving_l(t[0])) return false;
        auto const& fam = c.carrier_families()[t[1]];
        auto d = c.delta_l(t[0]);
        Scalar common = d[colon(c, fam.front()).index()];
        for (Carrier Q : fam) {
          if (!c.delta_l_primary(t[0], Q) || d[colon(c, Q).index()] != common) return false;
        }
        return true;
      },
      [](C c, T t) {
        return c.delta_l_primary(t[0], c.M().carrier().meet_of(c.carrier_families()[t[1]]));
      });

  add("T-C1",
      "N d_L-primary iff (N:I) d_L-primary in L iff N = qI for some d_L-primary q of L", full,
      {exp_l("deltaL"), carrier("N")}, proper_at1, [](C c, T t) {
        Carrier N = car(t, 1);
        bool a = c.delta_l_primary(t[0], N);
        bool b = c.delta_primary_in_l(t[0], colon(c, N));
        bool q = scale_eq_exists(c, N, [&](Scalar s) { return c.delta_primary_in_l(t[0], s); });
        return a == b && b == q;
      });

  add("T-C1-COR",
      "N d_L-primary => (N:I) d_L-primary in L; conversely on multiplication modules", none,
      {exp_l("deltaL"), carrier("N"), part(2)},
      [](C c, T t) {
        Carrier N = car(t, 1);
        if (t[2] == 0) return c.delta_l_primary(t[0], N);
        return c.multiplication() && c.M().is_proper(N) &&
               c.delta_primary_in_l(t[0], colon(c, N));
      },
      [](C c, T t) {
        Carrier N = car(t, 1);
        return t[2] == 0 ? c.delta_primary_in_l(t[0], colon(c, N)) : c.delta_l_primary(t[0], N);
      });

  return r;
}

}  // namespace detail

/// All registered statements, in a fixed order.
inline std::vector<TheoremEntry> const& registry() {
  static std::vector<TheoremEntry> const r = detail::build_registry();
  return r;
}

/// Looks up an entry by id or alias; throws UnknownTheorem.
inline TheoremEntry const& find_theorem(std::string_view id) {
  for (auto const& e : registry()) {
    if (e.matches(id)) return e;
  }
  throw UnknownTheorem(std::string(id));
}

}  // namespace latmod::verify
