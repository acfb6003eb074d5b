#pragma once

// Witness search over the generated instance families.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "latmod/classify.hpp"
#include "latmod/expansion.hpp"
#include "latmod/generators.hpp"
#include "latmod/verify/engine.hpp"

namespace latmod {

enum class Family { zn, frame_boolean, frame_chain };

struct SearchGoal {
  enum class Kind { delta1_not_delta0, primary_not_prime, two_abs_not_prime, theorem_fail,
                    hypothesis_boundary };
  Kind kind = Kind::delta1_not_delta0;
  std::string theorem;  // theorem kinds only
};

struct SearchHit {
  std::string instance;
  unsigned parameter = 0;  // n or k of the family member
  std::string witness;
  verify::Tuple tuple;     // element index, or the theorem's parameter tuple
};

/// Accepts "delta1-not-delta0", "primary-not-prime", "2abs-not-prime",
/// "theorem-fail(ID)" and "hypothesis-boundary(ID)" (also "NAME:ID").
/// Throws BadParameter or UnknownTheorem.
inline SearchGoal parse_goal(std::string_view s) {
  using K = SearchGoal::Kind;
  if (s == "delta1-not-delta0") return {K::delta1_not_delta0, {}};
  if (s == "primary-not-prime") return {K::primary_not_prime, {}};
  if (s == "2abs-not-prime") return {K::two_abs_not_prime, {}};
  for (auto [prefix, kind] : {std::pair{std::string_view("theorem-fail"), K::theorem_fail},
                              std::pair{std::string_view("hypothesis-boundary"), K::hypothesis_boundary}}) {
    if (!s.starts_with(prefix)) continue;
    std::string_view rest = s.substr(prefix.size());
    std::string_view id;
    if (rest.size() > 2 && rest.front() == '(' && rest.back() == ')') {
      id = rest.substr(1, rest.size() - 2);
    } else if (rest.size() > 1 && rest.front() == ':') {
      id = rest.substr(1);
    } else {
      break;
    }
    return {kind, verify::find_theorem(id).id};
  }
  throw BadParameter("unknown search goal '" + std::string(s) + "'");
}

inline Family parse_family(std::string_view s) {
  if (s == "zn") return Family::zn;
  if (s == "frame-boolean") return Family::frame_boolean;
  if (s == "frame-chain") return Family::frame_chain;
  throw BadParameter("unknown family '" + std::string(s) + "'");
}

/// Size parameters visited for a bound: n = 2..max for zn, k = 1..max for
/// frames (boolean frames stop at 4).
inline std::vector<unsigned> family_parameters(Family f, unsigned max) {
  if (max < 1) throw BadParameter("search bound must be at least 1");
  std::vector<unsigned> out;
  unsigned lo = f == Family::zn ? 2 : 1;
  unsigned hi = f == Family::frame_boolean ? std::min(max, 4u) : max;
  for (unsigned p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

inline InstanceBundle family_member(Family f, unsigned p) {
  switch (f) {
    case Family::zn: return gen_zn(p);
    case Family::frame_boolean: return gen_frame({FrameShape::Kind::boolean, p});
    case Family::frame_chain: return gen_frame({FrameShape::Kind::chain, p});
  }
  throw BadParameter("unknown family");
}

namespace detail {

inline bool element_goal_holds(SearchGoal::Kind k, LatticeModule const& M,
                               std::span<Carrier const> d1, Carrier N) {
  using K = SearchGoal::Kind;
  switch (k) {
    case K::delta1_not_delta0:
      return is_delta_primary(M, d1, N) && !is_delta_primary(M, make_delta0(M), N);
    case K::primary_not_prime: return is_primary(M, N) && !is_prime(M, N);
    case K::two_abs_not_prime: return is_two_absorbing(M, N) && !is_prime(M, N);
    default: return false;
  }
}

inline std::vector<SearchHit> search_instance(SearchGoal const& goal, InstanceBundle const& b,
                                              unsigned parameter) {
  using K = SearchGoal::Kind;
  std::vector<SearchHit> hits;
  LatticeModule const& M = b.module;
  if (goal.kind == K::theorem_fail || goal.kind == K::hypothesis_boundary) {
    verify::Context ctx(b);
    auto const& entry = verify::find_theorem(goal.theorem);
    if (goal.kind == K::theorem_fail) {
      auto rep = verify::verify(ctx, entry);
      if (rep.witness) hits.push_back({b.name, parameter, rep.witness_text, *rep.witness});
    } else if (auto t = verify::hypothesis_boundary(ctx, entry)) {
      hits.push_back({b.name, parameter, verify::render_tuple(ctx, entry, *t), *t});
    }
    return hits;
  }
  auto d1 = delta1_table(M);
  for (auto N : M.elements()) {
    if (element_goal_holds(goal.kind, M, d1, N)) hits.push_back({b.name, parameter, M.name(N), {N.index()}});
  }
  return hits;
}

}  // namespace detail

/// Every witness in the family up to the bound, in family order.  Members
/// are evaluated on worker threads.
inline std::vector<SearchHit> search(SearchGoal const& goal, Family family, unsigned max) {
  auto params = family_parameters(family, max);
  std::vector<std::vector<SearchHit>> per(params.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      per[i] = detail::search_instance(goal, family_member(family, params[i]), params[i]);
    }
  };
  std::size_t const n = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<SearchHit> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

/// Rebuilds the instance of a hit and re-checks its witness from scratch.
inline bool revalidate(SearchGoal const& goal, Family family, SearchHit const& hit) {
  using K = SearchGoal::Kind;
  InstanceBundle b = family_member(family, hit.parameter);
  if (b.name != hit.instance) return false;
  if (goal.kind == K::theorem_fail || goal.kind == K::hypothesis_boundary) {
    verify::Context ctx(b);
    auto [hyp, concl] = verify::replay(ctx, verify::find_theorem(goal.theorem), hit.tuple);
    return goal.kind == K::theorem_fail ? (hyp && !concl) : (!hyp && !concl);
  }
  if (hit.tuple.size() != 1 || hit.tuple[0] >= b.module.size()) return false;
  Carrier N(hit.tuple[0]);
  return b.module.name(N) == hit.witness &&
         detail::element_goal_holds(goal.kind, b.module, delta1_table(b.module), N);
}

}  // namespace latmod
