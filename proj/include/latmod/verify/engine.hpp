#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "latmod/verify/context.hpp"
#include "latmod/verify/registry.hpp"

namespace latmod::verify {

enum class Outcome { pass, vacuous, fail };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::vacuous: return "VACUOUS";
    case Outcome::fail: return "FAIL";
  }
  return "?";
}

struct VerificationReport {
  std::string id;
  Outcome outcome = Outcome::vacuous;
  /// Instantiations that satisfied the assumption and hypothesis.
  std::size_t instantiations = 0;
  /// First failing tuple (FAIL only) and its rendering.
  std::optional<Tuple> witness;
  std::string witness_text;
};

/// Calls f(tuple) for every tuple of the parameter space, first parameter
/// most significant.  Stops early if f returns false.
template <class F>
void for_each_tuple(Context const& c, std::vector<Param> const& params, F&& f) {
  std::vector<std::size_t> sizes;
  for (auto const& p : params) {
    sizes.push_back(c.domain_size(p));
    if (sizes.back() == 0) return;
  }
  Tuple t(params.size(), 0);
  while (true) {
    if (!f(static_cast<Tuple const&>(t))) return;
    std::size_t i = params.size();
    while (i > 0) {
      --i;
      if (++t[i] < sizes[i]) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (params.empty()) return;
  }
}

inline std::string render_tuple(Context const& c, TheoremEntry const& e, Tuple const& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ' ';
    s += e.params[i].name + "=" + c.render(e.params[i], t[i]);
  }
  return s;
}

inline VerificationReport verify(Context const& c, TheoremEntry const& e) {
  VerificationReport rep;
  rep.id = e.id;
  if (e.assumption_holds(c)) {
    for_each_tuple(c, e.params, [&](Tuple const& t) {
      if (!e.hypothesis(c, t)) return true;
      ++rep.instantiations;
      if (!rep.witness && !e.conclusion(c, t)) {
        rep.witness = t;
        rep.witness_text = render_tuple(c, e, t);
      }
      return true;
    });
  }
  rep.outcome = rep.witness ? Outcome::fail
                            : (rep.instantiations == 0 ? Outcome::vacuous : Outcome::pass);
  return rep;
}

/// Throws UnknownTheorem.
inline VerificationReport verify(Context const& c, std::string_view id) {
  return verify(c, find_theorem(id));
}

inline VerificationReport verify(InstanceBundle const& bundle, std::string_view id) {
  return verify(Context(bundle), id);
}

/// Every registry entry, reported in registry order.  Entries are evaluated
/// on worker threads over the shared, read-only context.
inline std::vector<VerificationReport> verify_all(Context const& c) {
  auto const& reg = registry();
  std::vector<VerificationReport> out(reg.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < reg.size(); i = next++) out[i] = verify(c, reg[i]);
  };
  std::size_t const n = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

inline std::vector<VerificationReport> verify_all(InstanceBundle const& bundle) {
  return verify_all(Context(bundle));
}

/// Re-evaluates (assumption and hypothesis, conclusion) on one tuple.
inline std::pair<bool, bool> replay(Context const& c, TheoremEntry const& e, Tuple const& t) {
  return {e.assumption_holds(c) && e.hypothesis(c, t), e.conclusion(c, t)};
}

/// A tuple on which the hypothesis (with its standing assumption) and the
/// conclusion are both false: evidence that the hypothesis is not redundant.
inline std::optional<Tuple> hypothesis_boundary(Context const& c, TheoremEntry const& e) {
  std::optional<Tuple> found;
  bool const assumed = e.assumption_holds(c);
  for_each_tuple(c, e.params, [&](Tuple const& t) {
    if ((assumed && e.hypothesis(c, t)) || e.conclusion(c, t)) return true;
    found = t;
    return false;
  });
  return found;
}

inline std::string render_table(std::vector<VerificationReport> const& reports) {
  std::size_t width = 2;
  for (auto const& r : reports) width = std::max(width, r.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "ID" << "  " << std::setw(7) << "OUTCOME"
     << "  " << std::right << std::setw(8) << "COUNT" << "  WITNESS\n";
  for (auto const& r : reports) {
    os << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(7)
       << to_string(r.outcome) << "  " << std::right << std::setw(8) << r.instantiations << "  "
       << (r.witness ? r.witness_text : "-") << '\n';
  }
  return os.str();
}

inline std::string render_tsv(std::vector<VerificationReport> const& reports) {
  std::string s;
  for (auto const& r : reports) {
    s += r.id + '\t' + to_string(r.outcome) + '\t' + std::to_string(r.instantiations) + '\t' +
         r.witness_text + '\n';
  }
  return s;
}

}  // namespace latmod::verify
