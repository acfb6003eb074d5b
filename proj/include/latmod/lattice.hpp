#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latmod/element.hpp"
#include "latmod/error.hpp"
#include "latmod/table.hpp"

namespace latmod {

template <class Tag>
class BasicLattice;

template <class Tag>
BasicLattice<Tag> build_lattice(std::vector<std::string> elements,
                                std::vector<std::pair<std::string, std::string>> const& pairs);

/// A finite bounded lattice with precomputed order, meet and join tables.
/// Immutable once built; element handles index the lexicographically sorted
/// name list.
template <class Tag>
class BasicLattice {
 public:
  using element_type = Element<Tag>;

  BasicLattice() = default;

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] std::vector<std::string> const& names() const noexcept { return names_; }
  [[nodiscard]] std::string const& name(element_type e) const { return names_[e.index()]; }

  [[nodiscard]] std::optional<element_type> find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return element_type(static_cast<std::size_t>(it - names_.begin()));
  }

  [[nodiscard]] element_type at(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw UnknownElement(std::string(name));
  }

  [[nodiscard]] auto elements() const {
    return std::views::iota(std::size_t{0}, names_.size()) |
           std::views::transform([](std::size_t i) { return element_type(i); });
  }

  [[nodiscard]] bool leq(element_type a, element_type b) const noexcept { return leq_(a, b) != 0; }
  [[nodiscard]] bool lt(element_type a, element_type b) const noexcept { return a != b && leq(a, b); }
  [[nodiscard]] element_type meet(element_type a, element_type b) const noexcept {
    return meet_(a, b);
  }
  [[nodiscard]] element_type join(element_type a, element_type b) const noexcept {
    return join_(a, b);
  }
  [[nodiscard]] element_type bottom() const noexcept { return bottom_; }
  [[nodiscard]] element_type top() const noexcept { return top_; }
  [[nodiscard]] bool is_proper(element_type a) const noexcept { return a != top_; }

  /// Meet of a family; the empty meet is top.
  template <std::ranges::input_range R>
  [[nodiscard]] element_type meet_of(R&& family) const {
    element_type acc = top_;
    for (element_type e : family) acc = meet(acc, e);
    return acc;
  }

  /// Join of a family; the empty join is bottom.
  template <std::ranges::input_range R>
  [[nodiscard]] element_type join_of(R&& family) const {
    element_type acc = bottom_;
    for (element_type e : family) acc = join(acc, e);
    return acc;
  }

  /// Hasse diagram edges (lower, upper), sorted.
  [[nodiscard]] std::vector<std::pair<element_type, element_type>> covers() const {
    std::vector<std::pair<element_type, element_type>> out;
    for (auto a : elements()) {
      for (auto b : elements()) {
        if (!lt(a, b)) continue;
        bool covered = true;
        for (auto c : elements()) {
          if (lt(a, c) && lt(c, b)) {
            covered = false;
            break;
          }
        }
        if (covered) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// Is every pair of the family comparable?
  template <std::ranges::input_range R>
  [[nodiscard]] bool is_chain(R&& family) const {
    std::vector<element_type> v(std::ranges::begin(family), std::ranges::end(family));
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (!leq(v[i], v[j]) && !leq(v[j], v[i])) return false;
      }
    }
    return true;
  }

  /// The same lattice with handles of another tag (used for M := L).
  template <class Other>
  [[nodiscard]] BasicLattice<Other> rebind() const {
    BasicLattice<Other> out;
    std::size_t const n = size();
    out.names_ = names_;
    out.leq_ = Table2D<Element<Other>, Element<Other>, char>(n, n);
    out.meet_ = Table2D<Element<Other>, Element<Other>, Element<Other>>(n, n);
    out.join_ = Table2D<Element<Other>, Element<Other>, Element<Other>>(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        element_type a(i), b(j);
        Element<Other> x(i), y(j);
        out.leq_(x, y) = leq_(a, b);
        out.meet_(x, y) = Element<Other>(meet_(a, b).index());
        out.join_(x, y) = Element<Other>(join_(a, b).index());
      }
    }
    out.bottom_ = Element<Other>(bottom_.index());
    out.top_ = Element<Other>(top_.index());
    return out;
  }

  friend bool operator==(BasicLattice const& x, BasicLattice const& y) {
    return x.names_ == y.names_ && x.leq_ == y.leq_;
  }

 private:
  template <class>
  friend class BasicLattice;
  friend BasicLattice build_lattice<Tag>(std::vector<std::string>,
                                         std::vector<std::pair<std::string, std::string>> const&);

  std::vector<std::string> names_;
  Table2D<element_type, element_type, char> leq_;
  Table2D<element_type, element_type, element_type> meet_;
  Table2D<element_type, element_type, element_type> join_;
  element_type bottom_;
  element_type top_;
};

using Lattice = BasicLattice<scalar_tag>;
using CarrierLattice = BasicLattice<carrier_tag>;

/// Compactness: a <= join(X) forces a below a finite subjoin.  Every family
/// in a finite lattice is finite, so every element qualifies.
template <class Tag>
constexpr bool is_compact(BasicLattice<Tag> const&, Element<Tag>) noexcept {
  return true;
}

namespace detail {

inline bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' || c == '"';
  });
}

}  // namespace detail

/// Builds a lattice from element names and any generating set of the order
/// (pairs (a, b) meaning a <= b); the reflexive-transitive closure is taken.
template <class Tag>
BasicLattice<Tag> build_lattice(std::vector<std::string> elements,
                                std::vector<std::pair<std::string, std::string>> const& pairs) {
  using E = Element<Tag>;
  if (elements.empty()) throw BadParameter("a lattice needs at least one element");
  for (auto const& s : elements) {
    if (!detail::valid_name(s)) throw BadParameter("invalid element name '" + s + "'");
  }
  std::sort(elements.begin(), elements.end());
  if (auto it = std::adjacent_find(elements.begin(), elements.end()); it != elements.end()) {
    throw DuplicateElement(*it);
  }

  BasicLattice<Tag> lat;
  lat.names_ = std::move(elements);
  std::size_t const n = lat.names_.size();
  lat.leq_ = Table2D<E, E, char>(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) lat.leq_(E(i), E(i)) = 1;
  for (auto const& [a, b] : pairs) {
    auto x = lat.find(a);
    if (!x) throw UnknownElement(a);
    auto y = lat.find(b);
    if (!y) throw UnknownElement(b);
    lat.leq_(*x, *y) = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!lat.leq_(E(i), E(k))) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (lat.leq_(E(k), E(j))) lat.leq_(E(i), E(j)) = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lat.leq_(E(i), E(j)) && lat.leq_(E(j), E(i))) {
        throw NotAPartialOrder(lat.names_[i], lat.names_[j]);
      }
    }
  }

  lat.meet_ = Table2D<E, E, E>(n, n);
  lat.join_ = Table2D<E, E, E>(n, n);
  std::vector<std::size_t> bounds;
  auto extremal = [&](bool lower, std::size_t i, std::size_t j) -> std::optional<E> {
    // lower: greatest common lower bound; otherwise least common upper bound
    auto below = [&](std::size_t x, std::size_t y) { return lat.leq_(E(x), E(y)) != 0; };
    bounds.clear();
    for (std::size_t c = 0; c < n; ++c) {
      if (lower ? (below(c, i) && below(c, j)) : (below(i, c) && below(j, c))) bounds.push_back(c);
    }
    for (std::size_t g : bounds) {
      bool all = std::all_of(bounds.begin(), bounds.end(),
                             [&](std::size_t c) { return lower ? below(c, g) : below(g, c); });
      if (all) return E(g);
    }
    return std::nullopt;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto m = extremal(true, i, j);
      if (!m) throw NotALattice(lat.names_[i], lat.names_[j], "meet");
      auto v = extremal(false, i, j);
      if (!v) throw NotALattice(lat.names_[i], lat.names_[j], "join");
      lat.meet_(E(i), E(j)) = lat.meet_(E(j), E(i)) = *m;
      lat.join_(E(i), E(j)) = lat.join_(E(j), E(i)) = *v;
    }
  }
  E bot(0), top(0);
  for (std::size_t i = 1; i < n; ++i) {
    bot = lat.meet_(bot, E(i));
    top = lat.join_(top, E(i));
  }
  lat.bottom_ = bot;
  lat.top_ = top;
  return lat;
}

}  // namespace latmod
