#pragma once

// Instance families: ideal lattices of Z_n, and frames (distributive lattices
// with multiplication := meet).  Each acts on itself.

#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latmod/module.hpp"

namespace latmod {

/// Name of the ideal (d) of Z_n; the zero ideal (n) is written (0).
inline std::string zn_ideal_name(unsigned d, unsigned n) {
  return "(" + std::to_string(d == n ? 0u : d) + ")";
}

/// Ideal lattice of Z_n: one element per divisor d, (d) <= (e) iff e | d,
/// (d)(e) = (gcd(de, n)).
inline MulLattice zn_lattice(unsigned n) {
  if (n < 2) throw BadParameter("gen_zn needs n >= 2");
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> order;
  for (unsigned d : divisors) {
    names.push_back(zn_ideal_name(d, n));
    for (unsigned e : divisors) {
      if (d != e && d % e == 0) order.emplace_back(zn_ideal_name(d, n), zn_ideal_name(e, n));
    }
  }
  Lattice lat = build_lattice<scalar_tag>(names, order);
  MulTable mul(lat.size(), lat.size());
  for (unsigned d : divisors) {
    for (unsigned e : divisors) {
      unsigned p = std::gcd(d * e, n);
      mul(lat.at(zn_ideal_name(d, n)), lat.at(zn_ideal_name(e, n))) = lat.at(zn_ideal_name(p, n));
    }
  }
  return MulLattice::make(std::move(lat), std::move(mul));
}

inline InstanceBundle gen_zn(unsigned n) {
  return make_bundle("Z" + std::to_string(n), LatticeModule::over_itself(zn_lattice(n)));
}

struct FrameShape {
  enum class Kind { boolean, chain };
  Kind kind = Kind::chain;
  unsigned k = 1;

  [[nodiscard]] std::string to_string() const {
    return std::string(kind == Kind::boolean ? "boolean" : "chain") + "(" + std::to_string(k) + ")";
  }
  friend bool operator==(FrameShape const&, FrameShape const&) = default;
};

/// Parses "boolean(K)" or "chain(K)".
inline FrameShape parse_frame_shape(std::string_view s) {
  FrameShape shape;
  std::string_view rest;
  if (s.starts_with("boolean(")) {
    shape.kind = FrameShape::Kind::boolean;
    rest = s.substr(8);
  } else if (s.starts_with("chain(")) {
    shape.kind = FrameShape::Kind::chain;
    rest = s.substr(6);
  } else {
    throw BadParameter("unknown frame shape '" + std::string(s) + "'");
  }
  if (rest.size() < 2 || rest.back() != ')') {
    throw BadParameter("malformed frame shape '" + std::string(s) + "'");
  }
  rest.remove_suffix(1);
  unsigned k = 0;
  for (char c : rest) {
    if (c < '0' || c > '9' || k > 1000) throw BadParameter("malformed frame shape '" + std::string(s) + "'");
    k = k * 10 + static_cast<unsigned>(c - '0');
  }
  shape.k = k;
  return shape;
}

/// Boolean algebra 2^k (elements are k-bit strings) or the (k+1)-chain
/// c0 < c1 < ... < ck, with multiplication := meet.
inline MulLattice frame_lattice(FrameShape shape) {
  if (shape.k < 1) throw BadParameter("frame size must be at least 1");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> order;
  if (shape.kind == FrameShape::Kind::boolean) {
    if (shape.k > 4) throw BadParameter("boolean frames are limited to k <= 4");
    unsigned const count = 1u << shape.k;
    auto bits = [&](unsigned m) {
      std::string s(shape.k, '0');
      for (unsigned i = 0; i < shape.k; ++i) {
        if (m & (1u << (shape.k - 1 - i))) s[i] = '1';
      }
      return s;
    };
    for (unsigned m = 0; m < count; ++m) {
      names.push_back(bits(m));
      for (unsigned i = 0; i < shape.k; ++i) {
        if (!(m & (1u << i))) order.emplace_back(bits(m), bits(m | (1u << i)));
      }
    }
  } else {
    for (unsigned i = 0; i <= shape.k; ++i) {
      names.push_back("c" + std::to_string(i));
      if (i > 0) order.emplace_back("c" + std::to_string(i - 1), "c" + std::to_string(i));
    }
  }
  return MulLattice::with_meet(build_lattice<scalar_tag>(names, order));
}

inline InstanceBundle gen_frame(FrameShape shape) {
  return make_bundle(shape.to_string(), LatticeModule::over_itself(frame_lattice(shape)));
}

}  // namespace latmod
