#include <catch_amalgamated.hpp>

#include "latmod/classify.hpp"
#include "latmod/generators.hpp"
#include "support.hpp"

using namespace latmod;

namespace {

LatticeModule const& z12() {
  static LatticeModule const M = gen_zn(12).module;
  return M;
}

Carrier c(std::string const& n) { return z12().carrier().at(n); }
Scalar s(std::string const& n) { return z12().scalars().at(n); }

std::vector<std::string> names(std::vector<Carrier> const& v) {
  std::vector<std::string> out;
  for (auto X : v) out.push_back(z12().name(X));
  return out;
}

}  // namespace

TEST_CASE("Z12 module classification") {
  auto const& M = z12();
  std::vector<std::string> prime, primary, two_abs;
  for (auto N : M.elements()) {
    auto k = classify(M, N);
    if (k.prime) prime.push_back(M.name(N));
    if (k.primary) primary.push_back(M.name(N));
    if (k.two_absorbing) two_abs.push_back(M.name(N));
  }
  CHECK(prime == std::vector<std::string>{"(2)", "(3)"});
  CHECK(primary == std::vector<std::string>{"(2)", "(3)", "(4)"});
  CHECK(two_abs == std::vector<std::string>{"(2)", "(3)", "(4)", "(6)"});

  auto k4 = classify(M, c("(4)"));
  CHECK(k4.primary);
  CHECK_FALSE(k4.prime);
  CHECK(k4.p_primary);
  CHECK(k4.p_primary_witness == s("(2)"));
  CHECK_FALSE(k4.p_prime_witness);
  CHECK(k4.colon_im == s("(4)"));
  CHECK(k4.sqrt_colon_im == s("(2)"));
  CHECK_FALSE(k4.radical_element);

  auto k6 = classify(M, c("(6)"));
  CHECK(k6.radical_element);
  CHECK_FALSE(k6.semiprime);  // (2)(3) I <= (6)
  CHECK_FALSE(k6.semiprimary);
  CHECK_FALSE(k6.meet_prime);

  auto top = classify(M, M.top());
  CHECK_FALSE(top.proper);
  CHECK_FALSE(top.prime);
  CHECK_FALSE(top.two_absorbing_primary);
}

TEST_CASE("violation witnesses are genuine") {
  auto const& M = z12();
  auto pv = prime_violation(M, c("(4)"));
  REQUIRE(pv);
  CHECK(*pv == std::pair{s("(2)"), c("(2)")});

  auto qv = primary_violation(M, c("(0)"));
  REQUIRE(qv);
  auto [a, X] = *qv;
  CHECK(M.leq(M.act(a, X), c("(0)")));
  CHECK_FALSE(M.leq(X, c("(0)")));
  CHECK_FALSE(power_scales_below(M, a, c("(0)")));

  auto tv = two_absorbing_violation(M, c("(0)"));
  REQUIRE(tv);
  auto [x, y, Z] = *tv;
  auto const& L = M.scalars();
  CHECK(M.leq(M.act(L.mul(x, y), Z), c("(0)")));
  CHECK_FALSE(L.leq(L.mul(x, y), M.colon_top(c("(0)"))));
  CHECK_FALSE(M.leq(M.act(y, Z), c("(0)")));
  CHECK_FALSE(M.leq(M.act(x, Z), c("(0)")));
}

TEST_CASE("rad and minimal primes in Z12") {
  auto const& M = z12();
  CHECK(rad(M, c("(4)")) == c("(2)"));
  CHECK(rad(M, c("(0)")) == c("(6)"));
  CHECK(rad(M, c("(6)")) == c("(6)"));
  CHECK(rad(M, c("(3)")) == c("(3)"));
  CHECK_THROWS_AS(rad(M, M.top()), NotProper);
  CHECK(names(minimal_primes_over(M, c("(0)"))) == std::vector<std::string>{"(2)", "(3)"});
  CHECK(names(minimal_primes_over(M, c("(4)"))) == std::vector<std::string>{"(2)"});
  CHECK(minimal_primes_over(M, M.top()).empty());
}

TEST_CASE("Z4: the zero ideal is primary but not prime") {
  auto b = gen_zn(4);
  auto const& M = b.module;
  auto zero = M.carrier().at("(0)");
  CHECK(is_primary(M, zero));
  CHECK_FALSE(is_prime(M, zero));
}

TEST_CASE("implications between element classes") {
  for (auto const& b : support::small_instances()) {
    auto const& M = b.module;
    auto const& L = M.scalars();
    for (auto N : M.elements()) {
      auto k = classify(M, N);
      if (k.prime) {
        CHECK(k.primary);
        CHECK(k.two_absorbing);
      }
      if (k.primary) CHECK(is_prime(L, k.sqrt_colon_im));
      if (k.two_absorbing) {
        CHECK(is_two_absorbing(L, k.colon_im));
        CHECK(is_two_absorbing(L, k.sqrt_colon_im));
      }
      if (b.flags.multiplication_module) {
        if (k.two_absorbing) CHECK(k.two_absorbing_primary);
        if (k.primary) CHECK(k.two_absorbing_primary);
      }
      if (k.proper) {
        Carrier r = rad(M, N);
        CHECK(M.leq(N, r));
        if (M.is_proper(r)) CHECK(rad(M, r) == r);
      }
    }
    for (auto p : L.elements()) {
      if (is_prime(L, p)) {
        CHECK(is_primary(L, p));
        CHECK(is_two_absorbing(L, p));
      }
      if (is_primary(L, p) || is_two_absorbing(L, p)) CHECK(is_two_absorbing_primary(L, p));
    }
  }
}
