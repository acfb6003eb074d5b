#include <catch_amalgamated.hpp>

#include "latmod/classify.hpp"
#include "latmod/expansion.hpp"
#include "latmod/generators.hpp"
#include "oracle/frames.hpp"

using namespace latmod;

TEST_CASE("Boolean frames match the bitmask model") {
  for (unsigned k = 1; k <= 4; ++k) {
    INFO("k=" << k);
    oracle::BooleanFrame F{k};
    auto b = gen_frame({FrameShape::Kind::boolean, k});
    auto const& M = b.module;
    auto const& L = M.scalars();
    REQUIRE(L.size() == (1u << k));
    auto d1 = make_delta1(M);
    for (unsigned m = 0; m <= F.full(); ++m) {
      Scalar a = L.at(F.name(m));
      Carrier N(a.index());
      INFO(F.name(m));
      CHECK(is_prime(L, a) == F.prime(m));
      CHECK(is_primary(L, a) == F.prime(m));
      CHECK(is_maximal(L, a) == F.prime(m));
      CHECK(is_two_absorbing(L, a) == F.two_absorbing(m));
      CHECK(L.radical(a) == L.at(F.name(F.radical(m))));
      auto cls = classify(M, N);
      CHECK(cls.prime == F.prime(m));
      CHECK(cls.two_absorbing == F.two_absorbing(m));
      CHECK(d1(N) == N);
      for (unsigned m2 = 0; m2 <= F.full(); ++m2) {
        Scalar c = L.at(F.name(m2));
        CHECK(L.mul(a, c) == L.at(F.name(m & m2)));
        CHECK(L.join(a, c) == L.at(F.name(m | m2)));
        CHECK(L.leq(a, c) == ((m & ~m2) == 0));
      }
    }
    CHECK(b.flags.standing());
  }
}

TEST_CASE("chain frames match the height model") {
  for (unsigned k = 1; k <= 6; ++k) {
    INFO("k=" << k);
    oracle::ChainFrame F{k};
    auto b = gen_frame({FrameShape::Kind::chain, k});
    auto const& M = b.module;
    auto const& L = M.scalars();
    REQUIRE(L.size() == k + 1);
    for (unsigned h = 0; h <= k; ++h) {
      Scalar a = L.at(F.name(h));
      INFO(F.name(h));
      CHECK(is_prime(L, a) == F.prime(h));
      CHECK(is_primary(L, a) == F.prime(h));
      CHECK(is_maximal(L, a) == F.maximal(h));
      CHECK(L.radical(a) == L.at(F.name(F.radical(h))));
      CHECK(classify(M, Carrier(a.index())).prime == F.prime(h));
      for (unsigned h2 = 0; h2 <= k; ++h2) {
        CHECK(L.mul(a, L.at(F.name(h2))) == L.at(F.name(std::min(h, h2))));
      }
    }
    CHECK(b.flags.faithful);
    CHECK(b.flags.multiplication_module);
    // Middle elements are not join-principal, so chains with k >= 2 are not PG.
    CHECK(b.flags.pg_lattice == (k == 1));
  }
}
