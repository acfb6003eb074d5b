#include <catch_amalgamated.hpp>

#include "latmod/expansion.hpp"
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

}  // namespace

TEST_CASE("standard expansions on Z12") {
  auto const& M = z12();
  auto d0 = make_delta0(M);
  auto d1 = make_delta1(M);
  auto d2 = make_delta2(M);
  CHECK(d0.label() == "delta0");
  CHECK(d1.label() == "delta1");
  CHECK(d2.label() == "delta2");
  CHECK(d0(c("(4)")) == c("(4)"));
  CHECK(d1(c("(4)")) == c("(2)"));
  CHECK(d1(c("(6)")) == c("(6)"));
  CHECK(d1(c("(0)")) == c("(6)"));
  CHECK(d2(c("(4)")) == c("(2)"));
  CHECK(d2(c("(0)")) == c("(6)"));
  CHECK(d2(M.top()) == M.top());

  auto e0 = make_e_delta(M, d0);
  CHECK(e0.label() == "E(delta0)");
  CHECK(e0(c("(0)")) == c("(6)"));
  CHECK(e0(c("(4)")) == c("(2)"));

  auto m = meet_expansions(M.carrier(), d1, make_top(M.carrier()));
  CHECK(m.label() == "meet(delta1,top)");
  CHECK(m == d1);
}

TEST_CASE("delta-primary elements of Z12") {
  auto const& M = z12();
  auto d0 = make_delta0(M);
  auto d1 = make_delta1(M);
  CHECK(is_delta_primary(M, d1, c("(4)")));
  CHECK_FALSE(is_delta_primary(M, d0, c("(4)")));
  CHECK(is_delta_primary(M, d0, c("(2)")));
  CHECK_FALSE(is_delta_primary(M, d1, c("(0)")));
  CHECK_FALSE(is_delta_primary(M, d1, M.top()));
  auto v = delta_primary_violation(M, d0.table(), c("(4)"));
  REQUIRE(v);
  auto [a, A] = *v;
  CHECK(M.leq(M.act(a, A), c("(4)")));
  CHECK_FALSE(M.leq(A, c("(4)")));
  CHECK_FALSE(M.leq(M.scale_top(a), c("(4)")));

  auto top = make_top(M.carrier());
  for (auto N : M.elements()) CHECK(is_delta_primary(M, top, N) == M.is_proper(N));
}

TEST_CASE("expansions on L and delta_L-primary elements") {
  auto const& M = z12();
  auto const& L = M.scalars();
  auto r = make_delta1_l(L);
  CHECK(r.label() == "delta1_L");
  CHECK(r(s("(4)")) == s("(2)"));
  auto m2 = make_delta2_l(L);
  CHECK(m2(s("(0)")) == s("(6)"));
  CHECK(is_delta_primary(L, make_delta0_l(L), s("(3)")));
  CHECK_FALSE(is_delta_primary(L, make_delta0_l(L), s("(4)")));
  CHECK(is_delta_primary(L, r, s("(4)")));
  CHECK(is_delta_l_primary(M, r, c("(4)")));
  CHECK_FALSE(is_delta_l_primary(M, make_delta0_l(L), c("(4)")));
}

TEST_CASE("table validation") {
  auto const& M = z12();
  auto const& C = M.carrier();
  std::vector<Carrier> t(C.size(), C.bottom());
  try {
    (void)from_table(C, t, "sink");
    FAIL("expected NotAnExpansion");
  } catch (NotAnExpansion const& e) {
    CHECK(std::string(e.what()).find("inflationary") != std::string::npos);
  }
  // Inflationary but not monotone: (4) -> (1) while (2) -> (2).
  std::vector<Carrier> nm;
  for (auto A : C.elements()) nm.push_back(A);
  nm[c("(4)").index()] = C.top();
  auto v = expansion_violation<carrier_tag>(C, nm);
  REQUIRE(v);
  CHECK(v->axiom == "monotone");
  CHECK(v->witness == std::vector<std::string>{"(4)", "(2)"});
  CHECK(expansion_violation<carrier_tag>(C, std::vector<Carrier>(2, C.top()))->axiom == "total");

  std::map<std::string, std::string> entries;
  for (auto A : C.elements()) entries[C.name(A)] = C.name(A);
  CHECK(from_named_table(C, entries, "id") == make_delta0(M));
  entries.erase("(6)");
  CHECK_THROWS_AS(from_named_table(C, entries, "id"), IncompleteTable);
  entries["(6)"] = "(7)";
  CHECK_THROWS_AS(from_named_table(C, entries, "id"), UnknownElement);
}

TEST_CASE("delta1 is not always inflationary off multiplication modules") {
  auto inst = support::load_sample("chain_module");
  auto const& M = inst.bundle.module;
  auto t = delta1_table(M);
  // x has (x:I) = 0 and sqrt(0) I = o, below x.
  CHECK(t[M.carrier().at("x").index()] == M.carrier().at("o"));
  CHECK_THROWS_AS(make_delta1(M), NotAnExpansion);
}

TEST_CASE("characterizations agree with the definition") {
  for (auto const& b : support::small_instances()) {
    auto const& M = b.module;
    std::vector<std::vector<Carrier>> pool{make_delta0(M).table(), delta2_table(M),
                                           make_top(M.carrier()).table()};
    if (is_expansion<carrier_tag>(M.carrier(), delta1_table(M))) pool.push_back(delta1_table(M));
    for (auto const& d : pool) {
      for (auto N : M.elements()) {
        bool a = is_delta_primary(M, d, N);
        CHECK(a == delta_primary_by_scalar_residual(M, d, N));
        CHECK(a == delta_primary_by_carrier_residual(M, d, N));
        CHECK(a == delta_primary_on_compacts(M, d, N));
      }
    }
    auto const& L = M.scalars();
    for (auto const& dl : {make_delta0_l(L), make_delta1_l(L), make_delta2_l(L)}) {
      for (auto N : M.elements()) {
        bool a = is_delta_l_primary(M, dl, N);
        CHECK(a == delta_l_primary_by_scalar_residual(M, dl.table(), N));
        CHECK(a == delta_l_primary_by_carrier_residual(M, dl.table(), N));
        CHECK(a == delta_l_primary_on_compacts(M, dl.table(), N));
      }
    }
  }
}
