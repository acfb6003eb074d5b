#include <catch_amalgamated.hpp>

#include "latmod/generators.hpp"
#include "latmod/lattice.hpp"

using namespace latmod;

namespace {

Lattice diamond() {
  return build_lattice<scalar_tag>({"t", "a", "b", "c", "0"},
                                   {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "t"}, {"b", "t"}, {"c", "t"}});
}

}  // namespace

TEST_CASE("handles follow lexicographic order of names") {
  auto L = diamond();
  REQUIRE(L.size() == 5);
  CHECK(L.names() == std::vector<std::string>{"0", "a", "b", "c", "t"});
  CHECK(L.at("0").index() == 0);
  CHECK(L.at("t").index() == 4);
  CHECK_FALSE(L.find("z").has_value());
  CHECK_THROWS_AS(L.at("z"), UnknownElement);
}

TEST_CASE("order is the reflexive transitive closure of the given pairs") {
  auto L = build_lattice<scalar_tag>({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK(L.leq(L.at("x"), L.at("z")));
  CHECK(L.leq(L.at("y"), L.at("y")));
  CHECK_FALSE(L.leq(L.at("z"), L.at("x")));
  CHECK(L.bottom() == L.at("x"));
  CHECK(L.top() == L.at("z"));
}

TEST_CASE("meets and joins of the diamond") {
  auto L = diamond();
  auto a = L.at("a"), b = L.at("b");
  CHECK(L.meet(a, b) == L.at("0"));
  CHECK(L.join(a, b) == L.at("t"));
  CHECK(L.meet(a, L.top()) == a);
  CHECK(L.join(a, L.bottom()) == a);
  std::vector<Scalar> none;
  CHECK(L.meet_of(none) == L.top());
  CHECK(L.join_of(none) == L.bottom());
  std::vector<Scalar> ab{a, b};
  CHECK(L.meet_of(ab) == L.bottom());
  CHECK_FALSE(L.is_chain(ab));
  CHECK(L.is_chain(std::vector<Scalar>{L.bottom(), a, L.top()}));
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(build_lattice<scalar_tag>({"a", "a"}, {}), DuplicateElement);
  CHECK_THROWS_AS(build_lattice<scalar_tag>({"a", "b"}, {{"a", "c"}}), UnknownElement);
  CHECK_THROWS_AS(build_lattice<scalar_tag>({}, {}), BadParameter);
  CHECK_THROWS_AS(build_lattice<scalar_tag>({"bad name"}, {}), BadParameter);
  CHECK_THROWS_AS(build_lattice<scalar_tag>({"a#"}, {}), BadParameter);

  try {
    (void)build_lattice<scalar_tag>({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL("expected NotAPartialOrder");
  } catch (NotAPartialOrder const& e) {
    CHECK(e.witness() == std::pair<std::string, std::string>{"a", "b"});
  }

  // Two incomparable elements with nothing above them.
  CHECK_THROWS_AS(build_lattice<scalar_tag>({"a", "b"}, {}), NotALattice);
  // Bounded, but a and b have two minimal upper bounds.
  CHECK_THROWS_AS(build_lattice<scalar_tag>({"0", "a", "b", "c", "d", "1"},
                                            {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
                                             {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}}),
                  NotALattice);
}

TEST_CASE("covers of the Z12 divisor order") {
  auto L = zn_lattice(12).lattice();
  auto covers = L.covers();
  REQUIRE(covers.size() == 7);
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [lo, hi] : covers) named.emplace_back(L.name(lo), L.name(hi));
  CHECK(named == std::vector<std::pair<std::string, std::string>>{
                     {"(0)", "(4)"}, {"(0)", "(6)"}, {"(2)", "(1)"}, {"(3)", "(1)"},
                     {"(4)", "(2)"}, {"(6)", "(2)"}, {"(6)", "(3)"}});
  CHECK(L.meet(L.at("(4)"), L.at("(6)")) == L.at("(0)"));
  CHECK(L.join(L.at("(4)"), L.at("(6)")) == L.at("(2)"));
  CHECK(L.join(L.at("(2)"), L.at("(3)")) == L.at("(1)"));
}

TEST_CASE("singleton lattice") {
  auto L = build_lattice<scalar_tag>({"1"}, {});
  CHECK(L.bottom() == L.top());
  CHECK_FALSE(L.is_proper(L.top()));
  CHECK(L.covers().empty());
}

TEST_CASE("rebind keeps the structure") {
  auto L = diamond();
  auto M = L.rebind<carrier_tag>();
  CHECK(M.names() == L.names());
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      Carrier x(a.index()), y(b.index());
      CHECK(M.leq(x, y) == L.leq(a, b));
      CHECK(M.meet(x, y).index() == L.meet(a, b).index());
    }
  }
  CHECK(M.rebind<scalar_tag>() == L);
}
