#include <catch_amalgamated.hpp>

#include <set>

#include "latmod/generators.hpp"
#include "latmod/verify/engine.hpp"
#include "support.hpp"

using namespace latmod;
using verify::Outcome;

namespace {

verify::Context const& z12() {
  static verify::Context const c(gen_zn(12));
  return c;
}

}  // namespace

TEST_CASE("registry ids are unique and every entry is documented") {
  std::set<std::string> seen;
  for (auto const& e : verify::registry()) {
    CHECK(seen.insert(e.id).second);
    for (auto const& a : e.aliases) CHECK(seen.insert(a).second);
    CHECK_FALSE(e.statement.empty());
    CHECK(e.hypothesis);
    CHECK(e.conclusion);
  }
}

TEST_CASE("registry covers the catalogue") {
  std::vector<std::string> const expected{
      "STD-EXP", "EXP-MEET", "EQUIV-DEF", "EDELTA-EXP", "CHAR-COLON-R", "CHAR-COLON-A",
      "T-C41", "T-C4", "C-C01", "D0-IMP-D1", "RADICAL-D1-D0", "SEMIPRIME-D0",
      "SEMIPRIMARY-COR", "T-C2", "DELTA-EQ-DELTA1", "T-C90", "T-C91", "T-C92", "L-C91",
      "D1-MEET", "L-C92", "D2-MEET", "T-C04", "T-C05", "T-C06", "T-C01", "T-C02", "T-C07",
      "T-C08", "T-C09", "T-C03", "T-C10", "T-C14", "PD1N", "N-LE-D1NN", "T-C13", "D1-COLON",
      "L-C93", "D1-BIGMEET", "D1-LE-RAD", "T-C11", "D1-EQ-RAD", "T-C12", "D1-2ABS",
      "MINPRIME-DECOMP", "CHAIN-2ABS", "SQRT-NK", "DL-CHAR-R", "DL-CHAR-A", "DL-0", "DL-1",
      "DL-0-IMP-1", "DL-2ABS-0", "DL-2ABS-0M", "DL-2ABS-1", "DL-2ABS-1F", "DL-MONO",
      "DL-COLON", "DL-CHAIN", "DL-MEET", "T-C1", "T-C1-COR"};
  for (auto const& id : expected) CHECK_NOTHROW(verify::find_theorem(id));
  CHECK(verify::find_theorem("D1-EQ-RAD").id == "T-C11");
  CHECK(verify::find_theorem("D1-COLON").id == "T-C13");
  CHECK_THROWS_AS(verify::find_theorem("T-C99"), UnknownTheorem);
}

TEST_CASE("Z12: named outcomes") {
  CHECK(verify::verify(z12(), "T-C41").outcome == Outcome::pass);
  CHECK(verify::verify(z12(), "L-C91").outcome == Outcome::pass);
  CHECK(verify::verify(z12(), "T-C11").outcome == Outcome::pass);
  CHECK(verify::verify(gen_zn(12), "T-C4").outcome == Outcome::pass);
  auto r = verify::verify(z12(), "T-C41");
  CHECK(r.instantiations == 5);
  CHECK_FALSE(r.witness);
  CHECK_THROWS_AS(verify::verify(z12(), "nope"), UnknownTheorem);
}

TEST_CASE("Z12: no failures anywhere") {
  auto reports = verify::verify_all(z12());
  REQUIRE(reports.size() == verify::registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO(reports[i].id << " " << reports[i].witness_text);
    CHECK(reports[i].id == verify::registry()[i].id);
    CHECK(reports[i].outcome != Outcome::fail);
  }
}

TEST_CASE("unmet standing hypotheses give VACUOUS") {
  auto unfaithful = support::load_sample("unfaithful").bundle;
  REQUIRE_FALSE(unfaithful.flags.faithful);
  CHECK(verify::verify(unfaithful, "T-C4").outcome == Outcome::vacuous);
  CHECK(verify::verify(unfaithful, "T-C11").outcome == Outcome::vacuous);

  auto cm = support::load_sample("chain_module").bundle;
  REQUIRE_FALSE(cm.flags.multiplication_module);
  CHECK(verify::verify(cm, "C-C01").outcome == Outcome::vacuous);
  CHECK(verify::verify(cm, "T-C41").outcome == Outcome::pass);
}

TEST_CASE("a singleton instance is mostly vacuous") {
  auto lat = build_lattice<scalar_tag>({"1"}, {});
  auto L = MulLattice::with_meet(lat);
  auto b = make_bundle("one", LatticeModule::over_itself(L));
  auto reports = verify::verify_all(b);
  std::size_t vacuous = 0;
  for (auto const& r : reports) {
    CHECK(r.outcome != Outcome::fail);
    vacuous += r.outcome == Outcome::vacuous;
  }
  CHECK(vacuous * 2 > reports.size());
}

TEST_CASE("failures carry a replayable witness") {
  verify::TheoremEntry bogus{
      "BOGUS", {}, "every proper element is prime", verify::Assumption::none,
      {{"N", verify::ParamKind::carrier}},
      [](verify::Context const& c, verify::Tuple const& t) { return c.M().is_proper(Carrier(t[0])); },
      [](verify::Context const& c, verify::Tuple const& t) { return c.cls(Carrier(t[0])).prime; }};
  auto r = verify::verify(z12(), bogus);
  REQUIRE(r.outcome == Outcome::fail);
  REQUIRE(r.witness);
  CHECK(r.witness_text == "N=(0)");
  CHECK(r.instantiations == 5);
  CHECK(verify::replay(z12(), bogus, *r.witness) == std::pair{true, false});

  auto tsv = verify::render_tsv({r});
  CHECK(tsv == "BOGUS\tFAIL\t5\tN=(0)\n");
  auto table = verify::render_table({r});
  CHECK(table.find("BOGUS  FAIL") != std::string::npos);
}

TEST_CASE("hypothesis boundary") {
  auto const& e = verify::find_theorem("C-C01");
  auto t = verify::hypothesis_boundary(z12(), e);
  REQUIRE(t);
  auto [hyp, concl] = verify::replay(z12(), e, *t);
  CHECK_FALSE(hyp);
  CHECK_FALSE(concl);
}

TEST_CASE("expansion pools") {
  auto const& c = z12();
  CHECK(c.pool_m(verify::Context::kDelta0).label() == "delta0");
  CHECK(c.pool_l(verify::Context::kDelta0L).label() == "delta0_L");
  CHECK(c.pool_l(verify::Context::kDelta1L).label() == "delta1_L");
  // delta0, delta1, delta2, top; four E_delta; six pairwise meets.
  CHECK(c.pool_m_size() == 14);
  CHECK(c.pool_l_size() == 10);
  for (std::size_t k = 0; k < c.pool_m_size(); ++k) {
    CHECK(is_expansion<carrier_tag>(c.M().carrier(), c.delta_m(k)));
  }

  auto cm = support::load_sample("chain_module");
  verify::Context cc(cm.bundle, {cm.module_expansions, cm.lattice_expansions});
  // delta1 is not an expansion there; the user map "lift" joins the base.
  CHECK(cc.pool_m_size() == 4 + 4 + 6);
  CHECK(cc.pool_m(3).label() == "lift");
}

TEST_CASE("families and chains") {
  auto const& c = z12();
  CHECK(c.scalar_families().size() == 63);
  CHECK(c.carrier_families().size() == 63);
  for (auto const& ch : c.carrier_chains()) CHECK(c.M().carrier().is_chain(ch));

  verify::Context big(gen_frame({FrameShape::Kind::boolean, 4}));
  // 16 elements: singletons, pairs, triples and the whole set.
  CHECK(big.carrier_families().size() == 16 + 120 + 560 + 1);
  for (auto const& ch : big.carrier_chains()) CHECK(big.M().carrier().is_chain(ch));
  // 4! maximal chains of the proper part, each of length 4.
  std::size_t longest = 0;
  for (auto const& ch : big.carrier_chains()) {
    if (ch.size() == 4) ++longest;
  }
  CHECK(longest == 24);
}
