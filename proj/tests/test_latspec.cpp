#include <catch_amalgamated.hpp>

#include "latmod/dot.hpp"
#include "latmod/generators.hpp"
#include "latmod/latspec.hpp"
#include "support.hpp"

using namespace latmod;

TEST_CASE("samples parse, load and round-trip") {
  for (auto const& name : support::sample_names()) {
    INFO(name);
    auto doc = parse_latspec(support::read_file(support::sample_path(name)));
    auto text = emit_latspec(doc);
    auto again = parse_latspec(text);
    CHECK(again == doc);
    CHECK(emit_latspec(again) == text);
    CHECK(check_document(doc).ok());
    CHECK_NOTHROW(load_instance(doc, name));
  }
}

TEST_CASE("the generated Z12 sample is canonical") {
  auto text = support::read_file(support::sample_path("z12"));
  CHECK(emit_latspec(to_document(gen_zn(12))) == text);
  auto doc = parse_latspec(text);
  CHECK(doc.lattice.leq.size() == 7);
  CHECK(doc.lattice.mul.size() == 21);
  CHECK_FALSE(doc.module);
}

TEST_CASE("instances survive a trip through the format") {
  for (auto const& b : support::small_instances()) {
    INFO(b.name);
    auto doc = to_document(b);
    auto back = load_instance(parse_latspec(emit_latspec(doc)), b.name).bundle;
    auto const& M = b.module;
    auto const& M2 = back.module;
    REQUIRE(M2.size() == M.size());
    REQUIRE(M2.scalars().size() == M.scalars().size());
    for (auto a : M.scalars().elements()) {
      for (auto c : M.scalars().elements()) {
        CHECK(M2.scalars().name(M2.scalars().mul(a, c)) == M.scalars().name(M.scalars().mul(a, c)));
      }
      for (auto X : M.elements()) CHECK(M2.name(M2.act(a, X)) == M.name(M.act(a, X)));
    }
    CHECK(back.flags.standing() == b.flags.standing());
    CHECK(back.flags.multiplication_module == b.flags.multiplication_module);
    CHECK(doc.module.has_value() == !M.is_self_module());
  }
}

TEST_CASE("z4: hand-written order, comments and a lattice expansion") {
  auto inst = support::load_sample("z4");
  auto const& L = inst.bundle.module.scalars();
  CHECK(L.size() == 3);
  CHECK(L.bottom() == L.at("(0)"));
  REQUIRE(inst.lattice_expansions.size() == 1);
  auto const& e = inst.lattice_expansions[0];
  CHECK(e.label() == "closure");
  CHECK(e(L.at("(0)")) == L.at("(2)"));
  CHECK(inst.module_expansions.empty());
}

TEST_CASE("chain_module carries a module block and a module expansion") {
  auto inst = support::load_sample("chain_module");
  CHECK_FALSE(inst.bundle.module.is_self_module());
  REQUIRE(inst.module_expansions.size() == 1);
  CHECK(inst.module_expansions[0].label() == "lift");
  auto doc = to_document(inst.bundle);
  REQUIRE(doc.module);
  CHECK(doc.module->act.size() == 6);
}

TEST_CASE("parse errors") {
  std::string const head = "#LATSPEC 1\nlattice\n  elements 0 1\n  leq 0 1\n";
  std::string const mul = "  mul 0 0 0\n  mul 0 1 0\n  mul 1 1 1\n";

  CHECK_NOTHROW(parse_latspec(head + mul + "end\n"));
  CHECK_THROWS_AS(parse_latspec("#LATSPEC 2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_latspec(""), SyntaxError);
  CHECK_THROWS_AS(parse_latspec(head + mul), SyntaxError);
  CHECK_THROWS_AS(parse_latspec("#LATSPEC 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_latspec(head + "  leq 0\nend\n"), SyntaxError);
  CHECK_THROWS_AS(parse_latspec(head + "  act 0 0 0\nend\n"), SyntaxError);

  try {
    (void)parse_latspec(head + mul + "  mul 1 0 1\nend\n");
    FAIL("expected ConflictingFact");
  } catch (ConflictingFact const& e) {
    CHECK(e.line() == 8);
  }
  // The same fact stated in both orders is consistent.
  CHECK_NOTHROW(parse_latspec(head + mul + "  mul 1 0 0\nend\n"));

  CHECK_THROWS_AS(parse_latspec("#LATSPEC 1\nlattice\n  elements 0 0\nend\n"), ConflictingFact);
  CHECK_THROWS_AS(parse_latspec(head + mul + "end\nexpansion e on lattice\nend\n"
                                "expansion e on lattice\nend\n"),
                  ConflictingFact);

  try {
    (void)parse_latspec(head + "  mul 0 z 0\n" + mul + "end\n");
    FAIL("expected UnknownElement");
  } catch (UnknownElement const& e) {
    CHECK(e.name() == "z");
    CHECK(e.line() == 5);
  }
}

TEST_CASE("check_document reports semantic problems") {
  auto bad = parse_latspec(support::read_file(support::sample_path("bad_mul")));
  auto r = check_document(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.violates("product-below-meet"));
  CHECK_THROWS_AS(load_instance(bad, "bad"), InvalidStructure);

  auto cyc = parse_latspec("#LATSPEC 1\nlattice\n  elements a b\n  leq a b\n  leq b a\nend\n");
  CHECK(check_document(cyc).violates("partial-order"));

  auto incomplete = parse_latspec("#LATSPEC 1\nlattice\n  elements 0 1\n  leq 0 1\n  mul 0 0 0\nend\n");
  CHECK(check_document(incomplete).violates("structure"));

  auto doc = parse_latspec(support::read_file(support::sample_path("z4")));
  doc.expansions["closure"].map["(2)"] = "(0)";
  CHECK(check_document(doc).violates("expansion"));
}

TEST_CASE("dot output") {
  auto b = gen_zn(4);
  CHECK(emit_dot(b, Side::lattice) ==
        "digraph lattice {\n  \"(0)\";\n  \"(1)\";\n  \"(2)\";\n"
        "  \"(0)\" -> \"(2)\";\n  \"(2)\" -> \"(1)\";\n}\n");
  auto cm = support::load_sample("chain_module").bundle;
  auto dot = emit_dot(cm, Side::module);
  CHECK(dot.starts_with("digraph module {"));
  CHECK(dot.find("\"o\" -> \"x\";") != std::string::npos);
  CHECK(dot.find("\"x\" -> \"i\";") != std::string::npos);
}
