// latmod: command-line front end.
//
// Exit status: 0 success (PASS or VACUOUS), 1 FAIL / invalid input,
// 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latmod/latmod.hpp"

namespace {

using namespace latmod;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LatSpecDocument read_document(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_latspec(ss.str());
}

LoadedInstance read_instance(std::string const& path) {
  return load_instance(read_document(path), std::filesystem::path(path).stem().string());
}

Side parse_side(std::string const& s) {
  if (s == "l") return Side::lattice;
  if (s == "m") return Side::module;
  throw UsageError("--side must be 'l' or 'm'");
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int cmd_check(std::string const& path) {
  auto doc = read_document(path);
  auto report = check_document(doc);
  if (!report.ok()) {
    std::cout << report.to_string();
    return kFail;
  }
  auto inst = load_instance(doc, std::filesystem::path(path).stem().string());
  auto const& f = inst.bundle.flags;
  std::cout << "ok\n"
            << "faithful " << yes(f.faithful) << '\n'
            << "multiplication-module " << yes(f.multiplication_module) << '\n'
            << "pg-lattice " << yes(f.pg_lattice) << '\n'
            << "pg-module " << yes(f.pg_module) << '\n'
            << "standing " << yes(f.standing()) << '\n';
  return kOk;
}

void classify_scalar(LoadedInstance const& inst, Scalar p) {
  MulLattice const& L = inst.bundle.module.scalars();
  std::vector<std::string> tags;
  if (is_maximal(L, p)) tags.push_back("maximal");
  if (is_prime(L, p)) tags.push_back("prime");
  if (is_primary(L, p)) tags.push_back("primary");
  if (is_two_absorbing(L, p)) tags.push_back("2-absorbing");
  if (is_two_absorbing_primary(L, p)) tags.push_back("2-absorbing-primary");
  if (L.principal_flags(p).principal()) tags.push_back("principal");
  for (auto const& e : inst.lattice_expansions) {
    if (is_delta_primary(L, e, p)) tags.push_back(e.label() + "-primary");
  }
  std::cout << L.name(p) << "\tsqrt=" << L.name(L.radical(p)) << '\t';
  for (std::size_t i = 0; i < tags.size(); ++i) std::cout << (i ? "," : "") << tags[i];
  std::cout << '\n';
}

void classify_carrier(LoadedInstance const& inst, Carrier N) {
  LatticeModule const& M = inst.bundle.module;
  auto c = classify(M, N);
  std::vector<std::string> tags;
  auto tag = [&](bool on, std::string t) {
    if (on) tags.push_back(std::move(t));
  };
  tag(c.proper, "proper");
  tag(c.maximal, "maximal");
  tag(c.prime, "prime");
  tag(c.p_prime, "p-prime");
  tag(c.primary, "primary");
  tag(c.p_primary, "p-primary");
  tag(c.semiprime, "semiprime");
  tag(c.semiprimary, "semiprimary");
  tag(c.radical_element, "radical");
  tag(c.meet_prime, "meet-prime");
  tag(c.two_absorbing, "2-absorbing");
  tag(c.two_absorbing_primary, "2-absorbing-primary");
  auto d1 = delta1_table(M);
  tag(is_delta_primary(M, d1, N), "delta1-primary");
  for (auto const& e : inst.module_expansions) tag(is_delta_primary(M, e, N), e.label() + "-primary");
  std::cout << M.name(N) << "\t(N:I)=" << M.name(c.colon_im) << "\tsqrt=" << M.name(c.sqrt_colon_im)
            << '\t';
  for (std::size_t i = 0; i < tags.size(); ++i) std::cout << (i ? "," : "") << tags[i];
  std::cout << '\n';
}

int cmd_classify(std::string const& path, std::string const& element, std::string const& side) {
  auto inst = read_instance(path);
  LatticeModule const& M = inst.bundle.module;
  if (parse_side(side) == Side::lattice) {
    MulLattice const& L = M.scalars();
    if (!element.empty()) {
      classify_scalar(inst, L.at(element));
    } else {
      for (auto p : L.elements()) classify_scalar(inst, p);
    }
  } else if (!element.empty()) {
    classify_carrier(inst, M.carrier().at(element));
  } else {
    for (auto N : M.elements()) classify_carrier(inst, N);
  }
  return kOk;
}

int cmd_verify(std::string const& path, std::string const& theorem, bool tsv) {
  auto inst = read_instance(path);
  verify::Context ctx(inst.bundle, {inst.module_expansions, inst.lattice_expansions});
  std::vector<verify::VerificationReport> reports;
  if (theorem.empty()) {
    reports = verify::verify_all(ctx);
  } else {
    try {
      reports.push_back(verify::verify(ctx, theorem));
    } catch (UnknownTheorem const& e) {
      throw UsageError(e.what());
    }
  }
  std::cout << (tsv ? verify::render_tsv(reports) : verify::render_table(reports));
  for (auto const& r : reports) {
    if (r.outcome == verify::Outcome::fail) return kFail;
  }
  return kOk;
}

int cmd_gen(InstanceBundle const& b) {
  std::cout << emit_latspec(to_document(b));
  return kOk;
}

int cmd_search(std::string const& goal_text, std::string const& family_text, unsigned max) {
  SearchGoal goal;
  Family family{};
  try {
    goal = parse_goal(goal_text);
    family = parse_family(family_text);
    if (max < 1) throw BadParameter("--max must be at least 1");
  } catch (Error const& e) {
    throw UsageError(e.what());
  }
  auto hits = search(goal, family, max);
  for (auto const& h : hits) std::cout << h.instance << '\t' << h.witness << '\n';
  if (hits.empty()) std::cerr << "no witnesses\n";
  return goal.kind == SearchGoal::Kind::theorem_fail && !hits.empty() ? kFail : kOk;
}

int cmd_dot(std::string const& path, std::string const& side) {
  Side s = parse_side(side);
  std::cout << emit_dot(read_instance(path).bundle, s);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattice modules: validation, classification, theorem checks"};
  app.require_subcommand(1);

  std::string file, element, side = "m", theorem, shape, goal, family;
  bool tsv = false;
  unsigned n = 0, max = 0;

  auto* check = app.add_subcommand("check", "Validate the axioms of a LATSPEC file");
  check->add_option("file", file)->required();

  auto* cls = app.add_subcommand("classify", "Classify the elements of L or M");
  cls->add_option("file", file)->required();
  cls->add_option("--element", element, "Only this element");
  cls->add_option("--side", side, "l (scalars) or m (module)")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Check registered theorems on an instance");
  ver->add_option("file", file)->required();
  ver->add_option("--theorem", theorem, "Theorem id (default: all)");
  ver->add_flag("--tsv", tsv, "Tab-separated output");

  auto* gen = app.add_subcommand("gen", "Write a generated instance as LATSPEC");
  gen->require_subcommand(1);
  auto* gen_zn_cmd = gen->add_subcommand("zn", "Ideal lattice of Z_n");
  gen_zn_cmd->add_option("--n", n)->required();
  auto* gen_frame_cmd = gen->add_subcommand("frame", "Frame with multiplication := meet");
  gen_frame_cmd->add_option("--shape", shape, "boolean(K) or chain(K)")->required();

  auto* srch = app.add_subcommand("search", "Search an instance family for witnesses");
  srch->add_option("--goal", goal)->required();
  srch->add_option("--family", family, "zn, frame-boolean or frame-chain")->required();
  srch->add_option("--max", max)->required();

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT format");
  dot->add_option("file", file)->required();
  dot->add_option("--side", side, "l (scalars) or m (module)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file);
    if (*cls) return cmd_classify(file, element, side);
    if (*ver) return cmd_verify(file, theorem, tsv);
    if (*gen_zn_cmd) return cmd_gen(gen_zn(n));
    if (*gen_frame_cmd) return cmd_gen(gen_frame(parse_frame_shape(shape)));
    if (*srch) return cmd_search(goal, family, max);
    if (*dot) return cmd_dot(file, side);
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (BadParameter const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
