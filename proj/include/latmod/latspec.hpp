#pragma once

// LATSPEC: a line-oriented text format for a multiplicative lattice, an
// optional module over it and optional named expansion tables.
//
//   #LATSPEC 1
//   lattice
//     elements a b c
//     leq a b
//     mul a b c
//   end
//   module                      (absent: L acts on itself)
//     elements X Y
//     leq X Y
//     act a X Y
//   end
//   expansion NAME on module|lattice
//     map A B
//   end

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latmod/expansion.hpp"
#include "latmod/module.hpp"
#include "latmod/validation.hpp"

namespace latmod {

using NamePair = std::pair<std::string, std::string>;

struct LatticeSection {
  std::set<std::string> elements;
  std::set<NamePair> leq;
  /// Keys are normalized so that first <= second.
  std::map<NamePair, std::string> mul;

  friend bool operator==(LatticeSection const&, LatticeSection const&) = default;
};

struct ModuleSection {
  std::set<std::string> elements;
  std::set<NamePair> leq;
  /// (scalar, carrier) -> carrier
  std::map<NamePair, std::string> act;

  friend bool operator==(ModuleSection const&, ModuleSection const&) = default;
};

struct ExpansionSection {
  enum class On { lattice, module };
  On on = On::module;
  std::map<std::string, std::string> map;

  friend bool operator==(ExpansionSection const&, ExpansionSection const&) = default;
};

struct LatSpecDocument {
  LatticeSection lattice;
  std::optional<ModuleSection> module;
  std::map<std::string, ExpansionSection> expansions;

  friend bool operator==(LatSpecDocument const&, LatSpecDocument const&) = default;
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct NameRef {
  std::string name;
  std::size_t line;
  enum class Where { lattice, module } where;
};

}  // namespace detail

/// Throws SyntaxError, UnknownElement or ConflictingFact.
inline LatSpecDocument parse_latspec(std::string_view text) {
  using detail::NameRef;
  LatSpecDocument doc;
  std::vector<NameRef> refs;
  enum class Block { none, lattice, module, expansion } block = Block::none;
  bool seen_lattice = false;
  std::string exp_name;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto conflict = [&](std::string const& what) { throw ConflictingFact(line_no, what); };

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (line_no == 1) {
      auto w = detail::split_words(raw);
      if (w.size() != 2 || w[0] != "#LATSPEC" || w[1] != "1") {
        throw SyntaxError(1, "expected header '#LATSPEC 1'");
      }
      continue;
    }
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto w = detail::split_words(raw);
    if (w.empty()) continue;
    std::string const& kw = w[0];

    if (block == Block::none) {
      if (kw == "lattice" && w.size() == 1) {
        if (seen_lattice) throw SyntaxError(line_no, "second lattice block");
        seen_lattice = true;
        block = Block::lattice;
      } else if (kw == "module" && w.size() == 1) {
        if (doc.module) throw SyntaxError(line_no, "second module block");
        doc.module.emplace();
        block = Block::module;
      } else if (kw == "expansion" && w.size() == 4 && w[2] == "on" &&
                 (w[3] == "lattice" || w[3] == "module")) {
        exp_name = w[1];
        if (doc.expansions.contains(exp_name)) conflict("expansion '" + exp_name + "' redefined");
        doc.expansions[exp_name].on =
            w[3] == "lattice" ? ExpansionSection::On::lattice : ExpansionSection::On::module;
        block = Block::expansion;
      } else {
        throw SyntaxError(line_no, "expected 'lattice', 'module' or 'expansion NAME on SIDE'");
      }
      continue;
    }

    if (kw == "end" && w.size() == 1) {
      block = Block::none;
      continue;
    }

    auto const side = block == Block::lattice ? NameRef::Where::lattice : NameRef::Where::module;
    if (kw == "elements" && block != Block::expansion) {
      auto& elems = block == Block::lattice ? doc.lattice.elements : doc.module->elements;
      if (w.size() < 2) throw SyntaxError(line_no, "'elements' needs at least one name");
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!elems.insert(w[i]).second) conflict("element '" + w[i] + "' declared twice");
      }
    } else if (kw == "leq" && block != Block::expansion) {
      if (w.size() != 3) throw SyntaxError(line_no, "'leq' takes two names");
      (block == Block::lattice ? doc.lattice.leq : doc.module->leq).emplace(w[1], w[2]);
      refs.push_back({w[1], line_no, side});
      refs.push_back({w[2], line_no, side});
    } else if (kw == "mul" && block == Block::lattice) {
      if (w.size() != 4) throw SyntaxError(line_no, "'mul' takes three names");
      NamePair key = w[1] <= w[2] ? NamePair{w[1], w[2]} : NamePair{w[2], w[1]};
      auto [it, fresh] = doc.lattice.mul.emplace(key, w[3]);
      if (!fresh && it->second != w[3]) {
        conflict("mul " + key.first + " " + key.second + " is both " + it->second + " and " + w[3]);
      }
      for (std::size_t i = 1; i < 4; ++i) refs.push_back({w[i], line_no, NameRef::Where::lattice});
    } else if (kw == "act" && block == Block::module) {
      if (w.size() != 4) throw SyntaxError(line_no, "'act' takes three names");
      auto [it, fresh] = doc.module->act.emplace(NamePair{w[1], w[2]}, w[3]);
      if (!fresh && it->second != w[3]) {
        conflict("act " + w[1] + " " + w[2] + " is both " + it->second + " and " + w[3]);
      }
      refs.push_back({w[1], line_no, NameRef::Where::lattice});
      refs.push_back({w[2], line_no, NameRef::Where::module});
      refs.push_back({w[3], line_no, NameRef::Where::module});
    } else if (kw == "map" && block == Block::expansion) {
      if (w.size() != 3) throw SyntaxError(line_no, "'map' takes two names");
      auto& sec = doc.expansions[exp_name];
      auto [it, fresh] = sec.map.emplace(w[1], w[2]);
      if (!fresh && it->second != w[2]) {
        conflict("map " + w[1] + " is both " + it->second + " and " + w[2]);
      }
      auto where = sec.on == ExpansionSection::On::lattice ? NameRef::Where::lattice
                                                           : NameRef::Where::module;
      refs.push_back({w[1], line_no, where});
      refs.push_back({w[2], line_no, where});
    } else {
      throw SyntaxError(line_no, "unexpected '" + kw + "' here");
    }
  }
  if (block != Block::none) throw SyntaxError(line_no, "missing 'end'");
  if (!seen_lattice) throw SyntaxError(line_no, "no lattice block");

  for (auto const& r : refs) {
    bool on_module = r.where == NameRef::Where::module && doc.module;
    auto const& elems = on_module ? doc.module->elements : doc.lattice.elements;
    if (!elems.contains(r.name)) throw UnknownElement(r.name, r.line);
  }
  return doc;
}

/// Canonical text: sorted facts, one per line, LF line endings.
inline std::string emit_latspec(LatSpecDocument const& doc) {
  std::ostringstream os;
  auto elements = [&](std::set<std::string> const& s) {
    os << "  elements";
    for (auto const& e : s) os << ' ' << e;
    os << '\n';
  };
  os << "#LATSPEC 1\n\nlattice\n";
  elements(doc.lattice.elements);
  for (auto const& [a, b] : doc.lattice.leq) os << "  leq " << a << ' ' << b << '\n';
  for (auto const& [k, v] : doc.lattice.mul) os << "  mul " << k.first << ' ' << k.second << ' ' << v << '\n';
  os << "end\n";
  if (doc.module) {
    os << "\nmodule\n";
    elements(doc.module->elements);
    for (auto const& [a, b] : doc.module->leq) os << "  leq " << a << ' ' << b << '\n';
    for (auto const& [k, v] : doc.module->act) os << "  act " << k.first << ' ' << k.second << ' ' << v << '\n';
    os << "end\n";
  }
  for (auto const& [name, sec] : doc.expansions) {
    os << "\nexpansion " << name << " on "
       << (sec.on == ExpansionSection::On::lattice ? "lattice" : "module") << '\n';
    for (auto const& [a, b] : sec.map) os << "  map " << a << ' ' << b << '\n';
    os << "end\n";
  }
  return os.str();
}

/// An instance read from a document, with its named expansions.
struct LoadedInstance {
  InstanceBundle bundle;
  std::vector<ExpansionM> module_expansions;
  std::vector<ExpansionL> lattice_expansions;
};

namespace detail {

template <class Tag>
BasicLattice<Tag> section_lattice(std::set<std::string> const& elems, std::set<NamePair> const& leq) {
  return build_lattice<Tag>({elems.begin(), elems.end()}, {leq.begin(), leq.end()});
}

inline MulTable section_mul(Lattice const& lat, LatticeSection const& s) {
  MulTable mul(lat.size(), lat.size());
  for (auto a : lat.elements()) {
    for (auto b : lat.elements()) {
      NamePair key = a <= b ? NamePair{lat.name(a), lat.name(b)} : NamePair{lat.name(b), lat.name(a)};
      auto it = s.mul.find(key);
      if (it == s.mul.end()) {
        throw IncompleteTable("no mul entry for " + key.first + " " + key.second);
      }
      mul(a, b) = lat.at(it->second);
    }
  }
  return mul;
}

inline ActionTable section_act(Lattice const& L, CarrierLattice const& M, ModuleSection const& s) {
  ActionTable act(L.size(), M.size());
  for (auto a : L.elements()) {
    for (auto X : M.elements()) {
      auto it = s.act.find({L.name(a), M.name(X)});
      if (it == s.act.end()) {
        throw IncompleteTable("no act entry for " + L.name(a) + " " + M.name(X));
      }
      act(a, X) = M.at(it->second);
    }
  }
  return act;
}

}  // namespace detail

/// Builds and validates the instance.  Throws the structural errors of the
/// lattice layer, IncompleteTable, InvalidStructure or NotAnExpansion.
inline LoadedInstance load_instance(LatSpecDocument const& doc, std::string name) {
  Lattice lat = detail::section_lattice<scalar_tag>(doc.lattice.elements, doc.lattice.leq);
  MulTable mul = detail::section_mul(lat, doc.lattice);
  MulLattice L = MulLattice::make(std::move(lat), std::move(mul));
  LatticeModule M = [&] {
    if (!doc.module) return LatticeModule::over_itself(L);
    CarrierLattice car = detail::section_lattice<carrier_tag>(doc.module->elements, doc.module->leq);
    ActionTable act = detail::section_act(L.lattice(), car, *doc.module);
    return LatticeModule::make(L, std::move(car), std::move(act));
  }();
  LoadedInstance out{make_bundle(std::move(name), std::move(M)), {}, {}};
  LatticeModule const& mod = out.bundle.module;
  for (auto const& [label, sec] : doc.expansions) {
    if (sec.on == ExpansionSection::On::lattice) {
      out.lattice_expansions.push_back(from_named_table(mod.scalars().lattice(), sec.map, label));
    } else {
      out.module_expansions.push_back(from_named_table(mod.carrier(), sec.map, label));
    }
  }
  return out;
}

/// Document for a bundle: cover relations as the order, full tables.  The
/// module block is omitted when the module is L acting on itself.
inline LatSpecDocument to_document(InstanceBundle const& bundle) {
  LatSpecDocument doc;
  LatticeModule const& M = bundle.module;
  MulLattice const& L = M.scalars();
  for (auto a : L.elements()) doc.lattice.elements.insert(L.name(a));
  for (auto const& [lo, hi] : L.lattice().covers()) doc.lattice.leq.emplace(L.name(lo), L.name(hi));
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      if (L.name(a) <= L.name(b)) doc.lattice.mul[{L.name(a), L.name(b)}] = L.name(L.mul(a, b));
    }
  }
  if (!M.is_self_module()) {
    ModuleSection sec;
    for (auto X : M.elements()) sec.elements.insert(M.name(X));
    for (auto const& [lo, hi] : M.carrier().covers()) sec.leq.emplace(M.name(lo), M.name(hi));
    for (auto a : L.elements()) {
      for (auto X : M.elements()) sec.act[{L.name(a), M.name(X)}] = M.name(M.act(a, X));
    }
    doc.module = std::move(sec);
  }
  return doc;
}

/// All axiom violations of a document, structural problems included.
inline ValidationReport check_document(LatSpecDocument const& doc) {
  ValidationReport report;
  try {
    Lattice lat = detail::section_lattice<scalar_tag>(doc.lattice.elements, doc.lattice.leq);
    MulTable mul = detail::section_mul(lat, doc.lattice);
    report.merge(validate_mul(lat, mul));
    if (!report.ok()) return report;
    MulLattice L = MulLattice::make(std::move(lat), std::move(mul));
    LatticeModule M;
    if (doc.module) {
      CarrierLattice car = detail::section_lattice<carrier_tag>(doc.module->elements, doc.module->leq);
      ActionTable act = detail::section_act(L.lattice(), car, *doc.module);
      report.merge(validate_module(L, car, act));
      if (!report.ok()) return report;
      M = LatticeModule::make(L, std::move(car), std::move(act));
    } else {
      M = LatticeModule::over_itself(L);
    }
    for (auto const& [label, sec] : doc.expansions) {
      try {
        if (sec.on == ExpansionSection::On::lattice) {
          (void)from_named_table(M.scalars().lattice(), sec.map, label);
        } else {
          (void)from_named_table(M.carrier(), sec.map, label);
        }
      } catch (NotAnExpansion const& e) {
        auto w = e.witness();
        w.insert(w.begin(), label);
        report.add("expansion", std::move(w));
      }
    }
  } catch (NotAPartialOrder const& e) {
    report.add("partial-order", {e.witness().first, e.witness().second});
  } catch (NotALattice const& e) {
    report.add("lattice", {e.witness().first, e.witness().second});
  } catch (InvalidStructure const& e) {
    report.merge(e.report());
  } catch (Error const& e) {
    report.add("structure", {e.what()});
  }
  return report;
}

}  // namespace latmod
