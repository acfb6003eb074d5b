#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latmod/error.hpp"

namespace latmod {

/// One violated axiom: its name, the first witness tuple found (element
/// names, in iteration order) and how many tuples violate it.
struct AxiomFailure {
  std::string axiom;
  std::vector<std::string> witness;
  std::size_t occurrences = 1;

  friend bool operator==(AxiomFailure const&, AxiomFailure const&) = default;
};

class ValidationReport {
 public:
  [[nodiscard]] bool ok() const noexcept { return failures_.empty(); }
  [[nodiscard]] std::vector<AxiomFailure> const& failures() const noexcept { return failures_; }

  /// Records a violation; repeated violations of one axiom keep the first
  /// witness and bump the counter.
  void add(std::string const& axiom, std::vector<std::string> witness) {
    for (auto& f : failures_) {
      if (f.axiom == axiom) {
        ++f.occurrences;
        return;
      }
    }
    failures_.push_back({axiom, std::move(witness), 1});
  }

  void merge(ValidationReport const& other) {
    for (auto const& f : other.failures_) {
      add(f.axiom, f.witness);
      if (f.occurrences > 1) {
        for (auto& g : failures_) {
          if (g.axiom == f.axiom) g.occurrences += f.occurrences - 1;
        }
      }
    }
  }

  [[nodiscard]] bool violates(std::string const& axiom) const {
    for (auto const& f : failures_) {
      if (f.axiom == axiom) return true;
    }
    return false;
  }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (auto const& f : failures_) {
      out += f.axiom + ":";
      for (auto const& w : f.witness) out += " " + w;
      out += " (" + std::to_string(f.occurrences) + " violation" + (f.occurrences == 1 ? "" : "s") +
             ")\n";
    }
    return out;
  }

 private:
  std::vector<AxiomFailure> failures_;
};

/// Thrown by the checked constructors when a table fails validation.
class InvalidStructure : public Error {
 public:
  InvalidStructure(std::string const& what, ValidationReport report)
      : Error(what + ":\n" + report.to_string()), report_(std::move(report)) {}
  [[nodiscard]] ValidationReport const& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace latmod
