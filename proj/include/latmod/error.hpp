#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latmod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateElement : public Error {
 public:
  explicit DuplicateElement(std::string name)
      : Error("duplicate element '" + name + "'"), name_(std::move(name)) {}
  [[nodiscard]] std::string const& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(std::string name, std::size_t line = 0)
      : Error("unknown element '" + name + "'" +
              (line ? " at line " + std::to_string(line) : std::string{})),
        name_(std::move(name)),
        line_(line) {}
  [[nodiscard]] std::string const& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::string name_;
  std::size_t line_;
};

/// The order relation has a cycle a <= b <= a with a != b.
class NotAPartialOrder : public Error {
 public:
  NotAPartialOrder(std::string a, std::string b)
      : Error("order is not antisymmetric: " + a + " <= " + b + " <= " + a),
        witness_(std::move(a), std::move(b)) {}
  [[nodiscard]] std::pair<std::string, std::string> const& witness() const noexcept {
    return witness_;
  }

 private:
  std::pair<std::string, std::string> witness_;
};

/// Some pair lacks a unique meet or join.
class NotALattice : public Error {
 public:
  NotALattice(std::string a, std::string b, std::string const& what)
      : Error("no unique " + what + " for " + a + ", " + b), witness_(std::move(a), std::move(b)) {}
  [[nodiscard]] std::pair<std::string, std::string> const& witness() const noexcept {
    return witness_;
  }

 private:
  std::pair<std::string, std::string> witness_;
};

/// A multiplication, action or expansion table is missing an entry.
class IncompleteTable : public Error {
 public:
  using Error::Error;
};

class NotAnExpansion : public Error {
 public:
  NotAnExpansion(std::string const& label, std::vector<std::string> witness, std::string const& axiom)
      : Error(make_message(label, witness, axiom)), witness_(std::move(witness)) {}
  [[nodiscard]] std::vector<std::string> const& witness() const noexcept { return witness_; }

 private:
  static std::string make_message(std::string const& label, std::vector<std::string> const& w,
                                  std::string const& axiom) {
    std::string msg = "'" + label + "' is not an expansion function (" + axiom + ") at";
    for (auto const& s : w) msg += " " + s;
    return msg;
  }
  std::vector<std::string> witness_;
};

class NotProper : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  explicit UnknownTheorem(std::string const& id) : Error("unknown theorem id '" + id + "'") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::string const& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConflictingFact : public Error {
 public:
  ConflictingFact(std::size_t line, std::string const& what)
      : Error("line " + std::to_string(line) + ": conflicting fact: " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace latmod
