#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lad {

// Concrete-syntax error: byte offset into the input plus what the parser would
// have accepted there.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
      : std::runtime_error(make_message(position, expected, found)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string make_message(std::size_t position, const std::vector<std::string>& expected,
                                  const std::string& found) {
    std::string msg = "syntax error at offset " + std::to_string(position) + ": found " + found;
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += " | ";
        msg += expected[i];
      }
    }
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

// An extensional connective was applied to an operand outside the extensional
// sublanguage.
class LayerError : public std::runtime_error {
 public:
  LayerError(std::size_t position, std::string subformula)
      : std::runtime_error("layer error at offset " + std::to_string(position) +
                           ": extensional connective over non-extensional operand " + subformula),
        position_(position),
        subformula_(std::move(subformula)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& subformula() const noexcept { return subformula_; }

 private:
  std::size_t position_;
  std::string subformula_;
};

class PathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownAtom : public std::runtime_error {
 public:
  explicit UnknownAtom(const std::string& name)
      : std::runtime_error("unknown atom '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class AtomBoundExceeded : public std::runtime_error {
 public:
  AtomBoundExceeded(std::size_t atoms, std::size_t bound)
      : std::runtime_error("enumeration over " + std::to_string(atoms) +
                           " atoms exceeds the atom bound " + std::to_string(bound)),
        atoms_(atoms),
        bound_(bound) {}

  std::size_t atoms() const noexcept { return atoms_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t atoms_;
  std::size_t bound_;
};

// Malformed context or proof file; `line` is 1-based.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lad
