#pragma once

#include <string>
#include <string_view>

#include "lad/formula.hpp"

namespace lad {

// Concrete syntax
//
//   extensional   ~  /\  \/  =>
//   intensional   !  &   |   ->
//   macros        <> (diamond)   (+) (pragmatic disjunction)
//   falsum        _|_
//
// Precedence, tightest first: prefixes (~ ! <>), then /\ and &, then \/ | and
// (+), then => and ->. All binary levels associate to the right; a run of
// (+) forms one n-ary pragmatic disjunction. The corresponding Unicode glyphs
// (∼ ∩ ∪ ⊃ ¬ ∧ ∨ → ◇ ⊕ ⊥) are accepted as aliases.
//
// Throws SyntaxError, or LayerError when an extensional connective would be
// applied to an intensional operand.
Formula parse_formula(std::string_view text);

enum class PrintMode {
  full,   // every node spelled out
  macro,  // <> and (+) patterns re-sugared
  diamond,  // only <> re-sugared; (+) spelled out
};

std::string print(const Formula& f, PrintMode mode = PrintMode::macro);

inline std::string to_string(const Formula& f) { return print(f, PrintMode::macro); }

bool is_identifier(std::string_view s) noexcept;

}  // namespace lad
