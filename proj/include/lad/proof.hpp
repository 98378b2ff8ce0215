#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lad/entailment.hpp"
#include "lad/formula.hpp"
#include "lad/variant.hpp"

namespace lad {

enum class RuleId {
  premise,
  hyp,
  // extensional
  icap,
  ecap1,
  ecap2,
  icup1,
  icup2,
  ecup,
  isup,
  esup,
  isim,
  esim1,
  esim2,
  // intensional
  iand,
  eand1,
  eand2,
  ior1,
  ior2,
  eor,
  iimp,
  eimp,
  ineg,
  eneg,
  efq,
  // negation interaction and extras
  nn1,
  nn2,
  nand1,
  nand2,
  nor1,
  nor2,
  nimp1,
  nimp2,
  cem,
  diaplus,
};

std::string_view rule_name(RuleId r) noexcept;
// Accepts the ASCII names ("eand1") and symbolic aliases ("e&1", "e∧1").
std::optional<RuleId> parse_rule(std::string_view name);

enum class SubproofKind { square, round };

// A single line number (first == last) or a subproof range "first-last".
struct Citation {
  std::size_t first = 0;
  std::size_t last = 0;
  bool is_range() const noexcept { return first != last; }
  bool operator==(const Citation&) const = default;
};

struct Justification {
  RuleId rule = RuleId::premise;
  std::vector<Citation> cites;
};

struct ProofLine {
  std::size_t number = 0;       // 1-based, pre-order
  std::size_t source_line = 0;  // line in the proof file, 0 if built in code
  Formula formula = Formula::falsum();
  Justification just;
  // Innermost enclosing subproof (index into ProofDoc::subproofs).
  std::optional<std::size_t> subproof;
};

struct Subproof {
  SubproofKind kind = SubproofKind::square;
  std::size_t first = 0;  // hypothesis line
  std::size_t last = 0;   // conclusion line
  std::optional<std::size_t> parent;
};

// Fitch-style derivation. Lines are stored flat in pre-order; nesting lives in
// the subproof table, with subproofs ordered by their opening line.
struct ProofDoc {
  std::vector<ProofLine> lines;
  std::vector<Subproof> subproofs;

  const ProofLine& line(std::size_t number) const { return lines.at(number - 1); }
  std::size_t depth(std::size_t number) const;
  // Formulas of the premise lines at the top level.
  std::vector<Formula> premises() const;
  // Formula of the last line; throws std::invalid_argument when that line is
  // inside a subproof or the document is empty.
  Formula conclusion() const;
};

// Proof file format, one derivation line per text line:
//
//   [n] <markers> <formula> ; <rule> <citations>
//
// Markers are '*' (square) or 'o' (round), one per subproof depth. A `hyp`
// line opens a subproof at its depth, closing any sibling still open. The
// optional leading line number must match the pre-order count. Citations are
// comma-separated integers and ranges "a-b"; an "n-safe" citation is read as
// n. '#' starts a comment. Throws FormatError carrying the text line.
ProofDoc parse_proof(std::string_view text);
ProofDoc load_proof(const std::string& path);

struct AccessibleItem {
  Citation position;
  Formula formula;          // the line's formula, or a subproof's conclusion
  bool is_subproof = false;
  bool safe_usable = true;  // false for unsafe lines across a round boundary
};

// Lines and closed subproofs citable from line `at`.
std::vector<AccessibleItem> accessible(const ProofDoc& doc, std::size_t at);

enum class ReasonCode {
  RULE_MISMATCH,
  NOT_L_FORMULA,
  WRONG_SUBPROOF_KIND,
  UNSAFE_CITATION,
  CITATION_SCOPE,
  MACRO_SHAPE,
};

std::string_view reason_name(ReasonCode c) noexcept;

struct Violation {
  std::size_t line = 0;
  ReasonCode code = ReasonCode::RULE_MISMATCH;
  std::string message;
};

struct Verdict {
  bool accepted = true;
  std::vector<Violation> violations;
};

Verdict check(const ProofDoc& doc);

// premises |= conclusion by enumeration.
bool verify_sound(const ProofDoc& doc, Variant v = Variant::gauker, const EnumerationOptions& opts = {});

}  // namespace lad
