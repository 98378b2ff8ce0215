#include <algorithm>
#include <cctype>
#include <utility>

#include "lad/proof.hpp"

namespace lad {

namespace {

struct RuleSpelling {
  RuleId id;
  std::string_view name;
  std::vector<std::string_view> aliases;
};

const std::vector<RuleSpelling>& rule_table() {
  static const std::vector<RuleSpelling> table = {
      {RuleId::premise, "premise", {"prem"}},
      {RuleId::hyp, "hyp", {"hypothesis"}},
      {RuleId::icap, "icap", {"i/\\", "i∩"}},
      {RuleId::ecap1, "ecap1", {"e/\\1", "e∩1", "e∩₁"}},
      {RuleId::ecap2, "ecap2", {"e/\\2", "e∩2", "e∩₂"}},
      {RuleId::icup1, "icup1", {"i\\/1", "i∪1", "i∪₁"}},
      {RuleId::icup2, "icup2", {"i\\/2", "i∪2", "i∪₂"}},
      {RuleId::ecup, "ecup", {"e\\/", "e∪"}},
      {RuleId::isup, "isup", {"i=>", "i⊃"}},
      {RuleId::esup, "esup", {"e=>", "e⊃"}},
      {RuleId::isim, "isim", {"i~", "i∼"}},
      {RuleId::esim1, "esim1", {"e~1", "e∼1", "e∼₁"}},
      {RuleId::esim2, "esim2", {"e~2", "e∼2", "e∼₂"}},
      {RuleId::iand, "iand", {"i&", "i∧"}},
      {RuleId::eand1, "eand1", {"e&1", "e∧1", "e∧₁"}},
      {RuleId::eand2, "eand2", {"e&2", "e∧2", "e∧₂"}},
      {RuleId::ior1, "ior1", {"i|1", "i∨1", "i∨₁"}},
      {RuleId::ior2, "ior2", {"i|2", "i∨2", "i∨₂"}},
      {RuleId::eor, "eor", {"e|", "e∨"}},
      {RuleId::iimp, "iimp", {"i->", "i→"}},
      {RuleId::eimp, "eimp", {"e->", "e→"}},
      {RuleId::ineg, "ineg", {"i!", "i¬"}},
      {RuleId::eneg, "eneg", {"e!", "e¬"}},
      {RuleId::efq, "efq", {}},
      {RuleId::nn1, "nn1", {"!!1", "¬¬1", "¬¬₁"}},
      {RuleId::nn2, "nn2", {"!!2", "¬¬2", "¬¬₂"}},
      {RuleId::nand1, "nand1", {"!&1", "¬∧1", "¬∧₁"}},
      {RuleId::nand2, "nand2", {"!&2", "¬∧2", "¬∧₂"}},
      {RuleId::nor1, "nor1", {"!|1", "¬∨1", "¬∨₁"}},
      {RuleId::nor2, "nor2", {"!|2", "¬∨2", "¬∨₂"}},
      {RuleId::nimp1, "nimp1", {"!->1", "¬→1", "¬→₁"}},
      {RuleId::nimp2, "nimp2", {"!->2", "¬→2", "¬→₂"}},
      {RuleId::cem, "cem", {}},
      {RuleId::diaplus, "diaplus", {"<>(+)", "◇⊕"}},
  };
  return table;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out)
    if (static_cast<unsigned char>(c) < 0x80) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view rule_name(RuleId r) noexcept {
  for (const auto& s : rule_table())
    if (s.id == r) return s.name;
  return "?";
}

std::optional<RuleId> parse_rule(std::string_view name) {
  // "(e->)" as written in printed derivations.
  if (name.size() >= 2 && name.front() == '(' && name.back() == ')') name = name.substr(1, name.size() - 2);
  const std::string key = lower_ascii(name);
  for (const auto& s : rule_table()) {
    if (key == s.name) return s.id;
    for (auto a : s.aliases)
      if (key == lower_ascii(a)) return s.id;
  }
  return std::nullopt;
}

std::string_view reason_name(ReasonCode c) noexcept {
  switch (c) {
    case ReasonCode::RULE_MISMATCH: return "RULE_MISMATCH";
    case ReasonCode::NOT_L_FORMULA: return "NOT_L_FORMULA";
    case ReasonCode::WRONG_SUBPROOF_KIND: return "WRONG_SUBPROOF_KIND";
    case ReasonCode::UNSAFE_CITATION: return "UNSAFE_CITATION";
    case ReasonCode::CITATION_SCOPE: return "CITATION_SCOPE";
    case ReasonCode::MACRO_SHAPE: return "MACRO_SHAPE";
  }
  return "?";
}

}  // namespace lad
