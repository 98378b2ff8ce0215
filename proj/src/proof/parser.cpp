#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lad/errors.hpp"
#include "lad/proof.hpp"
#include "lad/syntax.hpp"

namespace lad {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits off the first whitespace-delimited token.
std::string_view next_token(std::string_view& s) {
  s = trim(s);
  const auto end = s.find_first_of(" \t");
  std::string_view tok = s.substr(0, end);
  s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
  return tok;
}

std::optional<std::size_t> to_number(std::string_view s) {
  std::size_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Citation parse_citation(std::string_view item, std::size_t src) {
  const auto dash = item.find('-');
  if (dash == std::string_view::npos) {
    auto n = to_number(item);
    if (!n || *n == 0) throw FormatError(src, "bad citation '" + std::string(item) + "'");
    return {*n, *n};
  }
  auto a = to_number(item.substr(0, dash));
  std::string_view rest = item.substr(dash + 1);
  if (a && *a > 0 && rest == "safe") return {*a, *a};
  auto b = to_number(rest);
  if (!a || !b || *a == 0 || *b <= *a) throw FormatError(src, "bad citation range '" + std::string(item) + "'");
  return {*a, *b};
}

std::vector<Citation> parse_citations(std::string_view s, std::size_t src) {
  std::vector<Citation> out;
  std::string item;
  auto flush = [&] {
    if (!item.empty()) out.push_back(parse_citation(item, src));
    item.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      item += c;
    }
  }
  flush();
  return out;
}

}  // namespace

std::size_t ProofDoc::depth(std::size_t number) const {
  std::size_t d = 0;
  for (auto s = line(number).subproof; s; s = subproofs[*s].parent) ++d;
  return d;
}

std::vector<Formula> ProofDoc::premises() const {
  std::vector<Formula> out;
  for (const auto& l : lines)
    if (l.just.rule == RuleId::premise && !l.subproof) out.push_back(l.formula);
  return out;
}

Formula ProofDoc::conclusion() const {
  if (lines.empty()) throw std::invalid_argument("empty proof");
  if (lines.back().subproof) throw std::invalid_argument("proof ends inside a subproof");
  return lines.back().formula;
}

ProofDoc parse_proof(std::string_view text) {
  ProofDoc doc;
  std::vector<std::size_t> open;  // stack of subproof indices

  std::size_t src = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++src;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;

    const auto semi = raw.find(';');
    if (semi == std::string_view::npos) throw FormatError(src, "missing ';' before the rule");
    std::string_view left = raw.substr(0, semi);
    std::string_view right = raw.substr(semi + 1);

    const std::size_t number = doc.lines.size() + 1;
    std::string_view probe = left;
    std::string_view tok = next_token(probe);
    if (auto n = to_number(tok)) {
      if (*n != number)
        throw FormatError(src, "line number " + std::to_string(*n) + " out of sequence, expected " +
                                   std::to_string(number));
      left = probe;
    }

    std::vector<SubproofKind> markers;
    for (;;) {
      probe = left;
      tok = next_token(probe);
      if (tok == "*") {
        markers.push_back(SubproofKind::square);
      } else if (tok == "o") {
        markers.push_back(SubproofKind::round);
      } else {
        break;
      }
      left = probe;
    }

    Formula formula = Formula::falsum();
    try {
      formula = parse_formula(trim(left));
    } catch (const std::exception& e) {
      throw FormatError(src, e.what());
    }

    std::string_view rule_text = next_token(right);
    auto rule = parse_rule(rule_text);
    if (!rule) throw FormatError(src, "unknown rule '" + std::string(rule_text) + "'");
    std::vector<Citation> cites = parse_citations(right, src);

    const std::size_t d = markers.size();
    if (*rule == RuleId::hyp) {
      if (d == 0) throw FormatError(src, "a hypothesis needs a subproof marker");
      if (d > open.size() + 1) throw FormatError(src, "subproof opened more than one level deeper");
      open.resize(d - 1);
    } else {
      if (d > open.size())
        throw FormatError(src, "subproof must open with a 'hyp' line");
      open.resize(d);
    }
    for (std::size_t i = 0; i < open.size(); ++i)
      if (doc.subproofs[open[i]].kind != markers[i])
        throw FormatError(src, "subproof marker does not match the enclosing subproof kind");
    if (*rule == RuleId::hyp) {
      Subproof s;
      s.kind = markers.back();
      s.first = number;
      s.last = number;
      if (!open.empty()) s.parent = open.back();
      doc.subproofs.push_back(s);
      open.push_back(doc.subproofs.size() - 1);
    }
    for (std::size_t idx : open) doc.subproofs[idx].last = number;

    ProofLine line;
    line.number = number;
    line.source_line = src;
    line.formula = formula;
    line.just = {*rule, std::move(cites)};
    if (!open.empty()) line.subproof = open.back();
    doc.lines.push_back(std::move(line));
  }
  if (doc.lines.empty()) throw FormatError(src, "proof has no lines");
  return doc;
}

ProofDoc load_proof(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open proof file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof(buf.str());
}

}  // namespace lad
