#include "lad/syntax.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "lad/errors.hpp"

namespace lad {

bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

namespace {

enum class Tok {
  Ident,
  Falsum,
  Tilde,
  Bang,
  Diamond,
  Cap,
  Amp,
  Cup,
  Bar,
  Plus,
  Sup,
  Arrow,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

// ASCII spellings first, then Unicode aliases. Longest match wins because
// multi-character spellings are listed before their prefixes.
struct Spelling {
  std::string_view text;
  Tok kind;
};

constexpr Spelling kSpellings[] = {
    {"_|_", Tok::Falsum},  {"(+)", Tok::Plus},  {"<>", Tok::Diamond}, {"/\\", Tok::Cap},
    {"\\/", Tok::Cup},     {"=>", Tok::Sup},    {"->", Tok::Arrow},   {"~", Tok::Tilde},
    {"!", Tok::Bang},      {"&", Tok::Amp},     {"|", Tok::Bar},      {"(", Tok::LParen},
    {")", Tok::RParen},    {"⊥", Tok::Falsum}, {"⊕", Tok::Plus}, {"◇", Tok::Diamond},
    {"◊", Tok::Diamond}, {"∩", Tok::Cap}, {"∪", Tok::Cup}, {"⊃", Tok::Sup},
    {"→", Tok::Arrow}, {"∼", Tok::Tilde}, {"¬", Tok::Bang}, {"∧", Tok::Amp},
    {"∨", Tok::Bar},
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, i, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& s : kSpellings) {
      if (text.substr(i, s.text.size()) == s.text) {
        out.push_back({s.kind, i, std::string(s.text)});
        i += s.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw SyntaxError(i, {"atom", "connective", "'('"},
                        "unexpected character '" + std::string(1, text[i]) + "'");
    }
  }
  out.push_back({Tok::End, text.size(), ""});
  return out;
}

struct Parsed {
  Formula f;
  std::size_t pos;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse() {
    Parsed p = parse_imp();
    if (peek().kind != Tok::End) fail({"binary connective", "end of input"});
    return p.f;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.pos, std::move(expected), found);
  }

  static void check_layer(const Parsed& operand) {
    if (!operand.f.is_extensional()) throw LayerError(operand.pos, to_string(operand.f));
  }

  static Formula combine(Tok op, const Parsed& l, const Parsed& r) {
    switch (op) {
      case Tok::Cap:
      case Tok::Cup:
      case Tok::Sup:
        check_layer(l);
        check_layer(r);
        break;
      default:
        break;
    }
    switch (op) {
      case Tok::Cap: return Formula::ext_and(l.f, r.f);
      case Tok::Cup: return Formula::ext_or(l.f, r.f);
      case Tok::Sup: return Formula::ext_imp(l.f, r.f);
      case Tok::Amp: return Formula::conj(l.f, r.f);
      case Tok::Bar: return Formula::disj(l.f, r.f);
      case Tok::Arrow: return Formula::imp(l.f, r.f);
      default: throw std::logic_error("combine: not a binary operator");
    }
  }

  Parsed parse_imp() {
    Parsed left = parse_or();
    Tok op = peek().kind;
    if (op != Tok::Sup && op != Tok::Arrow) return left;
    next();
    Parsed right = parse_imp();
    return {combine(op, left, right), left.pos};
  }

  static Parsed finish_plus(std::vector<Parsed>& group) {
    for (const auto& g : group) check_layer(g);
    std::vector<Formula> fs;
    fs.reserve(group.size());
    for (const auto& g : group) fs.push_back(g.f);
    Parsed out{plus_disj(fs), group.front().pos};
    group.clear();
    return out;
  }

  Parsed parse_or() {
    std::vector<Parsed> operands{parse_and()};
    std::vector<Tok> ops;
    while (peek().kind == Tok::Cup || peek().kind == Tok::Bar || peek().kind == Tok::Plus) {
      ops.push_back(next().kind);
      operands.push_back(parse_and());
    }
    // Fold from the right; consecutive (+) operators collect one n-ary group.
    Parsed acc = operands.back();
    std::vector<Parsed> group;
    for (std::size_t i = ops.size(); i-- > 0;) {
      const Parsed& left = operands[i];
      if (ops[i] == Tok::Plus) {
        if (group.empty()) group.push_back(acc);
        group.insert(group.begin(), left);
        continue;
      }
      if (!group.empty()) acc = finish_plus(group);
      acc = {combine(ops[i], left, acc), left.pos};
    }
    if (!group.empty()) acc = finish_plus(group);
    return acc;
  }

  Parsed parse_and() {
    Parsed left = parse_prefix();
    Tok op = peek().kind;
    if (op != Tok::Cap && op != Tok::Amp) return left;
    next();
    Parsed right = parse_and();
    return {combine(op, left, right), left.pos};
  }

  Parsed parse_prefix() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde: {
        std::size_t pos = next().pos;
        Parsed operand = parse_prefix();
        check_layer(operand);
        return {Formula::ext_neg(operand.f), pos};
      }
      case Tok::Bang: {
        std::size_t pos = next().pos;
        return {Formula::neg(parse_prefix().f), pos};
      }
      case Tok::Diamond: {
        std::size_t pos = next().pos;
        return {diamond(parse_prefix().f), pos};
      }
      default:
        return parse_primary();
    }
  }

  Parsed parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        next();
        return {Formula::atom(t.text), t.pos};
      }
      case Tok::Falsum:
        next();
        return {Formula::falsum(), t.pos};
      case Tok::LParen: {
        std::size_t pos = next().pos;
        Parsed inner = parse_imp();
        if (peek().kind != Tok::RParen) fail({"')'", "binary connective"});
        next();
        return {inner.f, pos};
      }
      default:
        fail({"atom", "'_|_'", "'('", "'~'", "'!'", "'<>'"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

// --- printing ---------------------------------------------------------------

constexpr int kPrefixLevel = 0;
constexpr int kAndLevel = 1;
constexpr int kOrLevel = 2;
constexpr int kImpLevel = 3;

int level_of(Kind k) {
  switch (k) {
    case Kind::ExtAnd:
    case Kind::IntAnd:
      return kAndLevel;
    case Kind::ExtOr:
    case Kind::IntOr:
      return kOrLevel;
    case Kind::ExtImp:
    case Kind::IntImp:
      return kImpLevel;
    default:
      return kPrefixLevel;
  }
}

const char* spelling(Kind k) {
  switch (k) {
    case Kind::ExtNeg: return "~";
    case Kind::ExtAnd: return " /\\ ";
    case Kind::ExtOr: return " \\/ ";
    case Kind::ExtImp: return " => ";
    case Kind::IntNeg: return "!";
    case Kind::IntAnd: return " & ";
    case Kind::IntOr: return " | ";
    case Kind::IntImp: return " -> ";
    default: return "";
  }
}

struct Printed {
  std::string text;
  int level;
};

class Printer {
 public:
  explicit Printer(PrintMode mode) : mode_(mode) {}

  Printed run(const Formula& f) const {
    if (mode_ != PrintMode::full) {
      if (const Formula* arg = match_diamond(f)) return {"<>" + wrap(run(*arg), kPrefixLevel), kPrefixLevel};
      std::vector<Formula> ops;
      if (mode_ == PrintMode::macro && match_plus_disj(f, ops) && ops.size() >= 2) {
        std::string out;
        for (std::size_t i = 0; i < ops.size(); ++i) {
          bool last = i + 1 == ops.size();
          Printed p = run(ops[i]);
          if (i) out += " (+) ";
          out += last ? wrap(p, kOrLevel) : wrap(p, kOrLevel - 1);
        }
        return {out, kOrLevel};
      }
      // The expansion of a (+) chain keeps its two conjuncts visibly apart.
      if (mode_ == PrintMode::diamond && match_plus_disj(f, ops) && ops.size() >= 2) {
        return {"(" + run(f.lhs()).text + ") & (" + run(f.rhs()).text + ")", kAndLevel};
      }
    }
    switch (f.kind()) {
      case Kind::Atom:
        return {f.name(), kPrefixLevel};
      case Kind::Falsum:
        return {"_|_", kPrefixLevel};
      case Kind::ExtNeg:
      case Kind::IntNeg:
        return {spelling(f.kind()) + wrap(run(f.operand()), kPrefixLevel), kPrefixLevel};
      default: {
        int lvl = level_of(f.kind());
        std::string l = wrap(run(f.lhs()), lvl - 1);
        std::string r = wrap(run(f.rhs()), lvl);
        return {l + spelling(f.kind()) + r, lvl};
      }
    }
  }

 private:
  // Parenthesise when the operand binds looser than `max_level` allows.
  static std::string wrap(const Printed& p, int max_level) {
    return p.level > max_level ? "(" + p.text + ")" : p.text;
  }

  PrintMode mode_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print(const Formula& f, PrintMode mode) { return Printer(mode).run(f).text; }

}  // namespace lad
