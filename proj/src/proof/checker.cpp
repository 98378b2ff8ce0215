#include <algorithm>
#include <numeric>

#include "lad/proof.hpp"
#include "lad/syntax.hpp"

namespace lad {

namespace {

// Subproofs open at line `at`, innermost first.
std::vector<std::size_t> open_chain(const ProofDoc& doc, std::size_t at) {
  std::vector<std::size_t> chain;
  for (auto s = doc.line(at).subproof; s; s = doc.subproofs[*s].parent) chain.push_back(*s);
  return chain;
}

bool line_accessible(const ProofDoc& doc, const std::vector<std::size_t>& chain, std::size_t j, std::size_t at) {
  if (j == 0 || j >= at) return false;
  const auto& s = doc.line(j).subproof;
  return !s || std::find(chain.begin(), chain.end(), *s) != chain.end();
}

// A line citation crosses a round boundary when the innermost open round
// subproof at `at` does not contain it.
bool safe_usable(const ProofDoc& doc, const std::vector<std::size_t>& chain, std::size_t j) {
  for (std::size_t s : chain) {
    if (doc.subproofs[s].kind != SubproofKind::round) continue;
    if (j >= doc.subproofs[s].first) return true;
    return is_safe(doc.line(j).formula);
  }
  return true;
}

std::optional<std::size_t> closed_subproof(const ProofDoc& doc, std::size_t at, Citation c) {
  const auto parent = doc.line(at).subproof;
  for (std::size_t i = 0; i < doc.subproofs.size(); ++i) {
    const Subproof& s = doc.subproofs[i];
    if (s.first == c.first && s.last == c.last && s.last < at && s.parent == parent) return i;
  }
  return std::nullopt;
}

struct SubRef {
  Formula hyp;
  Formula concl;
  SubproofKind kind;
};

struct Issue {
  ReasonCode code;
  std::string message;
};

enum class Fit { no, yes, issue };

struct Outcome {
  Fit fit = Fit::no;
  Issue issue{ReasonCode::RULE_MISMATCH, {}};
};

Outcome yes() { return {Fit::yes, {}}; }
Outcome no() { return {}; }
Outcome problem(ReasonCode c, std::string m) { return {Fit::issue, {c, std::move(m)}}; }

bool is(const Formula& f, Kind k) { return f.kind() == k; }

Outcome need_round(const std::vector<SubRef>& s, const char* rule) {
  for (const auto& r : s)
    if (r.kind != SubproofKind::round)
      return problem(ReasonCode::WRONG_SUBPROOF_KIND, std::string(rule) + " needs round subproofs");
  return yes();
}

Outcome need_L(const Formula& f, const char* what) {
  if (!is_L_formula(f))
    return problem(ReasonCode::NOT_L_FORMULA, std::string(what) + " " + to_string(f) + " is not an L-formula");
  return yes();
}

Outcome then(Outcome a, Outcome b) { return a.fit == Fit::yes ? b : a; }

struct Arity {
  std::size_t lines;
  std::size_t subs;
};

Arity arity(RuleId r) {
  switch (r) {
    case RuleId::icap:
    case RuleId::esup:
    case RuleId::esim1:
    case RuleId::iand:
    case RuleId::eimp:
    case RuleId::eneg:
      return {2, 0};
    case RuleId::ecup:
    case RuleId::eor:
      return {1, 2};
    case RuleId::isup:
    case RuleId::isim:
    case RuleId::iimp:
    case RuleId::ineg:
      return {0, 1};
    case RuleId::cem:
    case RuleId::premise:
    case RuleId::hyp:
      return {0, 0};
    default:
      return {1, 0};
  }
}

// One attempt with premises in schema order.
Outcome fit(RuleId rule, const Formula& c, const std::vector<Formula>& l, const std::vector<SubRef>& s) {
  const Formula bot = Formula::falsum();
  switch (rule) {
    case RuleId::icap:
      return is(c, Kind::ExtAnd) && c.lhs() == l[0] && c.rhs() == l[1] ? yes() : no();
    case RuleId::ecap1:
      return is(l[0], Kind::ExtAnd) && l[0].lhs() == c ? yes() : no();
    case RuleId::ecap2:
      return is(l[0], Kind::ExtAnd) && l[0].rhs() == c ? yes() : no();
    case RuleId::icup1:
      return is(c, Kind::ExtOr) && c.lhs() == l[0] ? yes() : no();
    case RuleId::icup2:
      return is(c, Kind::ExtOr) && c.rhs() == l[0] ? yes() : no();
    case RuleId::ecup:
      if (!is(l[0], Kind::ExtOr) || s[0].hyp != l[0].lhs() || s[1].hyp != l[0].rhs() || s[0].concl != c ||
          s[1].concl != c)
        return no();
      return then(need_L(c, "conclusion"), need_round(s, "ecup"));
    case RuleId::isup:
      if (!is(c, Kind::ExtImp) || s[0].hyp != c.lhs() || s[0].concl != c.rhs()) return no();
      return need_round(s, "isup");
    case RuleId::esup:
      return is(l[1], Kind::ExtImp) && l[1].lhs() == l[0] && l[1].rhs() == c ? yes() : no();
    case RuleId::isim:
      if (!is(c, Kind::ExtNeg) || s[0].hyp != c.operand() || s[0].concl != bot) return no();
      return need_round(s, "isim");
    case RuleId::esim1:
      return c == bot && is(l[1], Kind::ExtNeg) && l[1].operand() == l[0] ? yes() : no();
    case RuleId::esim2:
      return is(l[0], Kind::ExtNeg) && is(l[0].operand(), Kind::ExtNeg) && l[0].operand().operand() == c ? yes()
                                                                                                         : no();
    case RuleId::iand:
      return is(c, Kind::IntAnd) && c.lhs() == l[0] && c.rhs() == l[1] ? yes() : no();
    case RuleId::eand1:
      return is(l[0], Kind::IntAnd) && l[0].lhs() == c ? yes() : no();
    case RuleId::eand2:
      return is(l[0], Kind::IntAnd) && l[0].rhs() == c ? yes() : no();
    case RuleId::ior1:
      return is(c, Kind::IntOr) && c.lhs() == l[0] ? yes() : no();
    case RuleId::ior2:
      return is(c, Kind::IntOr) && c.rhs() == l[0] ? yes() : no();
    case RuleId::eor:
      if (!is(l[0], Kind::IntOr) || s[0].hyp != l[0].lhs() || s[1].hyp != l[0].rhs() || s[0].concl != c ||
          s[1].concl != c)
        return no();
      for (const auto& r : s)
        if (r.kind != SubproofKind::square)
          return problem(ReasonCode::WRONG_SUBPROOF_KIND, "eor needs square subproofs");
      return yes();
    case RuleId::iimp:
      if (!is(c, Kind::IntImp) || s[0].hyp != c.lhs() || s[0].concl != c.rhs()) return no();
      return need_round(s, "iimp");
    case RuleId::eimp:
      return is(l[1], Kind::IntImp) && l[1].lhs() == l[0] && l[1].rhs() == c ? yes() : no();
    case RuleId::ineg:
      if (!is(c, Kind::IntNeg) || s[0].hyp != c.operand() || s[0].concl != bot) return no();
      return then(need_L(c.operand(), "negated formula"), need_round(s, "ineg"));
    case RuleId::eneg:
      return c == bot && l[1] == Formula::neg(l[0]) ? yes() : no();
    case RuleId::efq:
      return l[0] == bot ? yes() : no();
    case RuleId::nn1:
      return l[0] == Formula::neg(Formula::neg(c)) ? yes() : no();
    case RuleId::nn2:
      return c == Formula::neg(Formula::neg(l[0])) ? yes() : no();
    case RuleId::nand1:
    case RuleId::nand2:
    case RuleId::nor1:
    case RuleId::nor2: {
      const bool first = rule == RuleId::nand1 || rule == RuleId::nor1;
      const Kind inner = rule == RuleId::nand1 || rule == RuleId::nand2 ? Kind::IntAnd : Kind::IntOr;
      const Kind outer = inner == Kind::IntAnd ? Kind::IntOr : Kind::IntAnd;
      const Formula& from = first ? l[0] : c;
      const Formula& to = first ? c : l[0];
      if (!is(from, Kind::IntNeg) || !is(from.operand(), inner)) return no();
      const Formula& x = from.operand();
      const Formula right = Formula::neg(x.rhs());
      return to == Formula::make(outer, Formula::neg(x.lhs()), &right) ? yes() : no();
    }
    case RuleId::nimp1:
    case RuleId::nimp2: {
      const Formula& from = rule == RuleId::nimp1 ? l[0] : c;
      const Formula& to = rule == RuleId::nimp1 ? c : l[0];
      if (!is(from, Kind::IntNeg) || !is(from.operand(), Kind::IntImp)) return no();
      const Formula& x = from.operand();
      return to == diamond(Formula::conj(x.lhs(), Formula::neg(x.rhs()))) ? yes() : no();
    }
    case RuleId::cem: {
      if (is(c, Kind::IntOr) && is(c.lhs(), Kind::IntImp) && c.lhs().rhs() == bot) {
        const Formula* d = match_diamond(c.rhs());
        if (d && *d == c.lhs().lhs()) return yes();
      }
      return problem(ReasonCode::MACRO_SHAPE, "conclusion is not of the form (f -> _|_) | <>f");
    }
    case RuleId::diaplus: {
      const Formula* d = match_diamond(c);
      std::vector<Formula> ops;
      if (!d || !match_plus_disj(*d, ops))
        return problem(ReasonCode::MACRO_SHAPE, "conclusion is not of the form <>(a1 (+) ... (+) an)");
      for (const auto& a : ops)
        if (!is_L_formula(a)) return need_L(a, "disjunct");
      std::vector<Formula> dia;
      for (const auto& a : ops) dia.push_back(diamond(a));
      return l[0] == int_and_chain(dia) ? yes() : no();
    }
    case RuleId::premise:
    case RuleId::hyp:
      return yes();
  }
  return no();
}

Outcome fit_any_order(RuleId rule, const Formula& c, std::vector<Formula> l, std::vector<SubRef> s) {
  std::vector<std::size_t> li(l.size()), si(s.size());
  std::iota(li.begin(), li.end(), 0);
  Outcome best;
  do {
    std::iota(si.begin(), si.end(), 0);
    do {
      std::vector<Formula> lp;
      std::vector<SubRef> sp;
      for (auto i : li) lp.push_back(l[i]);
      for (auto i : si) sp.push_back(s[i]);
      Outcome o = fit(rule, c, lp, sp);
      if (o.fit == Fit::yes) return o;
      if (o.fit == Fit::issue && best.fit == Fit::no) best = o;
    } while (std::next_permutation(si.begin(), si.end()));
  } while (std::next_permutation(li.begin(), li.end()));
  return best;
}

void check_line(const ProofDoc& doc, const ProofLine& line, std::vector<Violation>& out) {
  const std::size_t n = line.number;
  const RuleId rule = line.just.rule;
  auto report = [&](ReasonCode c, std::string m) { out.push_back({n, c, std::move(m)}); };

  if (rule == RuleId::premise || rule == RuleId::hyp) {
    if (rule == RuleId::premise && line.subproof) report(ReasonCode::RULE_MISMATCH, "premise inside a subproof");
    if (rule == RuleId::hyp && (!line.subproof || doc.subproofs[*line.subproof].first != n))
      report(ReasonCode::RULE_MISMATCH, "hypothesis must open a subproof");
    if (!line.just.cites.empty()) report(ReasonCode::RULE_MISMATCH, std::string(rule_name(rule)) + " cites nothing");
    return;
  }

  const auto chain = open_chain(doc, n);
  std::vector<Formula> lines;
  std::vector<SubRef> subs;
  bool scope_ok = true;
  for (const Citation& c : line.just.cites) {
    if (!c.is_range() && line_accessible(doc, chain, c.first, n)) {
      const ProofLine& cited = doc.line(c.first);
      if (!safe_usable(doc, chain, c.first))
        report(ReasonCode::UNSAFE_CITATION, "line " + std::to_string(c.first) + " (" + to_string(cited.formula) +
                                                ") is unsafe and lies outside the round subproof");
      lines.push_back(cited.formula);
      continue;
    }
    if (auto s = closed_subproof(doc, n, c)) {
      const Subproof& sp = doc.subproofs[*s];
      subs.push_back({doc.line(sp.first).formula, doc.line(sp.last).formula, sp.kind});
      continue;
    }
    const std::string pos =
        c.is_range() ? std::to_string(c.first) + "-" + std::to_string(c.last) : std::to_string(c.first);
    report(ReasonCode::CITATION_SCOPE, pos + " is not accessible from line " + std::to_string(n));
    scope_ok = false;
  }
  if (!scope_ok) return;

  const Arity a = arity(rule);
  if (lines.size() != a.lines || subs.size() != a.subs) {
    report(ReasonCode::RULE_MISMATCH, std::string(rule_name(rule)) + " expects " + std::to_string(a.lines) +
                                          " line(s) and " + std::to_string(a.subs) + " subproof(s), got " +
                                          std::to_string(lines.size()) + " and " + std::to_string(subs.size()));
    return;
  }
  const Outcome o = fit_any_order(rule, line.formula, lines, subs);
  if (o.fit == Fit::yes) return;
  if (o.fit == Fit::issue) {
    report(o.issue.code, o.issue.message);
    return;
  }
  report(ReasonCode::RULE_MISMATCH, to_string(line.formula) + " does not follow by " + std::string(rule_name(rule)));
}

}  // namespace

std::vector<AccessibleItem> accessible(const ProofDoc& doc, std::size_t at) {
  std::vector<AccessibleItem> out;
  if (at == 0 || at > doc.lines.size()) return out;
  const auto chain = open_chain(doc, at);
  for (std::size_t j = 1; j < at; ++j) {
    if (line_accessible(doc, chain, j, at))
      out.push_back({{j, j}, doc.line(j).formula, false, safe_usable(doc, chain, j)});
    for (const Subproof& s : doc.subproofs)
      if (s.first == j && s.last < at && s.parent == doc.line(at).subproof)
        out.push_back({{s.first, s.last}, doc.line(s.last).formula, true, true});
  }
  return out;
}

Verdict check(const ProofDoc& doc) {
  Verdict v;
  for (const auto& line : doc.lines) check_line(doc, line, v.violations);
  v.accepted = v.violations.empty();
  return v;
}

bool verify_sound(const ProofDoc& doc, Variant v, const EnumerationOptions& opts) {
  return entails(doc.premises(), doc.conclusion(), v, opts);
}

}  // namespace lad
