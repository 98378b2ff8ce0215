#include "lad/transform.hpp"

#include <algorithm>

#include "lad/errors.hpp"

namespace lad {

std::string_view variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::gauker: return "gauker";
    case Variant::nelson: return "nelson";
    case Variant::connexive: return "connexive";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (Variant v : kAllVariants)
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

Formula e_translate(const Formula& f) {
  if (f.is_extensional()) return f;
  switch (f.kind()) {
    case Kind::IntNeg: return Formula::ext_neg(e_translate(f.operand()));
    case Kind::IntAnd: return Formula::ext_and(e_translate(f.lhs()), e_translate(f.rhs()));
    case Kind::IntOr: return Formula::ext_or(e_translate(f.lhs()), e_translate(f.rhs()));
    case Kind::IntImp: return Formula::ext_imp(e_translate(f.lhs()), e_translate(f.rhs()));
    default: break;
  }
  // Extensional node over intensional material cannot be constructed.
  throw std::logic_error("e_translate: unreachable");
}

const Formula& subformula_at(const Formula& f, const OccurrencePath& path) {
  const Formula* cur = &f;
  for (std::size_t step : path) {
    if (step >= cur->arity())
      throw PathError("occurrence path leaves the formula at child " + std::to_string(step));
    cur = &cur->child(step);
  }
  return *cur;
}

namespace {

Formula substitute_from(const Formula& f, const OccurrencePath& path, std::size_t depth,
                        const Formula& replacement) {
  if (depth == path.size()) return replacement;
  const std::size_t step = path[depth];
  if (step >= f.arity())
    throw PathError("occurrence path leaves the formula at child " + std::to_string(step));
  Formula replaced = substitute_from(f.child(step), path, depth + 1, replacement);
  if (f.arity() == 1) return Formula::make(f.kind(), replaced);
  if (step == 0) return Formula::make(f.kind(), replaced, &f.rhs());
  return Formula::make(f.kind(), f.lhs(), &replaced);
}

void collect_paths(const Formula& f, OccurrencePath& prefix, std::vector<OccurrencePath>& out) {
  out.push_back(prefix);
  for (std::size_t i = 0; i < f.arity(); ++i) {
    prefix.push_back(i);
    collect_paths(f.child(i), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Formula substitute(const Formula& f, const OccurrencePath& path, const Formula& replacement) {
  return substitute_from(f, path, 0, replacement);
}

std::vector<OccurrencePath> occurrence_paths(const Formula& f) {
  std::vector<OccurrencePath> out;
  OccurrencePath prefix;
  collect_paths(f, prefix, out);
  return out;
}

Formula weak_negate(const Formula& f) {
  // -a = <>!a, -!a = <>a for extensional a.
  if (f.is_extensional()) return diamond(Formula::neg(f));
  switch (f.kind()) {
    case Kind::IntImp:
      return diamond(Formula::conj(f.lhs(), weak_negate(f.rhs())));
    case Kind::IntAnd:
      return Formula::disj(weak_negate(f.lhs()), weak_negate(f.rhs()));
    case Kind::IntOr:
      return Formula::conj(weak_negate(f.lhs()), weak_negate(f.rhs()));
    case Kind::IntNeg:
      break;
    default:
      throw std::logic_error("weak_negate: unreachable");
  }
  const Formula& g = f.operand();
  if (g.is_extensional()) return diamond(g);
  switch (g.kind()) {
    case Kind::IntNeg:
      return weak_negate(g.operand());
    case Kind::IntImp:
      return Formula::imp(g.lhs(), weak_negate(Formula::neg(g.rhs())));
    case Kind::IntAnd:
      return Formula::conj(weak_negate(Formula::neg(g.lhs())), weak_negate(Formula::neg(g.rhs())));
    case Kind::IntOr:
      return Formula::disj(weak_negate(Formula::neg(g.lhs())), weak_negate(Formula::neg(g.rhs())));
    default:
      throw std::logic_error("weak_negate: unreachable");
  }
}

namespace {

Formula nnf_negated(const Formula& f, Variant v);

Formula nnf_positive(const Formula& f, Variant v) {
  if (f.is_extensional()) return f;
  switch (f.kind()) {
    case Kind::IntNeg: return nnf_negated(f.operand(), v);
    case Kind::IntAnd: return Formula::conj(nnf_positive(f.lhs(), v), nnf_positive(f.rhs(), v));
    case Kind::IntOr: return Formula::disj(nnf_positive(f.lhs(), v), nnf_positive(f.rhs(), v));
    case Kind::IntImp: return Formula::imp(nnf_positive(f.lhs(), v), nnf_positive(f.rhs(), v));
    default: throw std::logic_error("nnf: unreachable");
  }
}

// Formula asserted exactly where `f` is denied.
Formula nnf_negated(const Formula& f, Variant v) {
  if (f.is_extensional()) return Formula::ext_neg(f);
  switch (f.kind()) {
    case Kind::IntNeg: return nnf_positive(f.operand(), v);
    case Kind::IntAnd: return Formula::disj(nnf_negated(f.lhs(), v), nnf_negated(f.rhs(), v));
    case Kind::IntOr: return Formula::conj(nnf_negated(f.lhs(), v), nnf_negated(f.rhs(), v));
    case Kind::IntImp: {
      Formula a = nnf_positive(f.lhs(), v);
      Formula b = nnf_negated(f.rhs(), v);
      switch (v) {
        case Variant::gauker: return diamond(Formula::conj(std::move(a), std::move(b)));
        case Variant::nelson: return Formula::conj(std::move(a), std::move(b));
        case Variant::connexive: return Formula::imp(std::move(a), std::move(b));
      }
      break;
    }
    default:
      break;
  }
  throw std::logic_error("nnf: unreachable");
}

}  // namespace

Formula nnf(const Formula& f, Variant variant) { return nnf_positive(f, variant); }

Formula sigma(const World& w) {
  if (w.atoms().empty()) throw EmptyInput("world over an empty atom set");
  std::vector<Formula> literals;
  for (std::size_t i = 0; i < w.atoms().size(); ++i) {
    Formula a = Formula::atom(w.atoms()[i]);
    literals.push_back(w.value(i) ? a : Formula::ext_neg(a));
  }
  return ext_and_chain(literals);
}

Formula mu(const Context& c) {
  if (c.atoms().empty()) throw EmptyInput("context over an empty atom set");
  std::vector<Formula> worlds;
  for (std::size_t i = c.size(); i-- > 0;) worlds.push_back(sigma(c.world(i)));
  return plus_disj(worlds);
}

Formula xi(const std::vector<Context>& contexts) {
  if (contexts.empty()) throw EmptyInput("xi needs at least one context");
  const AtomList& atoms = contexts.front().atoms();
  std::vector<Formula> parts;
  for (const auto& c : contexts) {
    if (c.atoms() != atoms) throw std::invalid_argument("xi: contexts over different atom sets");
    parts.push_back(mu(c));
  }
  return int_or_chain(parts);
}

}  // namespace lad
