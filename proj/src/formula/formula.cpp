#include "lad/formula.hpp"

#include <cassert>
#include <stdexcept>

#include "lad/errors.hpp"
#include "lad/syntax.hpp"

namespace lad {

bool is_extensional(Kind k) noexcept {
  switch (k) {
    case Kind::Atom:
    case Kind::Falsum:
    case Kind::ExtNeg:
    case Kind::ExtAnd:
    case Kind::ExtOr:
    case Kind::ExtImp:
      return true;
    default:
      return false;
  }
}

bool is_intensional(Kind k) noexcept { return !is_extensional(k); }

bool is_unary(Kind k) noexcept { return k == Kind::ExtNeg || k == Kind::IntNeg; }

bool is_binary(Kind k) noexcept {
  return k != Kind::Atom && k != Kind::Falsum && !is_unary(k);
}

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> args;
  bool extensional;
  std::size_t size;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::build(Kind kind, std::string name, std::vector<Formula> args) {
  bool ext = lad::is_extensional(kind);
  std::size_t size = 1;
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  if (kind == Kind::Atom) h = mix(h, std::hash<std::string>{}(name));
  for (const auto& a : args) {
    ext = ext && a.is_extensional();
    size += a.size();
    h = mix(h, a.hash());
  }
  auto node = std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(args), ext, size, h});
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  return build(Kind::Atom, std::move(name), {});
}

Formula Formula::falsum() {
  static const Formula f = build(Kind::Falsum, {}, {});
  return f;
}

namespace {

void require_extensional(const Formula& f) {
  if (!f.is_extensional()) throw LayerError(0, to_string(f));
}

}  // namespace

Formula Formula::ext_neg(Formula a) {
  require_extensional(a);
  return build(Kind::ExtNeg, {}, {std::move(a)});
}

Formula Formula::ext_and(Formula a, Formula b) {
  require_extensional(a);
  require_extensional(b);
  return build(Kind::ExtAnd, {}, {std::move(a), std::move(b)});
}

Formula Formula::ext_or(Formula a, Formula b) {
  require_extensional(a);
  require_extensional(b);
  return build(Kind::ExtOr, {}, {std::move(a), std::move(b)});
}

Formula Formula::ext_imp(Formula a, Formula b) {
  require_extensional(a);
  require_extensional(b);
  return build(Kind::ExtImp, {}, {std::move(a), std::move(b)});
}

Formula Formula::neg(Formula a) { return build(Kind::IntNeg, {}, {std::move(a)}); }

Formula Formula::conj(Formula a, Formula b) {
  return build(Kind::IntAnd, {}, {std::move(a), std::move(b)});
}

Formula Formula::disj(Formula a, Formula b) {
  return build(Kind::IntOr, {}, {std::move(a), std::move(b)});
}

Formula Formula::imp(Formula a, Formula b) {
  return build(Kind::IntImp, {}, {std::move(a), std::move(b)});
}

Formula Formula::make(Kind kind, Formula a, const Formula* b) {
  if (is_binary(kind) && b == nullptr) throw std::invalid_argument("binary connective needs two operands");
  switch (kind) {
    case Kind::ExtNeg: return ext_neg(std::move(a));
    case Kind::IntNeg: return neg(std::move(a));
    case Kind::ExtAnd: return ext_and(std::move(a), *b);
    case Kind::ExtOr: return ext_or(std::move(a), *b);
    case Kind::ExtImp: return ext_imp(std::move(a), *b);
    case Kind::IntAnd: return conj(std::move(a), *b);
    case Kind::IntOr: return disj(std::move(a), *b);
    case Kind::IntImp: return imp(std::move(a), *b);
    default: throw std::invalid_argument("Formula::make: not a connective");
  }
}

Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const {
  assert(kind() == Kind::Atom);
  return node_->name;
}

const Formula& Formula::operand() const {
  assert(is_unary(kind()));
  return node_->args[0];
}

const Formula& Formula::lhs() const {
  assert(is_binary(kind()));
  return node_->args[0];
}

const Formula& Formula::rhs() const {
  assert(is_binary(kind()));
  return node_->args[1];
}

std::size_t Formula::arity() const noexcept { return node_->args.size(); }

const Formula& Formula::child(std::size_t i) const { return node_->args.at(i); }

bool Formula::is_extensional() const noexcept { return node_->extensional; }

std::size_t Formula::size() const noexcept { return node_->size; }

std::size_t Formula::hash() const noexcept { return node_->hash; }

bool Formula::operator==(const Formula& other) const noexcept {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
  if (a.kind == Kind::Atom) return a.name == b.name;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(a.args[i] == b.args[i])) return false;
  return true;
}

bool structural_less(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.kind() == Kind::Atom) return a.name() < b.name();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.child(i) == b.child(i)) continue;
    return structural_less(a.child(i), b.child(i));
  }
  return false;
}

bool is_L_formula(const Formula& f) noexcept { return f.is_extensional(); }

namespace {

bool has_imp(const Formula& f) {
  if (f.kind() == Kind::IntImp) return true;
  if (f.is_extensional()) return false;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (has_imp(f.child(i))) return true;
  return false;
}

bool has_imp_under_neg(const Formula& f) {
  if (f.is_extensional()) return false;
  if (f.kind() == Kind::IntNeg) return has_imp(f.operand());
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (has_imp_under_neg(f.child(i))) return true;
  return false;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Kind::Atom) {
    out.insert(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.child(i), out);
}

}  // namespace

bool is_safe(const Formula& f) { return f.kind() == Kind::IntImp || !has_imp_under_neg(f); }

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::string> atoms_of(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) collect_atoms(f, out);
  return out;
}

Formula diamond(Formula f) { return Formula::neg(Formula::imp(std::move(f), Formula::falsum())); }

namespace {

template <typename Join>
Formula right_chain(const std::vector<Formula>& fs, Join join) {
  if (fs.empty()) throw EmptyInput("empty chain");
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = join(fs[i], acc);
  return acc;
}

}  // namespace

Formula ext_and_chain(const std::vector<Formula>& fs) { return right_chain(fs, Formula::ext_and); }
Formula ext_or_chain(const std::vector<Formula>& fs) { return right_chain(fs, Formula::ext_or); }
Formula int_and_chain(const std::vector<Formula>& fs) { return right_chain(fs, Formula::conj); }
Formula int_or_chain(const std::vector<Formula>& fs) { return right_chain(fs, Formula::disj); }

Formula plus_disj(const std::vector<Formula>& operands) {
  if (operands.empty()) throw EmptyInput("pragmatic disjunction needs at least one operand");
  std::vector<Formula> possible;
  possible.reserve(operands.size());
  for (const auto& a : operands) possible.push_back(diamond(a));
  return Formula::conj(ext_or_chain(operands), int_and_chain(possible));
}

const Formula* match_diamond(const Formula& f) noexcept {
  if (f.kind() != Kind::IntNeg) return nullptr;
  const Formula& inner = f.operand();
  if (inner.kind() != Kind::IntImp || inner.rhs().kind() != Kind::Falsum) return nullptr;
  return &inner.lhs();
}

bool match_plus_disj(const Formula& f, std::vector<Formula>& operands) {
  if (f.kind() != Kind::IntAnd) return false;
  // The <>-chain fixes n; the \/-chain is then split into exactly n pieces.
  std::vector<Formula> args;
  const Formula* spine = &f.rhs();
  while (true) {
    if (const Formula* d = match_diamond(*spine)) {
      args.push_back(*d);
      break;
    }
    if (spine->kind() != Kind::IntAnd) return false;
    const Formula* d = match_diamond(spine->lhs());
    if (!d) return false;
    args.push_back(*d);
    spine = &spine->rhs();
  }
  const Formula* disj = &f.lhs();
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (disj->kind() != Kind::ExtOr || !(disj->lhs() == args[i])) return false;
    disj = &disj->rhs();
  }
  if (!(*disj == args.back())) return false;
  operands = std::move(args);
  return true;
}

}  // namespace lad
