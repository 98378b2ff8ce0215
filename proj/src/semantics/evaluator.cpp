#include <algorithm>
#include <optional>
#include <stdexcept>

#include "lad/errors.hpp"
#include "lad/semantics.hpp"

namespace lad {

namespace {

std::size_t atom_position(const AtomList& atoms, const std::string& name) {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
  if (it == atoms.end() || *it != name) throw UnknownAtom(name);
  return static_cast<std::size_t>(it - atoms.begin());
}

}  // namespace

bool truth(const World& w, const Formula& alpha) {
  switch (alpha.kind()) {
    case Kind::Atom: return w.value(alpha.name());
    case Kind::Falsum: return false;
    case Kind::ExtNeg: return !truth(w, alpha.operand());
    case Kind::ExtAnd: return truth(w, alpha.lhs()) && truth(w, alpha.rhs());
    case Kind::ExtOr: return truth(w, alpha.lhs()) || truth(w, alpha.rhs());
    case Kind::ExtImp: return !truth(w, alpha.lhs()) || truth(w, alpha.rhs());
    default: throw std::invalid_argument("truth at a world is defined for extensional formulas only");
  }
}

// --- lazy evaluator ---------------------------------------------------------

struct Evaluator::Entry {
  Formula f;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
  std::optional<SubMask> truth;
  // Memo per polarity, keyed by subcontext.
  std::unordered_map<SubMask, bool> positive;
  std::unordered_map<SubMask, bool> negative;
};

Evaluator::Evaluator(AtomList atoms, std::vector<std::uint64_t> universe, Variant variant)
    : atoms_(std::move(atoms)), universe_(std::move(universe)), variant_(variant) {
  if (universe_.empty()) throw EmptyInput("evaluation universe is empty");
  if (universe_.size() > 64) throw std::invalid_argument("evaluation universe exceeds 64 worlds");
  full_ = universe_.size() == 64 ? ~SubMask{0} : ((SubMask{1} << universe_.size()) - 1);
}

Evaluator::Evaluator(const Context& context, Variant variant)
    : Evaluator(context.atoms(), context.worlds(), variant) {}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

std::uint32_t Evaluator::intern(const Formula& f) {
  if (auto it = ids_.find(f); it != ids_.end()) return it->second;
  Entry e{f, 0, 0, {}, {}, {}};
  if (f.kind() == Kind::Atom) atom_position(atoms_, f.name());
  if (f.arity() >= 1) e.lhs = intern(f.child(0));
  if (f.arity() == 2) e.rhs = intern(f.child(1));
  auto id = static_cast<std::uint32_t>(entries_.size());
  entries_.push_back(std::move(e));
  ids_.emplace(f, id);
  return id;
}

SubMask Evaluator::truth_mask(std::uint32_t id) {
  Entry& e = entries_[id];
  if (e.truth) return *e.truth;
  SubMask m = 0;
  switch (e.f.kind()) {
    case Kind::Atom: {
      const std::size_t pos = atom_position(atoms_, e.f.name());
      for (std::size_t i = 0; i < universe_.size(); ++i)
        if (world_value(universe_[i], pos, atoms_.size())) m |= SubMask{1} << i;
      break;
    }
    case Kind::Falsum: m = 0; break;
    case Kind::ExtNeg: m = ~truth_mask(e.lhs) & full_; break;
    case Kind::ExtAnd: m = truth_mask(e.lhs) & truth_mask(e.rhs); break;
    case Kind::ExtOr: m = truth_mask(e.lhs) | truth_mask(e.rhs); break;
    case Kind::ExtImp: m = (~truth_mask(e.lhs) | truth_mask(e.rhs)) & full_; break;
    default: throw std::logic_error("truth_mask on an intensional formula");
  }
  entries_[id].truth = m;
  return m;
}

bool Evaluator::asserts(const Formula& f, SubMask sub) {
  if (sub == 0 || (sub & ~full_)) throw std::invalid_argument("subcontext must be a nonempty subset of the universe");
  return eval(intern(f), sub, true);
}

bool Evaluator::denies(const Formula& f, SubMask sub) {
  if (sub == 0 || (sub & ~full_)) throw std::invalid_argument("subcontext must be a nonempty subset of the universe");
  return eval(intern(f), sub, false);
}

bool Evaluator::eval(std::uint32_t id, SubMask sub, bool positive) {
  const Kind kind = entries_[id].f.kind();
  if (entries_[id].f.is_extensional()) {
    const SubMask t = truth_mask(id);
    return positive ? (sub & ~t) == 0 : (sub & t) == 0;
  }
  auto& memo = positive ? entries_[id].positive : entries_[id].negative;
  if (auto it = memo.find(sub); it != memo.end()) return it->second;

  const std::uint32_t l = entries_[id].lhs;
  const std::uint32_t r = entries_[id].rhs;
  bool result = false;
  switch (kind) {
    case Kind::IntNeg:
      result = eval(l, sub, !positive);
      break;
    case Kind::IntAnd:
      result = positive ? (eval(l, sub, true) && eval(r, sub, true))
                        : (eval(l, sub, false) || eval(r, sub, false));
      break;
    case Kind::IntOr:
      result = positive ? (eval(l, sub, true) || eval(r, sub, true))
                        : (eval(l, sub, false) && eval(r, sub, false));
      break;
    case Kind::IntImp:
      result = eval_imp(id, sub, positive);
      break;
    default:
      throw std::logic_error("eval: unreachable");
  }
  memo.emplace(sub, result);
  return result;
}

bool Evaluator::eval_imp(std::uint32_t id, SubMask sub, bool positive) {
  const std::uint32_t l = entries_[id].lhs;
  const std::uint32_t r = entries_[id].rhs;
  if (!positive && variant_ == Variant::nelson) return eval(l, sub, true) && eval(r, sub, false);

  // Submasks of `sub`, all nonempty.
  for (SubMask d = sub; d != 0; d = (d - 1) & sub) {
    if (!eval(l, d, true)) continue;
    if (positive) {
      if (!eval(r, d, true)) return false;
    } else if (variant_ == Variant::gauker) {
      if (eval(r, d, false)) return true;
    } else {
      if (!eval(r, d, false)) return false;
    }
  }
  // Assertion and connexive denial are universal, gauker denial existential.
  return positive || variant_ == Variant::connexive;
}

bool asserts(const Context& c, const Formula& f, Variant v) { return Evaluator(c, v).asserts(f); }

bool denies(const Context& c, const Formula& f, Variant v) { return Evaluator(c, v).denies(f); }

Judgment judge(const Context& c, const Formula& f, Variant v) {
  Evaluator e(c, v);
  return {e.asserts(f), e.denies(f)};
}

}  // namespace lad
