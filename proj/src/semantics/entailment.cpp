#include "lad/entailment.hpp"

#include <algorithm>
#include <functional>

#include "lad/errors.hpp"
#include "lad/semantics.hpp"
#include "lad/transform.hpp"

namespace lad {

namespace {

// Every nonempty context over a fixed atom list, addressed by its world bit
// set. Small spaces (<= 4 atoms) are decided through bulk tables; larger ones
// through the lazy evaluator, one context at a time.
class ContextSpace {
 public:
  ContextSpace(AtomList atoms, Variant v, const EnumerationOptions& opts) : atoms_(std::move(atoms)) {
    const std::size_t bound = std::min(opts.atom_bound, kMaxAtomBound);
    if (atoms_.size() > bound) throw AtomBoundExceeded(atoms_.size(), opts.atom_bound);
    const std::uint64_t worlds = std::uint64_t{1} << atoms_.size();
    last_ = worlds == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << worlds) - 1;
    if (atoms_.size() <= 4) {
      table_.emplace(atoms_, v);
    } else {
      std::vector<std::uint64_t> universe(worlds);
      for (std::uint64_t i = 0; i < worlds; ++i) universe[i] = i;
      eval_.emplace(atoms_, std::move(universe), v);
    }
  }

  const AtomList& atoms() const { return atoms_; }
  std::uint64_t last() const { return last_; }

  std::function<bool(std::uint64_t)> asserter(const Formula& f) {
    if (table_) {
      const ContextSet* set = &table_->asserted(f);
      return [set](std::uint64_t c) { return set->test(c); };
    }
    Evaluator* e = &*eval_;
    return [e, f](std::uint64_t c) { return e->asserts(f, c); };
  }

  // Calls `visit` on contexts 1..last in ascending order until it returns true.
  template <typename Visit>
  std::optional<std::uint64_t> find(Visit visit) const {
    for (std::uint64_t c = 1;; ++c) {
      if (visit(c)) return c;
      if (c == last_) return std::nullopt;
    }
  }

  Context context(std::uint64_t mask) const { return Context::from_mask(atoms_, mask); }

 private:
  AtomList atoms_;
  std::uint64_t last_ = 0;
  std::optional<ContextTable> table_;
  std::optional<Evaluator> eval_;
};

std::vector<Formula> with(std::vector<Formula> fs, const Formula& extra) {
  fs.push_back(extra);
  return fs;
}

}  // namespace

AtomList enumeration_atoms(const std::vector<Formula>& formulas) {
  AtomList atoms = make_atom_list(atoms_of(formulas));
  if (atoms.empty()) atoms.push_back("p");
  return atoms;
}

std::optional<Context> countermodel(const std::vector<Formula>& premises, const Formula& conclusion,
                                    Variant v, const EnumerationOptions& opts) {
  ContextSpace space(enumeration_atoms(with(premises, conclusion)), v, opts);
  std::vector<std::function<bool(std::uint64_t)>> holds;
  for (const auto& p : premises) holds.push_back(space.asserter(p));
  auto goal = space.asserter(conclusion);
  auto hit = space.find([&](std::uint64_t c) {
    for (const auto& h : holds)
      if (!h(c)) return false;
    return !goal(c);
  });
  if (!hit) return std::nullopt;
  return space.context(*hit);
}

bool entails(const std::vector<Formula>& premises, const Formula& conclusion, Variant v,
             const EnumerationOptions& opts) {
  return !countermodel(premises, conclusion, v, opts).has_value();
}

bool equivalent(const Formula& a, const Formula& b, Variant v, const EnumerationOptions& opts) {
  ContextSpace space(enumeration_atoms({a, b}), v, opts);
  auto fa = space.asserter(a);
  auto fb = space.asserter(b);
  return !space.find([&](std::uint64_t c) { return fa(c) != fb(c); });
}

bool strongly_equivalent(const Formula& a, const Formula& b, Variant v, const EnumerationOptions& opts) {
  ContextSpace space(enumeration_atoms({a, b}), v, opts);
  auto fa = space.asserter(a);
  auto fb = space.asserter(b);
  auto na = space.asserter(Formula::neg(a));
  auto nb = space.asserter(Formula::neg(b));
  return !space.find([&](std::uint64_t c) { return fa(c) != fb(c) || na(c) != nb(c); });
}

std::optional<PersistenceWitness> persistence_counterexample(const Formula& f, const AtomList& atoms,
                                                             Variant v, const EnumerationOptions& opts) {
  for (const auto& a : atoms_of(f))
    if (!std::binary_search(atoms.begin(), atoms.end(), a)) throw UnknownAtom(a);
  ContextSpace space(atoms, v, opts);
  auto holds = space.asserter(f);
  std::uint64_t sub = 0;
  // Downward closure under single-world removal implies closure under all
  // nonempty subsets.
  auto hit = space.find([&](std::uint64_t c) {
    if (!holds(c)) return false;
    for (std::uint64_t rest = c; rest; rest &= rest - 1) {
      const std::uint64_t d = c & ~(rest & -rest);
      if (d && !holds(d)) {
        sub = d;
        return true;
      }
    }
    return false;
  });
  if (!hit) return std::nullopt;
  return PersistenceWitness{space.context(*hit), space.context(sub)};
}

bool is_persistent(const Formula& f, const AtomList& atoms, Variant v, const EnumerationOptions& opts) {
  return !persistence_counterexample(f, atoms, v, opts).has_value();
}

bool check_characteristic(const Context& c, Variant v, const EnumerationOptions& opts) {
  ContextSpace space(c.atoms(), v, opts);
  auto holds = space.asserter(mu(c));
  const std::uint64_t self = c.mask();
  return !space.find([&](std::uint64_t d) { return holds(d) != (d == self); });
}

bool check_characteristic_set(const std::vector<Context>& contexts, Variant v,
                              const EnumerationOptions& opts) {
  if (contexts.empty()) throw EmptyInput("empty context set");
  ContextSpace space(contexts.front().atoms(), v, opts);
  auto holds = space.asserter(xi(contexts));
  std::vector<std::uint64_t> members;
  for (const auto& c : contexts) members.push_back(c.mask());
  std::sort(members.begin(), members.end());
  return !space.find([&](std::uint64_t d) {
    return holds(d) != std::binary_search(members.begin(), members.end(), d);
  });
}

}  // namespace lad
