#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lad {

// Connectives of the two-layer language. The Ext* connectives are evaluated
// world by world; the Int* connectives at the level of whole contexts.
enum class Kind : std::uint8_t {
  Atom,
  Falsum,
  ExtNeg,
  ExtAnd,
  ExtOr,
  ExtImp,
  IntNeg,
  IntAnd,
  IntOr,
  IntImp,
};

bool is_extensional(Kind k) noexcept;
bool is_intensional(Kind k) noexcept;
bool is_unary(Kind k) noexcept;
bool is_binary(Kind k) noexcept;

// Immutable formula tree with shared structure. Copies are cheap; equality is
// structural. Extensional nodes can only be built over extensional operands,
// so an ill-layered tree is never representable.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula falsum();

  // Extensional layer; throw LayerError on a non-extensional operand.
  static Formula ext_neg(Formula a);
  static Formula ext_and(Formula a, Formula b);
  static Formula ext_or(Formula a, Formula b);
  static Formula ext_imp(Formula a, Formula b);

  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);

  // Generic constructor dispatching on `kind` (binary kinds need `b`).
  static Formula make(Kind kind, Formula a, const Formula* b = nullptr);

  Kind kind() const noexcept;
  const std::string& name() const;  // Atom only
  const Formula& operand() const;   // unary nodes
  const Formula& lhs() const;       // binary nodes
  const Formula& rhs() const;
  std::size_t arity() const noexcept;
  const Formula& child(std::size_t i) const;

  // True iff no intensional connective occurs (Falsum counts as extensional).
  bool is_extensional() const noexcept;
  // Number of nodes.
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  bool operator==(const Formula& other) const noexcept;
  bool operator!=(const Formula& other) const noexcept { return !(*this == other); }

  // Stable identity of the underlying node; equal pointers imply equal trees.
  const void* identity() const noexcept { return node_.get(); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula build(Kind kind, std::string name, std::vector<Formula> args);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Total structural order, used where deterministic ordering is needed.
bool structural_less(const Formula& a, const Formula& b);

// --- classifiers ----------------------------------------------------------

bool is_L_formula(const Formula& f) noexcept;

// No intensional implication inside an intensional negation, or the root is
// itself an intensional implication.
bool is_safe(const Formula& f);

// Atom names occurring in `f`, sorted.
std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> atoms_of(const std::vector<Formula>& fs);

// --- macro layer ----------------------------------------------------------

// <>f  :=  !(f -> _|_)
Formula diamond(Formula f);

// a1 (+) ... (+) an  :=  (a1 \/ ... \/ an) & (<>a1 & ... & <>an); n >= 1,
// chains associate to the right. Throws EmptyInput for n == 0 and
// LayerError for a non-extensional operand.
Formula plus_disj(const std::vector<Formula>& operands);

// Right-associated chains; throw EmptyInput on an empty list.
Formula ext_and_chain(const std::vector<Formula>& fs);
Formula ext_or_chain(const std::vector<Formula>& fs);
Formula int_and_chain(const std::vector<Formula>& fs);
Formula int_or_chain(const std::vector<Formula>& fs);

// Pattern recognisers for the macros. `match_diamond` yields the argument of a
// <>-pattern; `match_plus_disj` yields the operands of a (+)-pattern.
const Formula* match_diamond(const Formula& f) noexcept;
bool match_plus_disj(const Formula& f, std::vector<Formula>& operands);

}  // namespace lad

template <>
struct std::hash<lad::Formula> {
  std::size_t operator()(const lad::Formula& f) const noexcept { return f.hash(); }
};
