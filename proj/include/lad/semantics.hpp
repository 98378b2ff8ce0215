#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "lad/formula.hpp"
#include "lad/variant.hpp"
#include "lad/world.hpp"

namespace lad {

// Classical truth of an extensional formula at a world. Throws UnknownAtom,
// or std::invalid_argument for an intensional formula.
bool truth(const World& w, const Formula& alpha);

struct Judgment {
  bool asserted = false;
  bool denied = false;
};

// Subcontext of an evaluation universe: bit i selects universe world i.
using SubMask = std::uint64_t;

// Lazy evaluator of assertibility and deniability over the nonempty subsets
// of a fixed universe of at most 64 worlds. Results are memoised per
// (subformula, subcontext, polarity); structurally equal subformulas share
// memo entries. Not thread-safe; use one instance per thread.
class Evaluator {
 public:
  Evaluator(AtomList atoms, std::vector<std::uint64_t> universe, Variant variant);
  // Universe = the context's worlds.
  Evaluator(const Context& context, Variant variant);
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  std::size_t universe_size() const noexcept { return universe_.size(); }
  SubMask full() const noexcept { return full_; }

  // `sub` must be a nonempty subset of full(); throws UnknownAtom for atoms
  // outside the atom list.
  bool asserts(const Formula& f, SubMask sub);
  bool denies(const Formula& f, SubMask sub);
  bool asserts(const Formula& f) { return asserts(f, full_); }
  bool denies(const Formula& f) { return denies(f, full_); }

 private:
  struct Entry;
  std::uint32_t intern(const Formula& f);
  SubMask truth_mask(std::uint32_t id);
  bool eval(std::uint32_t id, SubMask sub, bool positive);
  bool eval_imp(std::uint32_t id, SubMask sub, bool positive);

  AtomList atoms_;
  std::vector<std::uint64_t> universe_;
  Variant variant_;
  SubMask full_;
  std::unordered_map<Formula, std::uint32_t, FormulaHash> ids_;
  std::vector<Entry> entries_;
};

// Set of subcontexts of a universe of k <= 16 worlds, one bit per subset
// (bit C set = context C is in the set). The empty subset is never a member.
class ContextSet {
 public:
  explicit ContextSet(std::size_t universe_worlds);

  static ContextSet all_nonempty(std::size_t universe_worlds);

  std::size_t universe_worlds() const noexcept { return k_; }
  std::uint64_t context_count() const noexcept { return std::uint64_t{1} << k_; }

  bool test(std::uint64_t context) const noexcept {
    return (words_[context >> 6] >> (context & 63)) & 1U;
  }
  void set(std::uint64_t context) noexcept { words_[context >> 6] |= std::uint64_t{1} << (context & 63); }

  bool empty() const noexcept;
  std::uint64_t count() const noexcept;
  // Smallest member as a bit-set integer, or 0 when the set is empty.
  std::uint64_t first() const noexcept;

  ContextSet& operator&=(const ContextSet& o);
  ContextSet& operator|=(const ContextSet& o);
  // Complement within the nonempty subsets.
  ContextSet complement() const;
  // Contexts having some member of this set as a subset.
  ContextSet upward_closure() const;

  bool operator==(const ContextSet& o) const { return k_ == o.k_ && words_ == o.words_; }

  friend ContextSet operator&(ContextSet a, const ContextSet& b) { return a &= b; }
  friend ContextSet operator|(ContextSet a, const ContextSet& b) { return a |= b; }

 private:
  void clear_padding();

  std::size_t k_;
  std::vector<std::uint64_t> words_;
};

// Bulk evaluator: for each formula, the set of all subcontexts of the universe
// that assert (resp. deny) it, computed with bit-parallel subset closures.
// Tables are memoised per structurally distinct subformula.
class ContextTable {
 public:
  ContextTable(AtomList atoms, std::vector<std::uint64_t> universe, Variant variant);
  // Universe = every world over `atoms` (at most 4 atoms).
  ContextTable(AtomList atoms, Variant variant);
  ~ContextTable();
  ContextTable(ContextTable&&) noexcept;
  ContextTable& operator=(ContextTable&&) noexcept;

  const AtomList& atoms() const noexcept { return atoms_; }
  std::size_t universe_size() const noexcept { return universe_.size(); }

  const ContextSet& asserted(const Formula& f);
  const ContextSet& denied(const Formula& f);

 private:
  struct Entry;
  std::uint32_t intern(const Formula& f);
  std::uint32_t truth_mask(std::uint32_t id);
  const ContextSet& table(std::uint32_t id, bool positive);
  ContextSet subsets_of(std::uint32_t worlds) const;

  AtomList atoms_;
  std::vector<std::uint64_t> universe_;
  Variant variant_;
  std::unordered_map<Formula, std::uint32_t, FormulaHash> ids_;
  std::vector<std::unique_ptr<Entry>> entries_;
};

// One-shot judgments for a whole context.
bool asserts(const Context& c, const Formula& f, Variant v = Variant::gauker);
bool denies(const Context& c, const Formula& f, Variant v = Variant::gauker);
Judgment judge(const Context& c, const Formula& f, Variant v = Variant::gauker);

}  // namespace lad
