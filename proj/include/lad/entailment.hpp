#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lad/formula.hpp"
#include "lad/variant.hpp"
#include "lad/world.hpp"

namespace lad {

inline constexpr std::size_t kDefaultAtomBound = 4;
// Contexts are enumerated as 64-bit world sets, so 6 atoms is a hard ceiling.
inline constexpr std::size_t kMaxAtomBound = 6;

struct EnumerationOptions {
  std::size_t atom_bound = kDefaultAtomBound;
};

// Atoms a sequent is decided over: the occurring atoms, or the single dummy
// atom "p" when none occur.
AtomList enumeration_atoms(const std::vector<Formula>& formulas);

// Decides premises |= conclusion by visiting every nonempty context over the
// occurring atoms. Throws AtomBoundExceeded when there are more atoms than
// `opts.atom_bound`.
bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             Variant v = Variant::gauker, const EnumerationOptions& opts = {});

// First context, in ascending bit-set order, asserting every premise but not
// the conclusion.
std::optional<Context> countermodel(const std::vector<Formula>& premises, const Formula& conclusion,
                                    Variant v = Variant::gauker, const EnumerationOptions& opts = {});

bool equivalent(const Formula& a, const Formula& b, Variant v = Variant::gauker,
                const EnumerationOptions& opts = {});
bool strongly_equivalent(const Formula& a, const Formula& b, Variant v = Variant::gauker,
                         const EnumerationOptions& opts = {});

struct PersistenceWitness {
  Context context;     // asserts the formula
  Context subcontext;  // does not
};

// `atoms` must cover the formula's atoms. Returns the first failing pair.
std::optional<PersistenceWitness> persistence_counterexample(const Formula& f, const AtomList& atoms,
                                                             Variant v = Variant::gauker,
                                                             const EnumerationOptions& opts = {});
bool is_persistent(const Formula& f, const AtomList& atoms, Variant v = Variant::gauker,
                   const EnumerationOptions& opts = {});

// mu(c) is asserted by c and by no other context over c's atoms.
bool check_characteristic(const Context& c, Variant v = Variant::gauker,
                          const EnumerationOptions& opts = {});
// xi(contexts) is asserted exactly by the listed contexts.
bool check_characteristic_set(const std::vector<Context>& contexts, Variant v = Variant::gauker,
                              const EnumerationOptions& opts = {});

}  // namespace lad
