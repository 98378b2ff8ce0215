#pragma once

#include <cstddef>
#include <vector>

#include "lad/formula.hpp"
#include "lad/variant.hpp"
#include "lad/world.hpp"

namespace lad {

// Replace every intensional connective by its extensional counterpart.
Formula e_translate(const Formula& f);

// Child indices from the root: 0 selects the operand / left child, 1 the
// right child.
using OccurrencePath = std::vector<std::size_t>;

const Formula& subformula_at(const Formula& f, const OccurrencePath& path);

// Replace the occurrence at `path` by `replacement`. Throws PathError for an
// invalid path and LayerError if the result would be ill-layered.
Formula substitute(const Formula& f, const OccurrencePath& path, const Formula& replacement);

// Every occurrence path of `f`, pre-order.
std::vector<OccurrencePath> occurrence_paths(const Formula& f);

// Contextual weak negation: asserted exactly where `f` is not (gauker
// clauses). Extensional formulas and their intensional negations are handled
// before any connective dispatch.
Formula weak_negate(const Formula& f);

// Pushes intensional negation inward. gauker: negation survives only in
// <>(a & !b)-patterns produced from !(a -> b). nelson: !(a -> b) becomes
// a & !b. connexive: !(a -> b) becomes a -> !b. In every variant !alpha on an
// extensional alpha becomes ~alpha; nelson and connexive results contain no
// intensional negation at all.
Formula nnf(const Formula& f, Variant variant = Variant::gauker);

// Characteristic formulas. sigma: /\-chain of literals in atom order.
// mu: (+) of sigma over the worlds, all-true world first (descending index).
// xi: |-chain of mu over the contexts in the given order.
Formula sigma(const World& w);
Formula mu(const Context& c);
Formula xi(const std::vector<Context>& contexts);

}  // namespace lad
