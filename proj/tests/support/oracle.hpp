#pragma once

// Reference implementations used as test oracles. They follow the clause
// definitions literally, with explicit world lists and no memoisation, and
// share no code with the library's evaluators.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lad/formula.hpp"
#include "lad/variant.hpp"

namespace oracle {

using Worlds = std::vector<std::uint64_t>;

// Value of `atom` in world `index` over `atoms` (first atom = high bit).
inline bool value(const std::vector<std::string>& atoms, std::uint64_t index, const std::string& atom) {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == atom) return (index >> (atoms.size() - 1 - i)) & 1U;
  throw std::invalid_argument("oracle: unknown atom " + atom);
}

inline bool classical(const std::vector<std::string>& atoms, std::uint64_t w, const lad::Formula& f) {
  using lad::Kind;
  switch (f.kind()) {
    case Kind::Atom: return value(atoms, w, f.name());
    case Kind::Falsum: return false;
    case Kind::ExtNeg:
    case Kind::IntNeg: return !classical(atoms, w, f.operand());
    case Kind::ExtAnd:
    case Kind::IntAnd: return classical(atoms, w, f.lhs()) && classical(atoms, w, f.rhs());
    case Kind::ExtOr:
    case Kind::IntOr: return classical(atoms, w, f.lhs()) || classical(atoms, w, f.rhs());
    case Kind::ExtImp:
    case Kind::IntImp: return !classical(atoms, w, f.lhs()) || classical(atoms, w, f.rhs());
  }
  return false;
}

inline std::vector<Worlds> nonempty_subsets(const Worlds& c) {
  std::vector<Worlds> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << c.size()); ++m) {
    Worlds d;
    for (std::size_t i = 0; i < c.size(); ++i)
      if ((m >> i) & 1U) d.push_back(c[i]);
    out.push_back(d);
  }
  return out;
}

struct Semantics {
  std::vector<std::string> atoms;
  lad::Variant variant = lad::Variant::gauker;

  bool pos(const Worlds& c, const lad::Formula& f) const {
    using lad::Kind;
    if (f.is_extensional())
      return std::all_of(c.begin(), c.end(), [&](std::uint64_t w) { return classical(atoms, w, f); });
    switch (f.kind()) {
      case Kind::IntNeg: return neg(c, f.operand());
      case Kind::IntAnd: return pos(c, f.lhs()) && pos(c, f.rhs());
      case Kind::IntOr: return pos(c, f.lhs()) || pos(c, f.rhs());
      case Kind::IntImp:
        for (const auto& d : nonempty_subsets(c))
          if (pos(d, f.lhs()) && !pos(d, f.rhs())) return false;
        return true;
      default: return false;
    }
  }

  bool neg(const Worlds& c, const lad::Formula& f) const {
    using lad::Kind;
    if (f.is_extensional())
      return std::none_of(c.begin(), c.end(), [&](std::uint64_t w) { return classical(atoms, w, f); });
    switch (f.kind()) {
      case Kind::IntNeg: return pos(c, f.operand());
      case Kind::IntAnd: return neg(c, f.lhs()) || neg(c, f.rhs());
      case Kind::IntOr: return neg(c, f.lhs()) && neg(c, f.rhs());
      case Kind::IntImp: {
        if (variant == lad::Variant::nelson) return pos(c, f.lhs()) && neg(c, f.rhs());
        const auto subs = nonempty_subsets(c);
        if (variant == lad::Variant::gauker)
          return std::any_of(subs.begin(), subs.end(),
                             [&](const Worlds& d) { return pos(d, f.lhs()) && neg(d, f.rhs()); });
        return std::all_of(subs.begin(), subs.end(),
                           [&](const Worlds& d) { return !pos(d, f.lhs()) || neg(d, f.rhs()); });
      }
      default: return false;
    }
  }
};

// Worlds of the context encoded by bit set `mask` (bit i = world i).
inline Worlds worlds_of(std::uint64_t mask) {
  Worlds out;
  for (std::uint64_t i = 0; i < 64; ++i)
    if ((mask >> i) & 1U) out.push_back(i);
  return out;
}

// Classical consequence by truth tables.
inline bool classically_entails(const std::vector<std::string>& atoms, const std::vector<lad::Formula>& premises,
                                 const lad::Formula& conclusion) {
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << atoms.size()); ++w) {
    bool all = std::all_of(premises.begin(), premises.end(),
                           [&](const lad::Formula& p) { return classical(atoms, w, p); });
    if (all && !classical(atoms, w, conclusion)) return false;
  }
  return true;
}

}  // namespace oracle
