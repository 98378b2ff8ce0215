#pragma once

#include <random>
#include <string>
#include <vector>

#include "lad/formula.hpp"

namespace gen {

// Every well-layered formula with at most `max_size` nodes over the given
// atoms plus falsum, grouped by size: result[n] holds the formulas of size n.
inline std::vector<std::vector<lad::Formula>> by_size(const std::vector<std::string>& atoms,
                                                      std::size_t max_size) {
  using lad::Formula;
  std::vector<std::vector<Formula>> all(max_size + 1), ext(max_size + 1);
  for (const auto& a : atoms) all[1].push_back(Formula::atom(a));
  all[1].push_back(Formula::falsum());
  ext[1] = all[1];
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (const auto& f : all[n - 1]) all[n].push_back(Formula::neg(f));
    for (const auto& f : ext[n - 1]) {
      all[n].push_back(Formula::ext_neg(f));
      ext[n].push_back(Formula::ext_neg(f));
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const std::size_t j = n - 1 - i;
      for (const auto& a : all[i])
        for (const auto& b : all[j]) {
          all[n].push_back(Formula::conj(a, b));
          all[n].push_back(Formula::disj(a, b));
          all[n].push_back(Formula::imp(a, b));
        }
      for (const auto& a : ext[i])
        for (const auto& b : ext[j])
          for (auto make : {&Formula::ext_and, &Formula::ext_or, &Formula::ext_imp}) {
            Formula f = make(a, b);
            all[n].push_back(f);
            ext[n].push_back(f);
          }
    }
  }
  return all;
}

inline std::vector<lad::Formula> up_to(const std::vector<std::string>& atoms, std::size_t max_size) {
  std::vector<lad::Formula> out;
  for (auto& bucket : by_size(atoms, max_size)) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

// Random well-layered formula with roughly `size` nodes. `ext_only` restricts
// to the extensional layer.
inline lad::Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms, int size,
                                   bool ext_only = false) {
  using lad::Formula;
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (size <= 1) {
    const int k = pick(static_cast<int>(atoms.size()) + 1);
    if (k == static_cast<int>(atoms.size()) && pick(4) == 0) return Formula::falsum();
    return Formula::atom(atoms[static_cast<std::size_t>(k % static_cast<int>(atoms.size()))]);
  }
  const bool ext = ext_only || pick(3) == 0;
  const int op = pick(4);
  if (op == 0) {
    Formula a = random_formula(rng, atoms, size - 1, ext);
    return ext ? Formula::ext_neg(a) : Formula::neg(a);
  }
  const int left = 1 + pick(size - 1 > 1 ? size - 2 : 1);
  Formula a = random_formula(rng, atoms, left, ext);
  Formula b = random_formula(rng, atoms, size - 1 - left, ext);
  switch (op) {
    case 1: return ext ? Formula::ext_and(a, b) : Formula::conj(a, b);
    case 2: return ext ? Formula::ext_or(a, b) : Formula::disj(a, b);
    default: return ext ? Formula::ext_imp(a, b) : Formula::imp(a, b);
  }
}

}  // namespace gen
