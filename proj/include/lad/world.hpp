#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace lad {

// Sorted, duplicate-free list of atom names shared by worlds and contexts.
using AtomList = std::vector<std::string>;

AtomList make_atom_list(const std::set<std::string>& atoms);
AtomList make_atom_list(std::vector<std::string> atoms);

// Largest atom count for which a world index fits the representation.
inline constexpr std::size_t kMaxWorldAtoms = 63;

// Worlds are identified by their truth vector read as a binary number: the
// first atom (lexicographically) is the most significant bit, true = 1.
class World {
 public:
  World(AtomList atoms, std::uint64_t index);
  // `bits` holds one '0'/'1' character per atom, in atom order.
  static World from_bits(AtomList atoms, const std::string& bits);

  const AtomList& atoms() const noexcept { return atoms_; }
  std::uint64_t index() const noexcept { return index_; }
  bool value(std::size_t atom_position) const;
  // Throws UnknownAtom.
  bool value(const std::string& atom) const;
  std::string bits() const;

  bool operator==(const World& o) const { return index_ == o.index_ && atoms_ == o.atoms_; }

 private:
  AtomList atoms_;
  std::uint64_t index_;
};

bool world_value(std::uint64_t index, std::size_t atom_position, std::size_t atom_count);

// Nonempty set of worlds over a shared atom list; members are kept sorted by
// world index.
class Context {
 public:
  Context(AtomList atoms, std::vector<std::uint64_t> worlds);

  // Worlds as a bit set over all 2^n world indices; requires 2^n <= 64.
  static Context from_mask(AtomList atoms, std::uint64_t mask);
  static Context all_worlds(AtomList atoms);

  const AtomList& atoms() const noexcept { return atoms_; }
  const std::vector<std::uint64_t>& worlds() const noexcept { return worlds_; }
  std::size_t size() const noexcept { return worlds_.size(); }
  World world(std::size_t i) const { return World(atoms_, worlds_.at(i)); }
  bool contains(std::uint64_t index) const;
  std::uint64_t mask() const;

  // Every world duplicated over an added atom, once with each truth value.
  Context extend(const std::string& fresh_atom) const;

  bool operator==(const Context& o) const { return atoms_ == o.atoms_ && worlds_ == o.worlds_; }

 private:
  AtomList atoms_;
  std::vector<std::uint64_t> worlds_;
};

}  // namespace lad
