#include "lad/world.hpp"

#include <algorithm>
#include <stdexcept>

#include "lad/errors.hpp"
#include "lad/syntax.hpp"

namespace lad {

AtomList make_atom_list(const std::set<std::string>& atoms) {
  return AtomList(atoms.begin(), atoms.end());
}

AtomList make_atom_list(std::vector<std::string> atoms) {
  for (const auto& a : atoms)
    if (!is_identifier(a)) throw std::invalid_argument("invalid atom name '" + a + "'");
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

namespace {

void check_atom_count(const AtomList& atoms) {
  if (atoms.size() > kMaxWorldAtoms)
    throw std::invalid_argument("too many atoms for a world index: " + std::to_string(atoms.size()));
}

std::uint64_t world_limit(std::size_t n) { return n >= 64 ? 0 : (std::uint64_t{1} << n); }

}  // namespace

bool world_value(std::uint64_t index, std::size_t atom_position, std::size_t atom_count) {
  return (index >> (atom_count - 1 - atom_position)) & 1U;
}

World::World(AtomList atoms, std::uint64_t index) : atoms_(std::move(atoms)), index_(index) {
  check_atom_count(atoms_);
  if (index_ >= world_limit(atoms_.size())) throw std::out_of_range("world index out of range");
}

World World::from_bits(AtomList atoms, const std::string& bits) {
  if (bits.size() != atoms.size())
    throw std::invalid_argument("world has " + std::to_string(bits.size()) + " values for " +
                                std::to_string(atoms.size()) + " atoms");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("world values must be 0 or 1");
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return World(std::move(atoms), index);
}

bool World::value(std::size_t atom_position) const {
  return world_value(index_, atom_position, atoms_.size());
}

bool World::value(const std::string& atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) throw UnknownAtom(atom);
  return value(static_cast<std::size_t>(it - atoms_.begin()));
}

std::string World::bits() const {
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) out += value(i) ? '1' : '0';
  return out;
}

Context::Context(AtomList atoms, std::vector<std::uint64_t> worlds)
    : atoms_(std::move(atoms)), worlds_(std::move(worlds)) {
  check_atom_count(atoms_);
  if (!std::is_sorted(atoms_.begin(), atoms_.end()) ||
      std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end())
    throw std::invalid_argument("context atoms must be sorted and distinct");
  if (worlds_.empty()) throw EmptyInput("a context must contain at least one world");
  std::sort(worlds_.begin(), worlds_.end());
  worlds_.erase(std::unique(worlds_.begin(), worlds_.end()), worlds_.end());
  if (worlds_.back() >= world_limit(atoms_.size()))
    throw std::out_of_range("world index out of range");
}

Context Context::from_mask(AtomList atoms, std::uint64_t mask) {
  if (atoms.size() > 6) throw std::invalid_argument("bit-set contexts support at most 6 atoms");
  std::vector<std::uint64_t> worlds;
  for (std::uint64_t i = 0; i < world_limit(atoms.size()); ++i)
    if ((mask >> i) & 1U) worlds.push_back(i);
  return Context(std::move(atoms), std::move(worlds));
}

Context Context::all_worlds(AtomList atoms) {
  if (atoms.size() > 20) throw std::invalid_argument("too many atoms to list every world");
  std::vector<std::uint64_t> worlds(world_limit(atoms.size()));
  for (std::uint64_t i = 0; i < worlds.size(); ++i) worlds[i] = i;
  return Context(std::move(atoms), std::move(worlds));
}

bool Context::contains(std::uint64_t index) const {
  return std::binary_search(worlds_.begin(), worlds_.end(), index);
}

std::uint64_t Context::mask() const {
  if (atoms_.size() > 6) throw std::invalid_argument("bit-set contexts support at most 6 atoms");
  std::uint64_t m = 0;
  for (auto w : worlds_) m |= std::uint64_t{1} << w;
  return m;
}

Context Context::extend(const std::string& fresh_atom) const {
  AtomList atoms = atoms_;
  if (std::binary_search(atoms.begin(), atoms.end(), fresh_atom))
    throw std::invalid_argument("atom '" + fresh_atom + "' is not fresh");
  atoms.push_back(fresh_atom);
  atoms = make_atom_list(std::move(atoms));
  const std::size_t n = atoms_.size();
  const std::size_t pos = static_cast<std::size_t>(
      std::find(atoms.begin(), atoms.end(), fresh_atom) - atoms.begin());
  std::vector<std::uint64_t> worlds;
  for (auto w : worlds_) {
    // Split the old index around the new atom's bit position.
    const std::size_t low_bits = n - pos;
    const std::uint64_t low = low_bits >= 64 ? w : (w & ((std::uint64_t{1} << low_bits) - 1));
    const std::uint64_t high = low_bits >= 64 ? 0 : (w >> low_bits);
    for (std::uint64_t v = 0; v < 2; ++v)
      worlds.push_back((((high << 1) | v) << low_bits) | low);
  }
  return Context(std::move(atoms), std::move(worlds));
}

}  // namespace lad
