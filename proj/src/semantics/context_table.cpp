#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

#include "lad/errors.hpp"
#include "lad/semantics.hpp"

namespace lad {

// --- ContextSet ---------------------------------------------------------------

namespace {

// Bits whose index has bit j clear, for j < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

constexpr std::size_t kMaxTableWorlds = 16;

}  // namespace

ContextSet::ContextSet(std::size_t universe_worlds) : k_(universe_worlds) {
  if (k_ == 0 || k_ > kMaxTableWorlds)
    throw std::invalid_argument("context tables need a universe of 1 to 16 worlds");
  words_.assign(k_ >= 6 ? (std::size_t{1} << (k_ - 6)) : 1, 0);
}

ContextSet ContextSet::all_nonempty(std::size_t universe_worlds) {
  ContextSet s(universe_worlds);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.clear_padding();
  return s;
}

void ContextSet::clear_padding() {
  if (k_ < 6) words_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << k_)) - 1;
  words_[0] &= ~std::uint64_t{1};  // the empty context
}

bool ContextSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t ContextSet::count() const noexcept {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

std::uint64_t ContextSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return (std::uint64_t{i} << 6) | static_cast<std::uint64_t>(std::countr_zero(words_[i]));
  return 0;
}

ContextSet& ContextSet::operator&=(const ContextSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

ContextSet& ContextSet::operator|=(const ContextSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

ContextSet ContextSet::complement() const {
  ContextSet out(*this);
  for (auto& w : out.words_) w = ~w;
  out.clear_padding();
  return out;
}

ContextSet ContextSet::upward_closure() const {
  // Subset-sum (zeta) transform over the k world bits.
  ContextSet out(*this);
  for (std::size_t j = 0; j < k_; ++j) {
    if (j < 6) {
      const unsigned shift = 1U << j;
      for (auto& w : out.words_) w |= (w & kLowHalf[j]) << shift;
    } else {
      const std::size_t stride = std::size_t{1} << (j - 6);
      for (std::size_t i = 0; i < out.words_.size(); ++i)
        if (i & stride) out.words_[i] |= out.words_[i ^ stride];
    }
  }
  out.clear_padding();
  return out;
}

// --- ContextTable -------------------------------------------------------------

struct ContextTable::Entry {
  Formula f;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
  std::optional<std::uint32_t> truth;
  std::optional<ContextSet> asserted;
  std::optional<ContextSet> denied;
};

ContextTable::ContextTable(AtomList atoms, std::vector<std::uint64_t> universe, Variant variant)
    : atoms_(std::move(atoms)), universe_(std::move(universe)), variant_(variant) {
  if (universe_.empty() || universe_.size() > kMaxTableWorlds)
    throw std::invalid_argument("context tables need a universe of 1 to 16 worlds");
}

namespace {

std::vector<std::uint64_t> every_world(std::size_t atoms) {
  if (atoms > 4) throw std::invalid_argument("full-universe context tables support at most 4 atoms");
  std::vector<std::uint64_t> out(std::size_t{1} << atoms);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

}  // namespace

ContextTable::ContextTable(AtomList atoms, Variant variant)
    : ContextTable(atoms, every_world(atoms.size()), variant) {}

ContextTable::~ContextTable() = default;
ContextTable::ContextTable(ContextTable&&) noexcept = default;
ContextTable& ContextTable::operator=(ContextTable&&) noexcept = default;

std::uint32_t ContextTable::intern(const Formula& f) {
  if (auto it = ids_.find(f); it != ids_.end()) return it->second;
  Entry e{f, 0, 0, {}, {}, {}};
  if (f.kind() == Kind::Atom && !std::binary_search(atoms_.begin(), atoms_.end(), f.name()))
    throw UnknownAtom(f.name());
  if (f.arity() >= 1) e.lhs = intern(f.child(0));
  if (f.arity() == 2) e.rhs = intern(f.child(1));
  auto id = static_cast<std::uint32_t>(entries_.size());
  entries_.push_back(std::make_unique<Entry>(std::move(e)));
  ids_.emplace(f, id);
  return id;
}

std::uint32_t ContextTable::truth_mask(std::uint32_t id) {
  if (entries_[id]->truth) return *entries_[id]->truth;
  const Formula& f = entries_[id]->f;
  const std::uint32_t full = (std::uint32_t{1} << universe_.size()) - 1;
  std::uint32_t m = 0;
  switch (f.kind()) {
    case Kind::Atom: {
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(atoms_.begin(), atoms_.end(), f.name()) - atoms_.begin());
      for (std::size_t i = 0; i < universe_.size(); ++i)
        if (world_value(universe_[i], pos, atoms_.size())) m |= std::uint32_t{1} << i;
      break;
    }
    case Kind::Falsum: break;
    case Kind::ExtNeg: m = ~truth_mask(entries_[id]->lhs) & full; break;
    case Kind::ExtAnd: m = truth_mask(entries_[id]->lhs) & truth_mask(entries_[id]->rhs); break;
    case Kind::ExtOr: m = truth_mask(entries_[id]->lhs) | truth_mask(entries_[id]->rhs); break;
    case Kind::ExtImp: m = (~truth_mask(entries_[id]->lhs) | truth_mask(entries_[id]->rhs)) & full; break;
    default: throw std::logic_error("truth_mask on an intensional formula");
  }
  entries_[id]->truth = m;
  return m;
}

ContextSet ContextTable::subsets_of(std::uint32_t worlds) const {
  // Nonempty subsets of `worlds` = contexts containing no world outside it.
  ContextSet outside(universe_.size());
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (!((worlds >> i) & 1U)) outside.set(std::uint64_t{1} << i);
  return outside.upward_closure().complement();
}

const ContextSet& ContextTable::asserted(const Formula& f) { return table(intern(f), true); }

const ContextSet& ContextTable::denied(const Formula& f) { return table(intern(f), false); }

const ContextSet& ContextTable::table(std::uint32_t id, bool positive) {
  {
    auto& slot = positive ? entries_[id]->asserted : entries_[id]->denied;
    if (slot) return *slot;
  }
  const Formula f = entries_[id]->f;
  const std::uint32_t l = entries_[id]->lhs;
  const std::uint32_t r = entries_[id]->rhs;
  const std::uint32_t full = (std::uint32_t{1} << universe_.size()) - 1;

  ContextSet result(universe_.size());
  if (f.is_extensional()) {
    const std::uint32_t t = truth_mask(id);
    result = subsets_of(positive ? t : (~t & full));
  } else {
    switch (f.kind()) {
      case Kind::IntNeg:
        result = table(l, !positive);
        break;
      case Kind::IntAnd:
        result = positive ? (table(l, true) & table(r, true)) : (table(l, false) | table(r, false));
        break;
      case Kind::IntOr:
        result = positive ? (table(l, true) | table(r, true)) : (table(l, false) & table(r, false));
        break;
      case Kind::IntImp: {
        const ContextSet& ante = table(l, true);
        if (positive) {
          // No subcontext asserts the antecedent without the consequent.
          result = (ante & table(r, true).complement()).upward_closure().complement();
        } else if (variant_ == Variant::gauker) {
          result = (ante & table(r, false)).upward_closure();
        } else if (variant_ == Variant::nelson) {
          result = ante & table(r, false);
        } else {
          result = (ante & table(r, false).complement()).upward_closure().complement();
        }
        break;
      }
      default:
        throw std::logic_error("table: unreachable");
    }
  }
  auto& slot = positive ? entries_[id]->asserted : entries_[id]->denied;
  slot = std::move(result);
  return *slot;
}

}  // namespace lad
