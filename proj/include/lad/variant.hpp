#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lad {

// Denial clause used for intensional implication.
//   gauker     denied iff some subcontext asserts the antecedent and denies the consequent
//   nelson     denied iff the context asserts the antecedent and denies the consequent
//   connexive  denied iff every subcontext asserting the antecedent denies the consequent
enum class Variant { gauker, nelson, connexive };

inline constexpr Variant kAllVariants[] = {Variant::gauker, Variant::nelson, Variant::connexive};

std::string_view variant_name(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

}  // namespace lad
