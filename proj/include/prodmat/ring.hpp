#pragma once

#include <concepts>
#include <optional>

#include "prodmat/rational.hpp"

namespace prodmat {

// Commutative-ring contract used by every matrix / polynomial routine:
// add, mul, neg, equality, and 0/1 via construction from long. Inversion is
// optional and reached through unqualified try_inv (ADL).
template <typename R>
concept Ring = std::regular<R> && std::constructible_from<R, long> &&
    requires(const R a, const R b) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
    };

template <typename R>
inline constexpr bool is_field_v = false;
template <>
inline constexpr bool is_field_v<Rational> = true;

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace prodmat
