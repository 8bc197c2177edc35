#pragma once

#include <string>

namespace bqsolve {

/// Variable domain of a binary quadratic model. SPIN variables take values
/// in {-1, +1}, BINARY variables in {0, 1}.
enum class Vartype { SPIN, BINARY };

/// Smallest value of the domain (-1 for SPIN, 0 for BINARY).
constexpr int domain_low(Vartype vt) noexcept {
  return vt == Vartype::SPIN ? -1 : 0;
}

/// Largest value of the domain (+1 for both).
constexpr int domain_high(Vartype) noexcept { return 1; }

constexpr bool in_domain(Vartype vt, int value) noexcept {
  return value == domain_low(vt) || value == domain_high(vt);
}

std::string to_string(Vartype vt);

/// Parses "SPIN" or "BINARY" (exact spelling); throws std::invalid_argument
/// otherwise.
Vartype parse_vartype(const std::string& text);

}  // namespace bqsolve
