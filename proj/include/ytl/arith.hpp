#pragma once

#include <cstdint>
#include <span>

#include "ytl/errors.hpp"

namespace ytl {

/// All counts and multiplicities are exact 64-bit unsigned integers.
/// Every operation that could wrap goes through the checked_* helpers
/// below and throws OverflowError instead of wrapping.
using Uint = std::uint64_t;

Uint checked_add(Uint a, Uint b);
Uint checked_sub(Uint a, Uint b); // throws on underflow
Uint checked_mul(Uint a, Uint b);
Uint checked_pow(Uint base, unsigned exp);

Uint factorial(unsigned n);
Uint binomial(unsigned n, unsigned k);

/// n! / (k_0! k_1! ... k_{d-1}!) for k_i summing to n.
Uint multinomial(unsigned n, std::span<const unsigned> ks);

} // namespace ytl
