#include "ytl/arith.hpp"

#include <numeric>

namespace ytl {

Uint checked_add(Uint a, Uint b) {
    Uint r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Uint checked_sub(Uint a, Uint b) {
    if (b > a)
        throw OverflowError("integer underflow in subtraction");
    return a - b;
}

Uint checked_mul(Uint a, Uint b) {
    Uint r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Uint checked_pow(Uint base, unsigned exp) {
    Uint r = 1;
    for (unsigned i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

Uint factorial(unsigned n) {
    Uint r = 1;
    for (unsigned k = 2; k <= n; ++k)
        r = checked_mul(r, k);
    return r;
}

Uint binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    // Multiplicative form with gcd reduction. After reducing num/den,
    // den divides the running value exactly, and every intermediate is
    // itself a binomial coefficient bounded by the result, so this
    // throws only when the result truly overflows.
    Uint r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        Uint num = n - k + i;
        Uint den = i;
        Uint g = std::gcd(num, den);
        num /= g;
        den /= g;
        r = checked_mul(r / den, num);
    }
    return r;
}

Uint multinomial(unsigned n, std::span<const unsigned> ks) {
    Uint r = 1;
    unsigned rest = n;
    for (unsigned k : ks) {
        r = checked_mul(r, binomial(rest, k));
        rest -= k;
    }
    return r;
}

} // namespace ytl
