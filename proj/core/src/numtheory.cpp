#include "cg2/numtheory.hpp"

#include <cassert>
#include <stdexcept>

#include "cg2/errors.hpp"

namespace cg2 {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw ConfigError("isqrt: negative input");
    if (n < 2) return n;
    // bit-by-bit; exact for the full int64 range, unlike sqrt()
    std::int64_t r = 0;
    std::int64_t bit = std::int64_t(1) << ((63 - __builtin_clzll(static_cast<unsigned long long>(n))) / 2 * 2);
    while (bit) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    std::int64_t r = isqrt(n);
    return r * r == n;
}

bool two_adic_square(std::int64_t n) {
    if (n == 0) return true;
    if (n < 0) return false;
    int r = __builtin_ctzll(static_cast<unsigned long long>(n));
    std::int64_t u = n >> r;
    return (r % 2 == 0) && (u % 8 == 1);
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
        while (n % d == 0) n /= d;
    }
    return true;
}

std::int64_t smallest_square_divisor(std::int64_t n) {
    if (n == 0) return 2;
    if (n < 0) n = -n;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return d;
        while (n % d == 0) n /= d;
    }
    return 0;
}

bool weight_in_J(int m, std::int64_t w) {
    const std::int64_t q = std::int64_t(1) << m;
    if (m % 2 == 0) {
        // both ends involve only q^{1/4} = 2^{m/4} (irrational unless 4 | m);
        // w >= q/2 - 2*sqrt(q) + q^{1/4} - 1/2 with sqrt(q) = 2^{m/2} exact:
        //   (2(w - A) + 1)^2 >= 4*sqrt(q), A = q/2 - 2*sqrt(q)
        const std::int64_t sq = std::int64_t(1) << (m / 2);
        const std::int64_t A = q / 2 - 2 * sq;
        const std::int64_t B = q / 2 + 2 * sq;
        const std::int64_t lo = 2 * (w - A) + 1;
        const bool ok_lo = lo > 0 && lo * lo >= 4 * sq;
        const std::int64_t hi = 2 * (B - w) - 1;
        const bool ok_hi = hi > 0 && hi * hi >= 4 * sq;
        return ok_lo && ok_hi;
    }
    if (m % 4 == 1) {
        // (8q)^{1/4} = 2^{(m+3)/4} is an integer; only 2*sqrt(q) is irrational.
        // w >= q/2 + t4 - 1/2 - 2*sqrt(q)  <=>  4*sqrt(q) >= 2(q/2 + t4 - w) - 1
        const std::int64_t t4 = std::int64_t(1) << ((m + 3) / 4);
        const std::int64_t X = 2 * (q / 2 + t4 - w) - 1;
        const bool ok_lo = X <= 0 || X * X <= 16 * q;
        const std::int64_t Y = 2 * (w - q / 2 + t4) + 1;  // upper end, mirrored
        const bool ok_hi = Y <= 0 || Y * Y <= 16 * q;
        return ok_lo && ok_hi;
    }
    // m == 3 (mod 4): 2*sqrt(q) - (8q)^{1/4} = sqrt(2) * D with
    // D = 2^{(m+1)/2} - 2^{(m+1)/4} an integer, so the two radicals collapse.
    // w >= q/2 - 1/2 - sqrt(2)*D  <=>  2*sqrt(2)*D >= q - 1 - 2w
    const std::int64_t D = (std::int64_t(1) << ((m + 1) / 2)) - (std::int64_t(1) << ((m + 1) / 4));
    const std::int64_t L = q - 1 - 2 * w;
    const bool ok_lo = L <= 0 || L * L <= 8 * D * D;
    const std::int64_t R = 2 * w + 1 - q;
    const bool ok_hi = R <= 0 || R * R <= 8 * D * D;
    return ok_lo && ok_hi;
}

Intervals intervals(int m) {
    if (m < 5) throw ConfigError("intervals: m must be >= 5");
    const std::int64_t q = std::int64_t(1) << m;
    Intervals iv;
    iv.m = m;
    std::int64_t f2s;  // floor(2*sqrt(q)), exact for even m
    if (m % 2 == 0) {
        f2s = std::int64_t(2) << (m / 2);
    } else {
        f2s = isqrt(4 * q);
    }
    iv.i_lo = q / 2 - f2s;
    iv.i_hi = q / 2 + f2s - 1;
    std::int64_t lo = iv.i_lo;
    while (!weight_in_J(m, lo)) ++lo;
    std::int64_t hi = iv.i_hi;
    while (!weight_in_J(m, hi)) --hi;
    iv.j_lo = lo;
    iv.j_hi = hi;
    assert(iv.i_lo <= iv.j_lo && iv.j_lo <= iv.j_hi && iv.j_hi <= iv.i_hi);
    return iv;
}

}  // namespace cg2
