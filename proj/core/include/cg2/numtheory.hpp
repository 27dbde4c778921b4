#pragma once

#include <cstdint>

namespace cg2 {

// Floor square root. n must be non-negative.
std::int64_t isqrt(std::int64_t n);

bool is_perfect_square(std::int64_t n);

// Square in the 2-adic integers: n = 2^r * u with u odd is a square iff
// r is even and u == 1 (mod 8). Conventions: 0 -> true, negative -> false
// (-1 extracts to a unit == 7 mod 8).
bool two_adic_square(std::int64_t n);

// No prime square divides n. Conventions: 0 -> false (every p^2 divides 0),
// sign ignored. Trial division; inputs here are tiny.
bool is_squarefree(std::int64_t n);

// Smallest prime p with p^2 | n, or 0 if n is squarefree (or |n| = 1).
// n = 0 -> returns 2 (everything divides 0).
std::int64_t smallest_square_divisor(std::int64_t n);

// Weight intervals for the dual code at extension degree m.
//
// I is the outer interval: every dual weight lies in it.
//   m even: I = [q/2 - 2*sqrt(q), q/2 + 2*sqrt(q) - 1]
//   m odd:  I = [q/2 - floor(2*sqrt(q)), q/2 + floor(2*sqrt(q)) - 1]
// J is the inner interval: every even integer in it occurs as a weight.
//   m even: J = [q/2 - 2*sqrt(q) + q^{1/4} - 1/2, q/2 + 2*sqrt(q) - q^{1/4} - 1/2]
//   m odd:  J = [q/2 - 2*sqrt(q) + (8q)^{1/4} - 1/2, symmetric upper end]
// j_lo/j_hi are the integer hull of the real interval J. Membership of an
// integer in J is decided by exact comparisons (isolate the radical, square);
// for 4 not dividing m these radicals are irrational and floating point would
// be a correctness bug.
struct Intervals {
    int m = 0;
    std::int64_t i_lo = 0, i_hi = 0;
    std::int64_t j_lo = 0, j_hi = 0;

    bool in_I(std::int64_t w) const { return i_lo <= w && w <= i_hi; }
    bool in_J(std::int64_t w) const { return j_lo <= w && w <= j_hi; }
};

// Exact membership test for the real interval J (works for any integer w).
bool weight_in_J(int m, std::int64_t w);

// Requires m >= 5.
Intervals intervals(int m);

}  // namespace cg2
