#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cg2/binpoly.hpp"
#include "cg2/field.hpp"

namespace cg2 {

using BigInt = boost::multiprecision::cpp_int;

// Cyclic code of length n = 2^m - 1 given by its defining zeros alpha^i.
struct CyclicCode {
    FieldSpec spec;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> zeros;  // closed under doubling, sorted
    BinPoly generator;
    std::uint32_t dimension = 0;
};

// Builds the code, closing the zero set over cyclotomic cosets and checking
// that the generator divides x^n - 1.
CyclicCode build_code(CodeId id, const Field& F);

// BCH bound: 1 + the longest circular run of consecutive exponents present.
// zeros_closed must be the full root-exponent set.
std::uint32_t bch_bound(const std::vector<std::uint32_t>& zeros_closed, std::uint32_t n);

// Parameter triple of a dual codeword (Tr(a/x + bx + cx^3))_{x in F_q*}.
struct DualTriple {
    FieldElem a, b, c;
};

struct WeightDistribution {
    std::uint32_t n = 0;
    std::map<std::uint32_t, BigInt> counts;

    BigInt total() const;
    // Nonzero weights present.
    std::set<std::uint32_t> weight_set() const;
    std::uint32_t min_positive_weight() const;

    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) = default;
};

// Weight of one dual codeword: #{x in F_q* : Tr(a/x + bx + cx^3) = 1}.
std::uint32_t dual_word_weight(const DualTriple& t, const Field& F);

struct EnumOptions {
    int threads = 0;              // 0 = hardware concurrency
    bool allow_expensive = false; // unlocks m = 9 (~2^36 x-loop steps)
};

// Exact weight counts over all q^3 parameter triples, by direct trace
// enumeration. Default budget m <= 8; m = 9 behind allow_expensive;
// m >= 10 always refused with a cost estimate.
WeightDistribution dual_weight_distribution(const Field& F, const EnumOptions& opt = {});

// Nonzero weights only.
std::set<std::uint32_t> dual_weight_set(const Field& F, const EnumOptions& opt = {});

// Independent oracle: enumerates the dual code from its own generator
// polynomial (reciprocal of (x^n - 1) / g), expanding all 2^{3m} codewords.
// Budget m <= 6.
WeightDistribution direct_dual_weights_oracle(const Field& F);

// Exact MacWilliams transform via the Krawtchouk recurrence
//   k*K_k(x) = (n - 2x)*K_{k-1}(x) - (n - k + 2)*K_{k-2}(x),
// all in unbounded integers. Input total must be 2^{dual_dim}; any negative
// or non-integral intermediate is a hard failure.
WeightDistribution macwilliams_transform(const WeightDistribution& dist, std::uint32_t n,
                                         std::uint32_t dual_dim);

struct MinDistanceResult {
    int m = 0;
    std::optional<int> exact;   // exact minimum distance when determined
    int lower_bound = 0;        // always valid
    std::string method;         // "macwilliams", "xpoints", or "macwilliams+xpoints"
    std::int64_t good_points = -1;  // from the curve criterion, when run
};

struct MinDistOptions {
    EnumOptions enumeration;
    // Reuse a precomputed dual distribution (e.g. from cache) instead of
    // re-running the big enumeration.
    const WeightDistribution* dual_dist = nullptr;
};

// Minimum distance of C, m >= 5. Exact via MacWilliams on the dual
// distribution for m <= 8 (or whenever dual_dist is supplied); the
// curve-point criterion decides 5 vs >= 7 for all m <= 16: weight-5 words
// correspond to good curve points, weight 6 is impossible since the
// even-weight subcode has 7 consecutive zeros (BCH gives >= 8).
MinDistanceResult min_distance_C(const Field& F, const MinDistOptions& opt = {});

}  // namespace cg2
