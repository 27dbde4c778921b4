#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cg2/field.hpp"

namespace cg2 {

// Polynomial over F2, bit-packed into 64-bit words (bit i of the sequence =
// coefficient of x^i). Zero polynomial = empty word vector, kept as an
// explicit state: degree() must not be called on it.
class BinPoly {
public:
    BinPoly() = default;  // zero polynomial
    static BinPoly zero() { return BinPoly(); }
    static BinPoly one() { return from_bits({1}); }
    static BinPoly x() { return from_bits({2}); }
    // low word first
    static BinPoly from_bits(std::vector<std::uint64_t> words);
    // monomial x^d
    static BinPoly monomial(std::uint32_t d);
    // x^n + 1
    static BinPoly xn_plus_1(std::uint32_t n);

    bool is_zero() const { return words_.empty(); }
    // Degree of a nonzero polynomial; throws on zero (no -inf sentinel).
    std::uint32_t degree() const;
    int coeff(std::uint32_t i) const;
    std::uint32_t weight() const;  // number of nonzero coefficients
    const std::vector<std::uint64_t>& words() const { return words_; }

    void set_coeff(std::uint32_t i, int bit);

    // Horner evaluation over GF(2^m).
    FieldElem eval(const Field& F, FieldElem at) const;

    // Coefficients reversed: x^deg * p(1/x). Requires nonzero.
    BinPoly reciprocal() const;

    std::string to_string() const;  // e.g. "x^4 + x + 1"

    friend bool operator==(const BinPoly& a, const BinPoly& b) = default;
    friend auto operator<=>(const BinPoly& a, const BinPoly& b) = default;

private:
    void normalize();
    std::vector<std::uint64_t> words_;
};

BinPoly poly_add(const BinPoly& p, const BinPoly& q);
BinPoly poly_mul(const BinPoly& p, const BinPoly& q);
// Quotient and remainder; q must be nonzero.
std::pair<BinPoly, BinPoly> poly_divmod(const BinPoly& p, const BinPoly& q);

// Orbit of i under doubling mod 2^m - 1.
struct CosetSet {
    std::uint32_t representative = 0;       // minimal member
    std::vector<std::uint32_t> members;     // sorted
};

CosetSet cyclotomic_coset(std::int64_t i, int m);

// Minimal polynomial of alpha^i over F2: product of (x + alpha^j) over the
// coset of i, expanded in GF(2^m). Throws ValidationError if any expanded
// coefficient lands outside {0,1} (that would mean a field bug).
BinPoly minimal_poly(std::int64_t i, const Field& F);

// The cyclic codes of interest, by their defining zero exponents:
//   Hamming: {1}      B: {1, 3}      M: {1, -1}      C: {1, -1, 3}
enum class CodeId { Hamming, B, M, C };

const char* code_name(CodeId id);
std::vector<std::int64_t> code_zero_exponents(CodeId id);

// Product of the distinct minimal polynomials of the code's zeros.
// Requires m > 2 (for m <= 2 the factors collapse). Note: at m = 3 the
// cosets of -1 and 3 coincide, so g_C has degree 6 there, not 9.
BinPoly generator_poly(CodeId id, const Field& F);

}  // namespace cg2
