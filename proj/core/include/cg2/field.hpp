#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cg2 {

// GF(2^m), 3 <= m <= 20, with a fixed primitive modulus. Elements are m-bit
// values over the polynomial basis; alpha is the class of x (bits = 2), a
// multiplicative generator because the modulus is primitive.
struct FieldSpec {
    int m = 0;
    std::uint32_t modulus = 0;  // degree-m polynomial, bit i = coeff of x^i
    std::uint32_t q = 0;        // 2^m
};

// Carries the owning field's modulus so cross-field mixing is rejected even
// between two fields of the same degree.
struct FieldElem {
    std::uint32_t bits = 0;
    std::uint32_t modulus = 0;

    friend bool operator==(FieldElem a, FieldElem b) = default;
};

// Carry-less product of two bit-polynomials (no reduction).
std::uint64_t clmul(std::uint64_t a, std::uint64_t b);

// Remainder of a modulo the bit-polynomial mod.
std::uint64_t clmod(std::uint64_t a, std::uint64_t mod);

// Primitivity of a degree-m modulus: x generates the full multiplicative
// group of F2[x]/(mod), i.e. ord(x) = 2^m - 1. This also certifies mod is
// irreducible (a zero divisor could not have full order).
bool is_primitive_modulus(std::uint32_t mod, int m);

// k-th least primitive degree-m polynomial (k = 0 gives the least). Used for
// the default modulus table and for modulus-independence tests.
std::uint32_t nth_least_primitive(int m, int k = 0);

class Field {
public:
    // modulus = 0 picks the least primitive polynomial of degree m.
    explicit Field(int m, std::uint32_t modulus = 0);

    const FieldSpec& spec() const { return spec_; }
    int m() const { return spec_.m; }
    std::uint32_t q() const { return spec_.q; }
    std::uint32_t n() const { return spec_.q - 1; }  // group order

    FieldElem elem(std::uint32_t bits) const;
    FieldElem zero() const { return elem(0); }
    FieldElem one() const { return elem(1); }
    FieldElem alpha() const { return elem(2); }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    // alpha^i, any integer i (normalized mod q-1)
    FieldElem alpha_pow(std::int64_t i) const;
    int trace(FieldElem a) const;
    // roots of z^2 + p*z + r = 0: zero, one, or two of them
    std::vector<FieldElem> solve_artin_schreier(FieldElem p, FieldElem r) const;

    // log of a nonzero element: a = alpha^log(a)
    std::uint32_t log(FieldElem a) const;

    // Unchecked kernels over raw bit patterns (hot loops; no mixing checks).
    std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }
    std::uint32_t raw_inv(std::uint32_t a) const { return antilog_[n() - log_[a]]; }  // a != 0; table is doubled so index n is fine
    std::uint32_t raw_sqr(std::uint32_t a) const { return a ? antilog_[(2 * log_[a]) % n()] : 0; }
    int raw_trace(std::uint32_t a) const { return __builtin_popcount(a & trmask_) & 1; }
    std::uint32_t raw_log(std::uint32_t a) const { return log_[a]; }
    std::uint32_t raw_alog(std::uint32_t i) const { return antilog_[i]; }  // i < 2(q-1)
    // z^2 + z = k solvable? (iff Tr(k) = 0); and one root when it is
    bool raw_as_has(std::uint32_t k) const { return as_has_[k] != 0; }
    std::uint32_t raw_as_root(std::uint32_t k) const { return as_root_[k]; }
    const std::uint32_t* alog_data() const { return antilog_.data(); }
    const std::uint8_t* trbit_data() const { return trbit_.data(); }  // per-element trace bits

    // Definitional trace (m-1 squarings); the mask path must match it.
    int trace_by_squaring(FieldElem a) const;

    std::uint32_t trace_mask() const { return trmask_; }

    std::string modulus_hex() const;

private:
    void check(FieldElem a) const;

    FieldSpec spec_;
    std::vector<std::uint32_t> log_;      // size q, log_[0] unused
    std::vector<std::uint32_t> antilog_;  // size 2(q-1): antilog_[i] = alpha^i, doubled to skip mods
    std::uint32_t trmask_ = 0;            // bit j set iff Tr(x^j) = 1
    std::vector<std::uint32_t> as_root_;  // as_root_[u^2 ^ u] = some root u of z^2+z=k
    std::vector<std::uint8_t> as_has_;    // whether k = u^2+u is attained
    std::vector<std::uint8_t> trbit_;     // trbit_[v] = Tr(v), hot-loop table
};

// Free-function spellings.
FieldElem fe_add(const Field& F, FieldElem a, FieldElem b);
FieldElem fe_mul(const Field& F, FieldElem a, FieldElem b);
FieldElem fe_inv(const Field& F, FieldElem a);
FieldElem alpha_pow(std::int64_t i, const Field& F);
int fe_trace(const Field& F, FieldElem a);

}  // namespace cg2
