#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cg2/field.hpp"

namespace cg2 {

// Polynomial over F2 in up to three variables (x, y, z), stored as a sorted
// set of exponent triples. Addition is symmetric difference (characteristic-2
// cancellation); a term appears iff its coefficient is 1.
class TriPoly {
public:
    using Term = std::array<std::uint16_t, 3>;  // (ex, ey, ez)

    TriPoly() = default;
    explicit TriPoly(std::vector<Term> terms);

    static TriPoly zero() { return TriPoly(); }
    static TriPoly one() { return TriPoly({{0, 0, 0}}); }
    static TriPoly var(int which);  // 0 -> x, 1 -> y, 2 -> z

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Max exponent of the given variable (0 for the zero polynomial).
    std::uint16_t degree_in(int which) const;

    // Coefficient of z^k (or x^k/y^k) as a polynomial in the other variables,
    // with that variable's exponent zeroed out.
    TriPoly coeff_of(int which, std::uint16_t k) const;

    // Formal partial derivative in characteristic 2: term with even exponent
    // in the variable drops, odd exponent decrements.
    TriPoly derivative(int which) const;

    // Substitute squared variables: p(x^2, y^2, z^2) (used for symbolic squares:
    // p^2 = p(x^2,y^2,z^2) over F2).
    TriPoly frobenius() const;

    FieldElem eval(const Field& F, FieldElem x, FieldElem y, FieldElem z) const;

    // Permute the three variables by perm (new exponent order).
    TriPoly permuted(const std::array<int, 3>& perm) const;

    std::string to_string() const;

    friend bool operator==(const TriPoly& a, const TriPoly& b) = default;

private:
    void normalize();  // sorts and cancels duplicate pairs
    std::vector<Term> terms_;
};

TriPoly operator+(const TriPoly& a, const TriPoly& b);
TriPoly operator*(const TriPoly& a, const TriPoly& b);

}  // namespace cg2
