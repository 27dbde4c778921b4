#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cg2/errors.hpp"
#include "cg2/field.hpp"

using namespace cg2;

TEST_CASE("least primitive moduli match the classical tables") {
    // standard primitive trinomials/pentanomials, lowest-lexicographic per degree
    CHECK(nth_least_primitive(3) == 0xb);     // x^3+x+1
    CHECK(nth_least_primitive(4) == 0x13);    // x^4+x+1
    CHECK(nth_least_primitive(5) == 0x25);    // x^5+x^2+1
    CHECK(nth_least_primitive(6) == 0x43);    // x^6+x+1
    CHECK(nth_least_primitive(7) == 0x83);    // x^7+x+1
    CHECK(nth_least_primitive(8) == 0x11d);
    CHECK(nth_least_primitive(9) == 0x211);
    CHECK(nth_least_primitive(10) == 0x409);
    CHECK(nth_least_primitive(12) == 0x1053);
    CHECK(nth_least_primitive(16) == 0x1002d);
    CHECK(nth_least_primitive(20) == 0x100009);
    CHECK(nth_least_primitive(6, 1) == 0x5b);  // second-least, for modulus independence
}

TEST_CASE("primitivity validation rejects bad moduli") {
    CHECK(!is_primitive_modulus(0x13, 5));       // wrong degree
    CHECK(!is_primitive_modulus(0x14, 4));       // divisible by x
    CHECK(!is_primitive_modulus((1 << 4) | 0x1, 4));  // x^4+1 = (x+1)^4
    // x^4+x^3+x^2+x+1 is irreducible but has order 5, not 15
    CHECK(!is_primitive_modulus(0x1f, 4));
    CHECK_THROWS_AS(Field(4, 0x1f), ConfigError);
    CHECK_THROWS_AS(Field(2), ConfigError);
    CHECK_THROWS_AS(Field(21), ConfigError);
}

TEST_CASE("basic arithmetic in GF(16)") {
    const Field F(4, 0x13);
    // x * x^3 = x^4 = x + 1
    CHECK(F.mul(F.elem(0b0010), F.elem(0b1000)) == F.elem(0b0011));
    CHECK(F.add(F.elem(0b0011), F.elem(0b0101)) == F.elem(0b0110));
    const FieldElem a = F.elem(0b1011);
    CHECK(F.add(a, a) == F.zero());
    CHECK(F.mul(a, F.one()) == a);
    // alpha^5 * alpha^{q-6} = alpha^{q-1} = 1
    CHECK(F.mul(F.alpha_pow(5), F.alpha_pow(F.q() - 6)) == F.one());
    // inv(x) = x^3 + 1 here: x*(x^3+1) = x^4+x = 1
    CHECK(F.inv(F.alpha()) == F.elem(0b1001));
    CHECK(F.mul(F.inv(F.alpha()), F.alpha()) == F.one());
    CHECK(F.inv(F.one()) == F.one());
    CHECK_THROWS_AS(F.inv(F.zero()), ConfigError);
}

TEST_CASE("mixed-field inputs are rejected") {
    const Field F(4), G(5), F2(6, 0x43), F2b(6, 0x5b);
    CHECK_THROWS_AS(F.add(F.one(), G.one()), ConfigError);
    CHECK_THROWS_AS(F.mul(F.one(), G.one()), ConfigError);
    // same degree, different modulus: still rejected
    CHECK_THROWS_AS(F2.add(F2.one(), F2b.one()), ConfigError);
}

TEST_CASE("alpha powers cover the whole multiplicative group") {
    for (int m : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) {
        const Field F(m);
        std::set<std::uint32_t> seen;
        for (std::uint32_t i = 0; i < F.n(); ++i) seen.insert(F.alpha_pow(i).bits);
        CHECK(seen.size() == F.n());
        CHECK(!seen.count(0));
        CHECK(F.alpha_pow(0) == F.one());
        CHECK(F.alpha_pow(F.n()) == F.one());
        CHECK(F.mul(F.alpha_pow(-1), F.alpha_pow(1)) == F.one());
    }
}

TEST_CASE("field laws on random samples, m = 3..12") {
    std::mt19937 rng(12345);
    for (int m = 3; m <= 12; ++m) {
        const Field F(m);
        std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
        for (int t = 0; t < 1000; ++t) {
            const FieldElem a = F.elem(pick(rng)), b = F.elem(pick(rng)), c = F.elem(pick(rng));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
}

TEST_CASE("inversion is an involution (exhaustive, m <= 8)") {
    for (int m : {3, 4, 5, 6, 7, 8}) {
        const Field F(m);
        for (std::uint32_t v = 1; v < F.q(); ++v) {
            const FieldElem a = F.elem(v);
            CHECK(F.inv(F.inv(a)) == a);
            CHECK(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("trace: mask table matches the definitional computation") {
    for (int m = 3; m <= 10; ++m) {
        const Field F(m);
        std::uint32_t zeros = 0;
        for (std::uint32_t v = 0; v < F.q(); ++v) {
            const FieldElem a = F.elem(v);
            CHECK(F.trace(a) == F.trace_by_squaring(a));
            if (F.trace(a) == 0) ++zeros;
        }
        CHECK(zeros == F.q() / 2);  // kernel of a surjective F2-linear map
        CHECK(F.trace(F.zero()) == 0);
    }
}

TEST_CASE("trace linearity and Frobenius invariance (exhaustive, m <= 8)") {
    for (int m : {4, 6, 8}) {
        const Field F(m);
        for (std::uint32_t v = 0; v < F.q(); ++v) {
            const FieldElem a = F.elem(v);
            CHECK(F.trace(F.mul(a, a)) == F.trace(a));
            for (std::uint32_t u = 0; u < F.q(); u += 3) {
                const FieldElem b = F.elem(u);
                CHECK(F.trace(F.add(a, b)) == (F.trace(a) ^ F.trace(b)));
            }
        }
    }
}

TEST_CASE("two multiplication paths agree exhaustively at m <= 8") {
    for (int m : {3, 5, 8}) {
        const Field F(m);
        for (std::uint32_t a = 0; a < F.q(); ++a)
            for (std::uint32_t b = 0; b < F.q(); ++b) {
                const std::uint32_t via_clmul =
                    static_cast<std::uint32_t>(clmod(clmul(a, b), F.spec().modulus));
                CHECK(F.raw_mul(a, b) == via_clmul);
            }
    }
}

TEST_CASE("artin-schreier solver: trivial cases") {
    const Field F(6);
    // p=0, r=0: unique root 0
    auto roots = F.solve_artin_schreier(F.zero(), F.zero());
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == F.zero());
    // p=1, r=0: z^2+z = z(z+1)
    roots = F.solve_artin_schreier(F.one(), F.zero());
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == F.zero() && roots[1] == F.one()) ||
           (roots[0] == F.one() && roots[1] == F.zero())));
}

TEST_CASE("artin-schreier solver agrees with exhaustive scan at m = 4, 5") {
    for (int m : {4, 5}) {
        const Field F(m);
        for (std::uint32_t pb = 0; pb < F.q(); ++pb)
            for (std::uint32_t rb = 0; rb < F.q(); ++rb) {
                const FieldElem p = F.elem(pb), r = F.elem(rb);
                std::set<std::uint32_t> expect;
                for (std::uint32_t zb = 0; zb < F.q(); ++zb) {
                    const FieldElem z = F.elem(zb);
                    if (F.add(F.add(F.mul(z, z), F.mul(p, z)), r) == F.zero()) expect.insert(zb);
                }
                std::set<std::uint32_t> got;
                for (const FieldElem& z : F.solve_artin_schreier(p, r)) got.insert(z.bits);
                CHECK(got == expect);
                if (pb != 0) {
                    // two roots iff Tr(r / p^2) = 0
                    const FieldElem k = F.mul(r, F.inv(F.mul(p, p)));
                    CHECK(got.size() == (F.trace(k) == 0 ? 2u : 0u));
                }
            }
    }
}

TEST_CASE("random no-root cases verified by scanning all candidates") {
    const Field F(7);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::uint32_t> pick(1, F.q() - 1);
    int no_root_seen = 0;
    while (no_root_seen < 50) {
        const FieldElem p = F.elem(pick(rng)), r = F.elem(pick(rng));
        const FieldElem k = F.mul(r, F.inv(F.mul(p, p)));
        if (F.trace(k) != 0) {
            ++no_root_seen;
            CHECK(F.solve_artin_schreier(p, r).empty());
            for (std::uint32_t zb = 0; zb < F.q(); ++zb) {
                const FieldElem z = F.elem(zb);
                CHECK(F.add(F.add(F.mul(z, z), F.mul(p, z)), r) != F.zero());
            }
        }
    }
}
