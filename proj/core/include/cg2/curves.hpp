#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cg2/field.hpp"
#include "cg2/multipoly.hpp"

namespace cg2 {

// The plane-intersection curve behind the weight-5 criterion:
//   X = { (x,y,z) : f(x,y,z) = 0 and g(x,y,z) = 0 }
// with the fixed symmetric cubics f and g below. Viewed as quadratics in z,
//   f = a*z^2 + a^2*z + b      a(x,y) = 1 + x + y
//   g = c*z^2 + a*c*z + d      c(x,y) = xy + x + y
// and a*g + c*f = h for an explicit h(x,y) of degree 3 in x.

const TriPoly& poly_f();
const TriPoly& poly_g();
const TriPoly& poly_h();   // bivariate in (x, y); z-exponent always 0
const TriPoly& poly_a();   // 1 + x + y
const TriPoly& poly_c();   // xy + x + y

FieldElem eval_f(const Field& F, FieldElem x, FieldElem y, FieldElem z);
FieldElem eval_g(const Field& F, FieldElem x, FieldElem y, FieldElem z);
FieldElem eval_h(const Field& F, FieldElem x, FieldElem y);

// Symbolic check of a*g + c*f == h over F2[x,y,z].
bool verify_fgh_identity();

// Collects f and g as quadratics in z, verifying the displayed shapes
// (z^2 coefficients a and c, z coefficients a^2 and a*c) and returning the
// constant terms (b, d). Shape mismatch is a hard failure.
std::pair<TriPoly, TriPoly> derive_b_d();

struct XPoint {
    std::uint32_t x = 0, y = 0, z = 0;
    friend auto operator<=>(const XPoint&, const XPoint&) = default;
};

struct XPointSet {
    int m = 0;
    std::vector<XPoint> points;      // sorted, deterministic
    std::int64_t good_count = 0;     // points with {0,1,x,y,z,1+x+y+z} pairwise distinct
};

struct XPointOptions {
    int threads = 0;
    bool allow_expensive = false;  // unlocks 13 <= m <= 16
};

// All F_q-rational points of X, O(q^2): solve f as a quadratic in z per
// (x,y), filter by g; the a(x,y) = 0 locus handled by its own scan.
// Budget: m <= 12 free, m <= 16 behind allow_expensive.
XPointSet x_points(const Field& F, const XPointOptions& opt = {});

// O(q^3) oracle scan, m <= 5.
XPointSet x_points_brute(const Field& F);

bool is_good_point(const Field& F, const XPoint& p);

// Support of a weight-5 codeword of C from a good point: the five positions
// {1, x, y, z, w = 1+x+y+z} as field elements. Verifies the three parity
// relations (sum, sum of cubes, sum of inverses all vanish); rejects
// non-good points.
std::vector<FieldElem> weight5_codeword_from_point(const XPoint& p, const Field& F);

// Points of X where the 2x3 Jacobian of (f, g) drops rank (all three 2x2
// minors vanish). Budget m <= 12.
std::vector<XPoint> x_singular_points(const Field& F, const XPointOptions& opt = {});

// The four points fixed by every symmetry of the construction; both the
// degenerate-solution analysis and the observed rational singular sets
// consist of exactly these for every computed m.
std::vector<XPoint> degenerate_points();

struct WeilCheck {
    std::int64_t count = 0;      // |X(F_q)|
    std::int64_t deviation = 0;  // count - (q + 1)
    std::int64_t bound_sq = 0;   // 48400 * q  (= (220 sqrt q)^2)
    std::int64_t margin = 0;     // bound_sq - deviation^2
    bool ok = false;
};

// |count - (q+1)| <= 220*sqrt(q), compared exactly via squares.
WeilCheck weil_bound_check(const Field& F, std::int64_t point_count);

// q + 1 - ceil(220*sqrt(q)): the guaranteed point-count floor from the bound
// alone. Arithmetic only; no enumeration.
std::int64_t weil_floor(int m);

// Linear-in-x factor search for a cubic-in-x polynomial with F8[y]
// coefficients: looks for A(y)*x + B(y) with deg A <= 2, deg B <= 3,
// A != 0, coefficients in F8, dividing c3*x^3 + c2*x^2 + c1*x + c0.
struct LinearFactor {
    std::vector<std::uint8_t> A;  // F8 coefficients, low degree first
    std::vector<std::uint8_t> B;
};

using YPoly = std::vector<std::uint8_t>;  // F8 coefficients of a poly in y

std::optional<LinearFactor> search_linear_factor(const std::array<YPoly, 4>& c3_to_c0);

// The search applied to h. Finding nothing certifies h has no linear-in-x
// factor with F8 coefficients (and h has x-degree 3, so no factorization at
// all over F8).
std::optional<LinearFactor> h_linear_factor_search();

// h vanishes at (w, w^2) for both primitive cube roots of unity w, with
// formal partials h_x = w, h_y = w^2 there (both nonzero, so the points are
// smooth). Checked inside GF(16), where GF(4) embeds.
bool h_gf4_smooth_check();
// Same check against an arbitrary candidate polynomial (negative controls).
bool gf4_smooth_check_for(const TriPoly& candidate);

// Trace curve y^2 + y = a/x + bx + cx^3 + d. Degenerate (a = 0 or c = 0)
// parameter sets are still countable but flagged.
struct Genus2CurveParams {
    FieldElem a, b, c, d;
};

struct PointCountRecord {
    int m = 0;
    Genus2CurveParams params;
    std::int64_t Z = 0;   // #{x in F_q* : Tr(...) = 0}
    std::int64_t N = 0;   // completed count, defined as 2Z + 2
    std::int64_t a1 = 0;  // N - q - 1
    bool degenerate = false;
};

PointCountRecord genus2_point_count(const Genus2CurveParams& p, const Field& F);

struct CountParity {
    int n_mod_4 = 0;
    int tr_d = 0;
};

// The divisibility-by-4 criterion: requires q > 4, a != 0, c != 0;
// N == 0 (mod 4) iff Tr(d) = 0.
CountParity point_count_parity(const Genus2CurveParams& p, const Field& F);

}  // namespace cg2
