#include "cg2/curves.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cg2/errors.hpp"
#include "cg2/numtheory.hpp"

namespace cg2 {

namespace {

TriPoly make_f() {
    return TriPoly({
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
        {2, 0, 0}, {0, 2, 0}, {0, 0, 2},
        {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2},
    });
}

TriPoly make_g() {
    return TriPoly({
        {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2},
        {1, 1, 1},
        {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
        {2, 1, 1}, {1, 2, 1}, {1, 1, 2},
    });
}

TriPoly make_h() {
    // (y^2+y+1)x^3 + (y^3+1)x^2 + (y^3+y)x + (y^3+y^2)
    return TriPoly({
        {3, 2, 0}, {3, 1, 0}, {3, 0, 0},
        {2, 3, 0}, {2, 0, 0},
        {1, 3, 0}, {1, 1, 0},
        {0, 3, 0}, {0, 2, 0},
    });
}

TriPoly make_a() { return TriPoly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}); }
TriPoly make_c() { return TriPoly({{1, 1, 0}, {1, 0, 0}, {0, 1, 0}}); }

}  // namespace

const TriPoly& poly_f() { static const TriPoly p = make_f(); return p; }
const TriPoly& poly_g() { static const TriPoly p = make_g(); return p; }
const TriPoly& poly_h() { static const TriPoly p = make_h(); return p; }
const TriPoly& poly_a() { static const TriPoly p = make_a(); return p; }
const TriPoly& poly_c() { static const TriPoly p = make_c(); return p; }

FieldElem eval_f(const Field& F, FieldElem x, FieldElem y, FieldElem z) {
    return poly_f().eval(F, x, y, z);
}
FieldElem eval_g(const Field& F, FieldElem x, FieldElem y, FieldElem z) {
    return poly_g().eval(F, x, y, z);
}
FieldElem eval_h(const Field& F, FieldElem x, FieldElem y) {
    return poly_h().eval(F, x, y, F.zero());
}

bool verify_fgh_identity() {
    const TriPoly lhs = poly_a() * poly_g() + poly_c() * poly_f();
    return lhs == poly_h();
}

std::pair<TriPoly, TriPoly> derive_b_d() {
    const TriPoly& f = poly_f();
    const TriPoly& g = poly_g();
    const TriPoly a = poly_a();
    const TriPoly c = poly_c();
    if (f.degree_in(2) != 2 || g.degree_in(2) != 2)
        throw ValidationError("derive_b_d: f, g are not quadratics in z");
    if (f.coeff_of(2, 2) != a) throw ValidationError("derive_b_d: z^2 coefficient of f is not a");
    if (f.coeff_of(2, 1) != a.frobenius())
        throw ValidationError("derive_b_d: z coefficient of f is not a^2");
    if (g.coeff_of(2, 2) != c) throw ValidationError("derive_b_d: z^2 coefficient of g is not c");
    if (g.coeff_of(2, 1) != a * c)
        throw ValidationError("derive_b_d: z coefficient of g is not a*c");
    return {f.coeff_of(2, 0), g.coeff_of(2, 0)};
}

namespace {

// raw g evaluation for the point-enumeration hot path
inline std::uint32_t raw_g(const Field& F, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    const std::uint32_t x2 = F.raw_sqr(x), y2 = F.raw_sqr(y), z2 = F.raw_sqr(z);
    const std::uint32_t xy = F.raw_mul(x, y), xz = F.raw_mul(x, z), yz = F.raw_mul(y, z);
    std::uint32_t acc = F.raw_mul(x2, y) ^ F.raw_mul(x2, z) ^ F.raw_mul(y2, x) ^ F.raw_mul(y2, z) ^
                        F.raw_mul(z2, x) ^ F.raw_mul(z2, y);
    acc ^= F.raw_mul(xy, z);
    acc ^= xy ^ xz ^ yz;
    acc ^= F.raw_mul(x2, yz) ^ F.raw_mul(F.raw_mul(y2, x), z) ^ F.raw_mul(xy, z2);
    return acc;
}

inline std::uint32_t raw_f(const Field& F, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    const std::uint32_t x2 = F.raw_sqr(x), y2 = F.raw_sqr(y), z2 = F.raw_sqr(z);
    return x ^ y ^ z ^ x2 ^ y2 ^ z2 ^ F.raw_mul(x2, y) ^ F.raw_mul(x2, z) ^ F.raw_mul(y2, x) ^
           F.raw_mul(y2, z) ^ F.raw_mul(z2, x) ^ F.raw_mul(z2, y);
}

// b(x,y): the z-free part of f
inline std::uint32_t raw_b(const Field& F, std::uint32_t x, std::uint32_t y) {
    const std::uint32_t x2 = F.raw_sqr(x), y2 = F.raw_sqr(y);
    return x ^ y ^ x2 ^ y2 ^ F.raw_mul(x2, y) ^ F.raw_mul(x, y2);
}

// d(x,y): the z-free part of g
inline std::uint32_t raw_d(const Field& F, std::uint32_t x, std::uint32_t y) {
    const std::uint32_t x2 = F.raw_sqr(x), y2 = F.raw_sqr(y);
    return F.raw_mul(x2, y) ^ F.raw_mul(y2, x) ^ F.raw_mul(x, y);
}

inline std::uint32_t raw_sqrt(const Field& F, std::uint32_t v) {
    for (int s = 1; s < F.m(); ++s) v = F.raw_sqr(v);
    return v;
}

}  // namespace

bool is_good_point([[maybe_unused]] const Field& F, const XPoint& p) {
    const std::uint32_t w = 1u ^ p.x ^ p.y ^ p.z;
    std::uint32_t vals[6] = {0u, 1u, p.x, p.y, p.z, w};
    std::sort(std::begin(vals), std::end(vals));
    return std::adjacent_find(std::begin(vals), std::end(vals)) == std::end(vals);
}

XPointSet x_points(const Field& F, const XPointOptions& opt) {
    const int m = F.m();
    if (m > 16) throw BudgetError("x_points: m > 16 unsupported (O(q^2) would exceed 2^32 pairs)");
    if (m > 12 && !opt.allow_expensive)
        throw BudgetError("x_points: m = " + std::to_string(m) +
                          " costs about 2^" + std::to_string(2 * m) +
                          " quadratic solves; pass --allow-expensive to run it");
    const std::uint32_t q = F.q();
    int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (static_cast<std::uint32_t>(threads) > q) threads = static_cast<int>(q);

    std::vector<std::vector<XPoint>> parts(threads);
    std::vector<std::int64_t> goods(threads, 0);
    std::atomic<std::uint32_t> next_x{0};

    auto worker = [&](int tid) {
        auto& out = parts[tid];
        std::int64_t good = 0;
        for (;;) {
            const std::uint32_t x = next_x.fetch_add(1);
            if (x >= q) break;
            for (std::uint32_t y = 0; y < q; ++y) {
                const std::uint32_t a = 1u ^ x ^ y;
                const std::uint32_t b = raw_b(F, x, y);
                if (a != 0) {
                    // f = a z^2 + a^2 z + b: substitute z = a*u, u^2 + u = b / a^3
                    const std::uint32_t a3 = F.raw_mul(F.raw_sqr(a), a);
                    const std::uint32_t k = b ? F.raw_mul(b, F.raw_inv(a3)) : 0;
                    if (!F.raw_as_has(k)) continue;
                    const std::uint32_t z1 = F.raw_mul(a, F.raw_as_root(k));
                    for (const std::uint32_t z : {z1, z1 ^ a}) {
                        if (raw_g(F, x, y, z) != 0) continue;
                        const XPoint p{x, y, z};
                        out.push_back(p);
                        if (is_good_point(F, p)) ++good;
                    }
                } else {
                    // y = 1 + x: f is constant in z here (f = b)
                    if (b != 0) continue;
                    const std::uint32_t c = F.raw_mul(x, y) ^ x ^ y;
                    const std::uint32_t d = raw_d(F, x, y);
                    if (c != 0) {
                        // g = c z^2 + d
                        const std::uint32_t z = raw_sqrt(F, d ? F.raw_mul(d, F.raw_inv(c)) : 0);
                        const XPoint p{x, y, z};
                        out.push_back(p);
                        if (is_good_point(F, p)) ++good;
                    } else if (d == 0) {
                        for (std::uint32_t z = 0; z < q; ++z) {
                            const XPoint p{x, y, z};
                            out.push_back(p);
                            if (is_good_point(F, p)) ++good;
                        }
                    }
                }
            }
        }
        goods[tid] = good;
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();

    XPointSet set;
    set.m = m;
    for (auto& p : parts) {
        set.points.insert(set.points.end(), p.begin(), p.end());
        p.clear();
    }
    std::sort(set.points.begin(), set.points.end());
    for (std::int64_t g : goods) set.good_count += g;
    return set;
}

XPointSet x_points_brute(const Field& F) {
    if (F.m() > 5) throw BudgetError("x_points_brute: O(q^3) oracle capped at m <= 5");
    const std::uint32_t q = F.q();
    XPointSet set;
    set.m = F.m();
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y)
            for (std::uint32_t z = 0; z < q; ++z)
                if (raw_f(F, x, y, z) == 0 && raw_g(F, x, y, z) == 0) {
                    const XPoint p{x, y, z};
                    set.points.push_back(p);
                    if (is_good_point(F, p)) ++set.good_count;
                }
    return set;
}

std::vector<FieldElem> weight5_codeword_from_point(const XPoint& p, const Field& F) {
    if (!is_good_point(F, p))
        throw ConfigError("weight5_codeword_from_point: not a good point");
    const std::uint32_t w = 1u ^ p.x ^ p.y ^ p.z;
    const std::vector<FieldElem> support = {F.one(), F.elem(p.x), F.elem(p.y), F.elem(p.z),
                                            F.elem(w)};
    std::uint32_t sum = 0, cubes = 0, invs = 0;
    for (const FieldElem& s : support) {
        sum ^= s.bits;
        cubes ^= F.raw_mul(F.raw_sqr(s.bits), s.bits);
        invs ^= F.raw_inv(s.bits);
    }
    if (sum || cubes || invs)
        throw ValidationError("weight5_codeword_from_point: parity relations failed");
    return support;
}

std::vector<XPoint> degenerate_points() {
    return {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
}

std::vector<XPoint> x_singular_points(const Field& F, const XPointOptions& opt) {
    if (F.m() > 12) throw BudgetError("x_singular_points: capped at m <= 12");
    const XPointSet set = x_points(F, opt);
    static const TriPoly fx = poly_f().derivative(0);
    static const TriPoly fy = poly_f().derivative(1);
    static const TriPoly fz = poly_f().derivative(2);
    static const TriPoly gx = poly_g().derivative(0);
    static const TriPoly gy = poly_g().derivative(1);
    static const TriPoly gz = poly_g().derivative(2);
    std::vector<XPoint> out;
    for (const XPoint& p : set.points) {
        const FieldElem x = F.elem(p.x), y = F.elem(p.y), z = F.elem(p.z);
        const std::uint32_t vfx = fx.eval(F, x, y, z).bits;
        const std::uint32_t vfy = fy.eval(F, x, y, z).bits;
        const std::uint32_t vfz = fz.eval(F, x, y, z).bits;
        const std::uint32_t vgx = gx.eval(F, x, y, z).bits;
        const std::uint32_t vgy = gy.eval(F, x, y, z).bits;
        const std::uint32_t vgz = gz.eval(F, x, y, z).bits;
        const std::uint32_t m1 = F.raw_mul(vfx, vgy) ^ F.raw_mul(vfy, vgx);
        const std::uint32_t m2 = F.raw_mul(vfx, vgz) ^ F.raw_mul(vfz, vgx);
        const std::uint32_t m3 = F.raw_mul(vfy, vgz) ^ F.raw_mul(vfz, vgy);
        if (m1 == 0 && m2 == 0 && m3 == 0) out.push_back(p);
    }
    return out;
}

WeilCheck weil_bound_check(const Field& F, std::int64_t point_count) {
    WeilCheck w;
    w.count = point_count;
    const std::int64_t q = F.q();
    w.deviation = point_count - (q + 1);
    w.bound_sq = 48400 * q;  // (220 sqrt q)^2
    w.margin = w.bound_sq - w.deviation * w.deviation;
    w.ok = w.margin >= 0;
    return w;
}

std::int64_t weil_floor(int m) {
    const std::int64_t q = std::int64_t(1) << m;
    std::int64_t s = isqrt(48400 * q);
    if (s * s < 48400 * q) ++s;  // ceil
    return q + 1 - s;
}

namespace {

// fixed-capacity F8[y] polynomials for the factor search
struct P16 {
    std::array<std::uint8_t, 16> c{};
    int len = 0;  // coefficients 0..len-1 may be nonzero
};

struct F8 {
    std::uint8_t mul[8][8];
    F8() {
        const Field f(3);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) mul[a][b] = static_cast<std::uint8_t>(f.raw_mul(a, b));
    }
};

const F8& f8() {
    static const F8 t;
    return t;
}

P16 pmul(const P16& a, const P16& b) {
    P16 r;
    if (a.len == 0 || b.len == 0) return r;
    r.len = a.len + b.len - 1;
    const auto& M = f8().mul;
    for (int i = 0; i < a.len; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < b.len; ++j) r.c[i + j] ^= M[a.c[i]][b.c[j]];
    }
    return r;
}

void pxor(P16& a, const P16& b) {
    for (int i = 0; i < b.len; ++i) a.c[i] ^= b.c[i];
    if (b.len > a.len) a.len = b.len;
}

bool pzero(const P16& a) {
    for (int i = 0; i < a.len; ++i)
        if (a.c[i]) return false;
    return true;
}

P16 from_bits(std::initializer_list<int> coeffs) {
    P16 p;
    for (int v : coeffs) p.c[p.len++] = static_cast<std::uint8_t>(v);
    while (p.len && !p.c[p.len - 1]) --p.len;
    return p;
}

P16 from_ypoly(const YPoly& v) {
    P16 p;
    for (std::uint8_t x : v) p.c[p.len++] = x;
    while (p.len && !p.c[p.len - 1]) --p.len;
    return p;
}

YPoly to_ypoly(const P16& p) {
    YPoly v(p.c.begin(), p.c.begin() + p.len);
    return v;
}

}  // namespace

std::optional<LinearFactor> search_linear_factor(const std::array<YPoly, 4>& cs) {
    // A(y)x + B(y) divides iff the cubic vanishes at x = B/A:
    //   c3 B^3 + c2 B^2 A + c1 B A^2 + c0 A^3 = 0 in F8[y]
    const P16 c3 = from_ypoly(cs[0]), c2 = from_ypoly(cs[1]), c1 = from_ypoly(cs[2]),
              c0 = from_ypoly(cs[3]);

    // all B = b0 + b1 y + b2 y^2 + b3 y^3 with F8 coefficients
    std::vector<P16> Bs(4096), B2s(4096), c3B3s(4096);
    for (int code = 0; code < 4096; ++code) {
        P16 B = from_bits({code & 7, (code >> 3) & 7, (code >> 6) & 7, (code >> 9) & 7});
        Bs[code] = B;
        B2s[code] = pmul(B, B);
        c3B3s[code] = pmul(c3, pmul(B2s[code], B));
    }

    for (int acode = 1; acode < 512; ++acode) {
        const P16 A = from_bits({acode & 7, (acode >> 3) & 7, (acode >> 6) & 7});
        if (A.len == 0) continue;
        const P16 A2 = pmul(A, A);
        const P16 c2A = pmul(c2, A);
        const P16 c1A2 = pmul(c1, A2);
        const P16 c0A3 = pmul(c0, pmul(A2, A));
        for (int bcode = 0; bcode < 4096; ++bcode) {
            P16 acc = c3B3s[bcode];
            pxor(acc, pmul(c2A, B2s[bcode]));
            pxor(acc, pmul(c1A2, Bs[bcode]));
            pxor(acc, c0A3);
            if (pzero(acc)) return LinearFactor{to_ypoly(A), to_ypoly(Bs[bcode])};
        }
    }
    return std::nullopt;
}

std::optional<LinearFactor> h_linear_factor_search() {
    // h = (y^2+y+1)x^3 + (y^3+1)x^2 + (y^3+y)x + (y^3+y^2)
    return search_linear_factor({YPoly{1, 1, 1}, YPoly{1, 0, 0, 1}, YPoly{0, 1, 0, 1},
                                 YPoly{0, 0, 1, 1}});
}

bool gf4_smooth_check_for(const TriPoly& candidate) {
    const Field F(4);  // GF(4) sits inside GF(16): cube roots are alpha^5, alpha^10
    const TriPoly hx = candidate.derivative(0);
    const TriPoly hy = candidate.derivative(1);
    for (const std::int64_t e : {5, 10}) {
        const FieldElem w = F.alpha_pow(e);
        const FieldElem w2 = F.mul(w, w);
        if (candidate.eval(F, w, w2, F.zero()).bits != 0) return false;
        if (!(hx.eval(F, w, w2, F.zero()) == w)) return false;
        if (!(hy.eval(F, w, w2, F.zero()) == w2)) return false;
    }
    return true;
}

bool h_gf4_smooth_check() { return gf4_smooth_check_for(poly_h()); }

PointCountRecord genus2_point_count(const Genus2CurveParams& p, const Field& F) {
    PointCountRecord rec;
    rec.m = F.m();
    rec.params = p;
    rec.degenerate = (p.a.bits == 0 || p.c.bits == 0);
    const std::uint32_t n = F.n();
    const std::uint32_t* alog = F.alog_data();
    const std::uint8_t* trbit = F.trbit_data();
    const bool ha = p.a.bits != 0, hb = p.b.bits != 0, hc = p.c.bits != 0;
    const std::uint32_t la = ha ? F.raw_log(p.a.bits) : 0;
    const std::uint32_t lb = hb ? F.raw_log(p.b.bits) : 0;
    const std::uint32_t lc = hc ? F.raw_log(p.c.bits) : 0;
    std::int64_t Z = 0;
    std::uint32_t i3 = lc;  // lc + 3j mod n
    for (std::uint32_t j = 0; j < n; ++j) {
        std::uint32_t v = p.d.bits;
        if (ha) v ^= alog[la + n - j];
        if (hb) v ^= alog[lb + j];
        if (hc) v ^= alog[i3];
        Z += 1 - trbit[v];
        i3 += 3;
        if (i3 >= n) i3 -= n;
    }
    rec.Z = Z;
    rec.N = 2 * Z + 2;
    rec.a1 = rec.N - (std::int64_t(F.q()) + 1);
    return rec;
}

CountParity point_count_parity(const Genus2CurveParams& p, const Field& F) {
    if (F.q() <= 4) throw ConfigError("point_count_parity: requires q > 4");
    if (p.a.bits == 0 || p.c.bits == 0)
        throw ConfigError("point_count_parity: degenerate parameters (a or c is zero)");
    const PointCountRecord rec = genus2_point_count(p, F);
    return CountParity{static_cast<int>(rec.N % 4), F.trace(p.d)};
}

}  // namespace cg2
