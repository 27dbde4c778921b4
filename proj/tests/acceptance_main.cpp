// Acceptance gate: the ten headline results this toolkit must reproduce,
// one PASS/FAIL line each. Exits nonzero if any criterion fails.
//
// Pass --allow-expensive to extend the ground-truth comparison to m = 9
// (roughly 2^36 inner steps; minutes to hours depending on the machine).

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cg2/cache.hpp"
#include "cg2/classify.hpp"
#include "cg2/codes.hpp"
#include "cg2/curves.hpp"
#include "cg2/errors.hpp"
#include "cg2/field.hpp"
#include "cg2/numtheory.hpp"

using namespace cg2;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, double seconds,
            const std::string& detail) {
    std::printf("[%s] criterion %2d (%5.1fs): %s%s%s\n", ok ? "PASS" : "FAIL", id, seconds,
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void criterion(int id, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        auto [o, d] = body();
        ok = o;
        detail = d;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, name, ok, dt, detail);
}

std::string row_diff_or_empty(const TableCheck& check) {
    if (check.ok()) return "";
    std::string s;
    for (const auto& d : check.diffs) s += d + "; ";
    return s;
}

// Shared across criteria 3, 4, 9, 10: the expensive enumerations run once.
std::map<int, WeightDistribution> g_dist;  // keyed by m (default modulus)

}  // namespace

int main(int argc, char** argv) {
    bool allow_expensive = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--allow-expensive") allow_expensive = true;

    // 1. Even-m interval table rows.
    criterion(1, "interval table rows for m = 6, 8, 10, 12", [] {
        std::vector<TableRow> expected = {
            {6, 16, 47, 19, 44, {}},
            {8, 96, 159, 100, 155, {}},
            {10, 448, 575, 454, 569, {452}},
            {12, 1920, 2175, 1928, 2167, {1924}},
        };
        const TableCheck check = verify_tables(expected);
        return std::make_pair(check.ok(), row_diff_or_empty(check));
    });

    // 2. Odd-m interval table rows.
    criterion(2, "interval table rows for m = 7, 9, 11", [] {
        std::vector<TableRow> expected = {
            {7, 42, 85, 47, 80, {46, 82, 84}},
            {9, 211, 300, 219, 292, {216, 218, 294, 296}},
            {11, 934, 1113, 945, 1102, {938, 942, 944, 1104, 1106}},
        };
        const TableCheck check = verify_tables(expected);
        return std::make_pair(check.ok(), row_diff_or_empty(check));
    });

    // 3. Prediction equals exhaustive enumeration.
    criterion(3, std::string("predicted weight sets match brute force at m = 6, 7, 8") +
                     (allow_expensive ? ", 9" : ""),
              [allow_expensive] {
                  std::vector<int> ms = {6, 7, 8};
                  if (allow_expensive) ms.push_back(9);
                  std::string detail;
                  bool ok = true;
                  for (int m : ms) {
                      const Field F(m);
                      EnumOptions opt;
                      opt.allow_expensive = allow_expensive;
                      const WeightDistribution dist = dual_weight_distribution(F, opt);
                      g_dist[m] = dist;
                      const WeightReport rep = compare_predicted_vs_bruteforce(F, dist);
                      if (!rep.mismatches.empty()) {
                          ok = false;
                          detail += "m=" + std::to_string(m) + ": " + rep.mismatches.front() + "; ";
                      }
                  }
                  return std::make_pair(ok, detail);
              });

    // 4. Minimum distances 5, 7, 7, 5, 5 for m = 5..9.
    criterion(4, "minimum distance of C is 5, 7, 7, 5, 5 for m = 5..9", [] {
        const std::map<int, int> expected = {{5, 5}, {6, 7}, {7, 7}, {8, 5}, {9, 5}};
        std::string detail;
        bool ok = true;
        for (const auto& [m, want] : expected) {
            const Field F(m);
            MinDistOptions opt;
            const auto it = g_dist.find(m);  // reuse criterion 3's enumerations
            if (it != g_dist.end()) opt.dual_dist = &it->second;
            const MinDistanceResult r = min_distance_C(F, opt);
            if (!r.exact || *r.exact != want) {
                ok = false;
                detail += "m=" + std::to_string(m) + ": got " +
                          (r.exact ? std::to_string(*r.exact) : std::string(">=") +
                                                                    std::to_string(r.lower_bound)) +
                          " want " + std::to_string(want) + " (" + r.method + "); ";
            }
        }
        return std::make_pair(ok, detail);
    });

    // 5. The two independent dual-weight computations agree.
    criterion(5, "trace enumeration equals the generator-matrix oracle at m = 4, 5", [] {
        bool ok = true;
        std::string detail;
        for (int m : {4, 5}) {
            const Field F(m);
            if (dual_weight_distribution(F) != direct_dual_weights_oracle(F)) {
                ok = false;
                detail += "m=" + std::to_string(m) + " distributions differ; ";
            }
        }
        return std::make_pair(ok, detail);
    });

    // 6. Polynomial identity suite.
    criterion(6, "defining identities of f, g, h (symbolic, numeric, factor search)", [] {
        bool ok = true;
        std::string detail;
        if (!verify_fgh_identity()) {
            ok = false;
            detail += "a*g + c*f != h symbolically; ";
        }
        const Field F16(4);
        for (std::uint32_t x = 0; x < 16 && ok; ++x)
            for (std::uint32_t y = 0; y < 16 && ok; ++y)
                for (std::uint32_t z = 0; z < 16; ++z) {
                    const FieldElem xe = F16.elem(x), ye = F16.elem(y), ze = F16.elem(z);
                    const FieldElem lhs =
                        F16.add(F16.mul(poly_a().eval(F16, xe, ye, ze), eval_g(F16, xe, ye, ze)),
                                F16.mul(poly_c().eval(F16, xe, ye, ze), eval_f(F16, xe, ye, ze)));
                    if (!(lhs == eval_h(F16, xe, ye))) {
                        ok = false;
                        detail += "identity fails over GF(16); ";
                        break;
                    }
                }
        if (!h_gf4_smooth_check()) {
            ok = false;
            detail += "GF(4) smoothness probe failed; ";
        }
        if (h_linear_factor_search()) {
            ok = false;
            detail += "h unexpectedly has a linear factor over F8[y]; ";
        }
        // f(0,y,z) = (y+1)(z+1)(y+z), exhaustively for m <= 6
        for (int m = 3; m <= 6 && ok; ++m) {
            const Field F(m);
            for (std::uint32_t y = 0; y < F.q() && ok; ++y)
                for (std::uint32_t z = 0; z < F.q(); ++z) {
                    const FieldElem ye = F.elem(y), ze = F.elem(z);
                    const FieldElem rhs = F.mul(
                        F.add(ye, F.one()), F.mul(F.add(ze, F.one()), F.add(ye, ze)));
                    if (!(eval_f(F, F.zero(), ye, ze) == rhs)) {
                        ok = false;
                        detail += "f(0,y,z) factorization fails at m=" + std::to_string(m) + "; ";
                        break;
                    }
                }
        }
        return std::make_pair(ok, detail);
    });

    // 7. Curve-point geometry across m = 3..12.
    criterion(7, "curve points: count bound, good-point pattern, degenerate quadruple", [] {
        bool ok = true;
        std::string detail;
        std::map<int, std::int64_t> good;
        for (int m = 3; m <= 12; ++m) {
            const Field F(m);
            const XPointSet xs = x_points(F);
            good[m] = xs.good_count;
            if (m >= 6) {
                const WeilCheck wc = weil_bound_check(F, std::int64_t(xs.points.size()));
                if (!wc.ok) {
                    ok = false;
                    detail += "count bound violated at m=" + std::to_string(m) + "; ";
                }
            }
            for (const XPoint& p : degenerate_points())
                if (!std::binary_search(xs.points.begin(), xs.points.end(), p)) {
                    ok = false;
                    detail += "degenerate point missing at m=" + std::to_string(m) + "; ";
                }
            if (x_singular_points(F).size() > 4) {
                ok = false;
                detail += "more than 4 singular points at m=" + std::to_string(m) + "; ";
            }
        }
        for (int m : {6, 7})
            if (good[m] != 0) {
                ok = false;
                detail += "good points at m=" + std::to_string(m) + "; ";
            }
        for (int m : {5, 8, 9})
            if (good[m] <= 0) {
                ok = false;
                detail += "no good points at m=" + std::to_string(m) + "; ";
            }
        return std::make_pair(ok, detail);
    });

    // 8. Count-divisibility criterion on random curve parameters.
    criterion(8, "N = 0 (mod 4) iff Tr(d) = 0, 500 random curves at each m = 6, 7, 8", [] {
        bool ok = true;
        std::string detail;
        std::mt19937 rng(20260823);
        for (int m : {6, 7, 8}) {
            const Field F(m);
            int bad = 0;
            for (int t = 0; t < 500; ++t) {
                const Genus2CurveParams p{F.elem(1 + rng() % (F.q() - 1)), F.elem(rng() % F.q()),
                                          F.elem(1 + rng() % (F.q() - 1)), F.elem(rng() % F.q())};
                const PointCountRecord rec = genus2_point_count(p, F);
                if ((rec.N % 4 == 0) != (F.trace(p.d) == 0)) ++bad;
            }
            if (bad != 0) {
                ok = false;
                detail += std::to_string(bad) + " counterexamples at m=" + std::to_string(m) + "; ";
            }
        }
        return std::make_pair(ok, detail);
    });

    // 9. Parity and interval containment of the brute-forced weights.
    criterion(9, "brute-forced dual weights are even, inside I, and Tr(bx) rows weigh q/2", [] {
        bool ok = true;
        std::string detail;
        for (int m = 5; m <= 8; ++m) {
            const Field F(m);
            if (!g_dist.count(m)) g_dist[m] = dual_weight_distribution(F);
            const Intervals iv = intervals(m);
            for (const std::uint32_t w : g_dist[m].weight_set()) {
                if (w % 2 != 0) {
                    ok = false;
                    detail += "odd weight " + std::to_string(w) + " at m=" + std::to_string(m) + "; ";
                }
                if (!iv.in_I(w)) {
                    ok = false;
                    detail +=
                        "weight " + std::to_string(w) + " outside I at m=" + std::to_string(m) + "; ";
                }
            }
            for (std::uint32_t b = 1; b < F.q(); ++b) {
                const std::uint32_t w =
                    dual_word_weight(DualTriple{F.zero(), F.elem(b), F.zero()}, F);
                if (w != F.q() / 2) {
                    ok = false;
                    detail += "(0,b,0) weight " + std::to_string(w) + " != q/2 at m=" +
                              std::to_string(m) + "; ";
                    break;
                }
            }
        }
        return std::make_pair(ok, detail);
    });

    // 10. Nothing depends on the choice of primitive modulus.
    criterion(10, "identical results under two primitive moduli at m = 6 (0x43, 0x5b)", [] {
        bool ok = true;
        std::string detail;
        const Field Fa(6, 0x43), Fb(6, 0x5b);
        const WeightDistribution da = dual_weight_distribution(Fa);
        const WeightDistribution db = dual_weight_distribution(Fb);
        if (da != db) {
            ok = false;
            detail += "dual weight distributions differ between moduli; ";
        }
        const WeightReport ra = compare_predicted_vs_bruteforce(Fa, da);
        const WeightReport rb = compare_predicted_vs_bruteforce(Fb, db);
        for (const WeightReport* rep : {&ra, &rb})
            if (!rep->mismatches.empty()) {
                ok = false;
                detail += "mismatch at m=6 under one of the moduli; ";
            }
        // the even-m table row is recomputed identically (it is field-free
        // arithmetic, but the claim deserves its explicit check)
        const TableRow row = computed_row(6);
        if (row.i_lo != 16 || row.i_hi != 47 || row.j_lo != 19 || row.j_hi != 44 ||
            !row.extras.empty()) {
            ok = false;
            detail += "m=6 table row changed; ";
        }
        return std::make_pair(ok, detail);
    });

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
