#include "cg2/codes.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "cg2/curves.hpp"
#include "cg2/errors.hpp"

namespace cg2 {

CyclicCode build_code(CodeId id, const Field& F) {
    CyclicCode code;
    code.spec = F.spec();
    code.n = F.n();
    std::set<std::uint32_t> zeros;
    for (std::int64_t e : code_zero_exponents(id))
        for (std::uint32_t j : cyclotomic_coset(e, F.m()).members) zeros.insert(j);
    code.zeros.assign(zeros.begin(), zeros.end());
    code.generator = generator_poly(id, F);
    const auto [quot, rem] = poly_divmod(BinPoly::xn_plus_1(code.n), code.generator);
    (void)quot;
    if (!rem.is_zero()) throw ValidationError("build_code: generator does not divide x^n - 1");
    code.dimension = code.n - code.generator.degree();
    if (code.dimension < 1) throw ValidationError("build_code: dimension < 1");
    return code;
}

std::uint32_t bch_bound(const std::vector<std::uint32_t>& zeros_closed, std::uint32_t n) {
    if (zeros_closed.empty()) return 1;
    std::vector<char> present(n, 0);
    for (std::uint32_t e : zeros_closed) present[e % n] = 1;
    // longest circular run: scan two laps
    std::uint32_t best = 0, cur = 0;
    for (std::uint32_t i = 0; i < 2 * n; ++i) {
        if (present[i % n]) {
            ++cur;
            best = std::max(best, cur);
        } else {
            cur = 0;
        }
    }
    best = std::min(best, n);  // all-present means the zero code; run caps at n
    return best + 1;
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::set<std::uint32_t> WeightDistribution::weight_set() const {
    std::set<std::uint32_t> s;
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) s.insert(w);
    return s;
}

std::uint32_t WeightDistribution::min_positive_weight() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    throw ValidationError("min_positive_weight: no positive-weight words");
}

std::uint32_t dual_word_weight(const DualTriple& t, const Field& F) {
    const Genus2CurveParams p{t.a, t.b, t.c, F.zero()};
    const PointCountRecord rec = genus2_point_count(p, F);
    return static_cast<std::uint32_t>(F.n() - rec.Z);
}

namespace {

void check_enumeration_budget(const Field& F, const EnumOptions& opt) {
    const int m = F.m();
    if (m <= 8) return;
    if (m == 9) {
        if (opt.allow_expensive) return;
        throw BudgetError(
            "dual weight enumeration at m = 9 costs about 2^36 x-loop steps "
            "(a few minutes); pass --allow-expensive to run it");
    }
    throw BudgetError("dual weight enumeration refused for m = " + std::to_string(m) +
                      ": about 2^" + std::to_string(4 * m) + " x-loop steps");
}

}  // namespace

WeightDistribution dual_weight_distribution(const Field& F, const EnumOptions& opt) {
    check_enumeration_budget(F, opt);
    const std::uint32_t q = F.q();
    const std::uint32_t n = q - 1;
    const std::uint32_t* alog = F.alog_data();
    const std::uint8_t* trbit = F.trbit_data();

    int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (static_cast<std::uint32_t>(threads) > q) threads = static_cast<int>(q);

    std::vector<std::vector<std::uint64_t>> partials(threads,
                                                     std::vector<std::uint64_t>(n + 1, 0));
    std::atomic<std::uint32_t> next_c{0};

    auto worker = [&](int tid) {
        auto& counts = partials[tid];
        std::vector<std::uint32_t> V(n);
        for (;;) {
            const std::uint32_t c = next_c.fetch_add(1);
            if (c >= q) break;
            // U[j] = c * x^3 where x = alpha^j
            std::vector<std::uint32_t> U(n, 0);
            if (c) {
                std::uint32_t idx = F.raw_log(c);
                for (std::uint32_t j = 0; j < n; ++j) {
                    U[j] = alog[idx];
                    idx += 3;
                    if (idx >= n) idx -= n;
                }
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                if (b) {
                    const std::uint32_t lb = F.raw_log(b);
                    const std::uint32_t* row = alog + lb;  // row[j] = b * alpha^j
                    for (std::uint32_t j = 0; j < n; ++j) V[j] = U[j] ^ row[j];
                } else {
                    std::copy(U.begin(), U.end(), V.begin());
                }
                // a = 0
                {
                    std::uint32_t w = 0;
                    for (std::uint32_t j = 0; j < n; ++j) w += trbit[V[j]];
                    counts[w]++;
                }
                // a = alpha^la: a/x term walks the antilog table backwards
                for (std::uint32_t la = 0; la < n; ++la) {
                    const std::uint32_t* arow = alog + la;  // arow[n - j] = a * alpha^{-j}
                    std::uint32_t w = 0;
                    for (std::uint32_t j = 0; j < n; ++j) w += trbit[arow[n - j] ^ V[j]];
                    counts[w]++;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();

    WeightDistribution dist;
    dist.n = n;
    for (const auto& part : partials)
        for (std::uint32_t w = 0; w <= n; ++w)
            if (part[w]) dist.counts[w] += part[w];
    return dist;
}

std::set<std::uint32_t> dual_weight_set(const Field& F, const EnumOptions& opt) {
    return dual_weight_distribution(F, opt).weight_set();
}

WeightDistribution direct_dual_weights_oracle(const Field& F) {
    const int m = F.m();
    if (m > 6)
        throw BudgetError("direct_dual_weights_oracle: 2^{3m} codeword expansions capped at m <= 6");
    const std::uint32_t n = F.n();
    const BinPoly g = generator_poly(CodeId::C, F);
    const auto [h, rem] = poly_divmod(BinPoly::xn_plus_1(n), g);
    if (!rem.is_zero()) throw ValidationError("direct oracle: g does not divide x^n - 1");
    const BinPoly grev = h.reciprocal();  // generator of the dual code
    const std::uint32_t dual_dim = g.degree();
    // everything fits in one 64-bit word for m <= 6 (n <= 63)
    std::uint64_t grev_bits = grev.words().at(0);
    WeightDistribution dist;
    dist.n = n;
    std::vector<std::uint64_t> tally(n + 1, 0);
    for (std::uint64_t u = 0; u < (std::uint64_t(1) << dual_dim); ++u) {
        const std::uint64_t word = clmul(u, grev_bits);
        tally[static_cast<std::uint32_t>(__builtin_popcountll(word))]++;
    }
    for (std::uint32_t w = 0; w <= n; ++w)
        if (tally[w]) dist.counts[w] = tally[w];
    return dist;
}

WeightDistribution macwilliams_transform(const WeightDistribution& dist, std::uint32_t n,
                                         std::uint32_t dual_dim) {
    const BigInt size = BigInt(1) << dual_dim;
    if (dist.total() != size)
        throw ValidationError("macwilliams_transform: input total != 2^dual_dim");
    // B_j = 2^{-dual_dim} * sum_i A_i K_j(i)
    std::vector<BigInt> B(n + 1, 0);
    for (const auto& [i, Ai] : dist.counts) {
        if (Ai == 0) continue;
        // K_j(i) for j = 0..n by the three-term recurrence in j
        BigInt k_prev = 1;                      // K_0
        BigInt k_cur = BigInt(n) - 2 * int(i);  // K_1
        B[0] += Ai * k_prev;
        if (n >= 1) B[1] += Ai * k_cur;
        for (std::uint32_t k = 2; k <= n; ++k) {
            BigInt num = (BigInt(n) - 2 * int(i)) * k_cur - BigInt(n - k + 2) * k_prev;
            if (num % k != 0)
                throw ValidationError("macwilliams_transform: Krawtchouk recurrence not integral");
            BigInt k_next = num / k;
            B[k] += Ai * k_next;
            k_prev = k_cur;
            k_cur = k_next;
        }
    }
    WeightDistribution out;
    out.n = n;
    for (std::uint32_t j = 0; j <= n; ++j) {
        if (B[j] == 0) continue;
        if (B[j] < 0) throw ValidationError("macwilliams_transform: negative count (corrupt input)");
        if (B[j] % size != 0)
            throw ValidationError("macwilliams_transform: non-integer count (corrupt input)");
        out.counts[j] = B[j] / size;
    }
    if (out.total() != (BigInt(1) << (n - dual_dim)))
        throw ValidationError("macwilliams_transform: output total != 2^{n - dual_dim}");
    return out;
}

MinDistanceResult min_distance_C(const Field& F, const MinDistOptions& opt) {
    const int m = F.m();
    if (m < 5) throw ConfigError("min_distance_C: m >= 5 required");
    MinDistanceResult res;
    res.m = m;

    const CyclicCode code = build_code(CodeId::C, F);
    res.lower_bound = static_cast<int>(bch_bound(code.zeros, code.n));  // 5: run 1,2,3,4

    bool ran_xpoints = false;
    std::optional<int> x_value;  // exact 5, or lower bound 7 from absence
    if (m <= 16) {
        XPointOptions xopt;
        xopt.threads = opt.enumeration.threads;
        xopt.allow_expensive = opt.enumeration.allow_expensive;
        const XPointSet xs = x_points(F, xopt);
        res.good_points = xs.good_count;
        ran_xpoints = true;
        if (xs.good_count > 0) {
            x_value = 5;  // a good point yields a weight-5 word
        } else {
            // no weight-5 words; weight 6 impossible: an even-weight word of C
            // also vanishes at alpha^0, giving zeros at exponents -2..4 and
            // BCH weight >= 8. So the distance is at least 7.
            res.lower_bound = std::max(res.lower_bound, 7);
        }
    }

    bool ran_macwilliams = false;
    std::optional<int> mw_value;
    const WeightDistribution* dual = opt.dual_dist;
    WeightDistribution local;
    if (dual == nullptr && m <= 8) {
        local = dual_weight_distribution(F, opt.enumeration);
        dual = &local;
    }
    if (dual != nullptr) {
        const std::uint32_t dual_dim = code.generator.degree();
        const WeightDistribution c_dist = macwilliams_transform(*dual, code.n, dual_dim);
        mw_value = static_cast<int>(c_dist.min_positive_weight());
        ran_macwilliams = true;
    }

    if (ran_macwilliams && ran_xpoints) {
        if (x_value && *mw_value != *x_value)
            throw ValidationError("min_distance_C: curve criterion and MacWilliams disagree");
        if (!x_value && *mw_value < 7)
            throw ValidationError("min_distance_C: no good points but MacWilliams found d < 7");
        res.exact = mw_value;
        res.method = "macwilliams+xpoints";
    } else if (ran_macwilliams) {
        res.exact = mw_value;
        res.method = "macwilliams";
    } else if (ran_xpoints) {
        res.exact = x_value;  // empty when no good points: only a lower bound then
        res.method = "xpoints";
    } else {
        res.method = "bch";
    }
    if (res.exact && *res.exact < res.lower_bound)
        throw ValidationError("min_distance_C: exact value below lower bound");
    return res;
}

}  // namespace cg2
