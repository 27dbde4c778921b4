#include "cg2/classify.hpp"

#include <algorithm>
#include <sstream>

#include "cg2/errors.hpp"

namespace cg2 {

std::optional<MNWitness> mn_simple_exists(int m, std::int64_t a1) {
    if (a1 % 2 == 0) throw ConfigError("mn_simple_exists: a1 must be odd");
    const std::int64_t q = std::int64_t(1) << m;
    MNWitness w;
    w.a1 = a1;
    w.a1_odd = true;
    w.a1_in_range = a1 * a1 <= 16 * q;
    if (!w.a1_in_range) return std::nullopt;

    const std::int64_t step = std::int64_t(1) << ((m + 1) / 2);  // 2^{ceil(m/2)}
    const std::int64_t lo_sq = 4 * q * a1 * a1;  // (a2 + 2q)^2 must reach this

    // first multiple of step at or above the lower endpoint 2|a1|sqrt(q) - 2q
    std::int64_t a2 = ((isqrt(lo_sq) - 2 * q) / step - 2) * step;
    while (a2 + 2 * q < 0 || (a2 + 2 * q) * (a2 + 2 * q) < lo_sq) a2 += step;

    for (; 4 * a2 <= a1 * a1 + 8 * q; a2 += step) {
        const std::int64_t delta_z = a1 * a1 - 4 * a2 + 8 * q;
        const std::int64_t delta_2 = (a2 + 2 * q) * (a2 + 2 * q) - lo_sq;
        if (is_perfect_square(delta_z)) continue;
        if (two_adic_square(delta_2)) continue;
        w.a2 = a2;
        w.delta_z = delta_z;
        w.delta_2 = delta_2;
        w.a2_multiple = true;
        w.a2_in_range = true;
        w.delta_z_not_square = true;
        w.delta_2_not_square = true;
        return w;
    }
    return std::nullopt;
}

std::optional<SplitWitness> split_occurs_even_m(int m, std::int64_t a1) {
    if (m % 2 != 0) throw ConfigError("split_occurs_even_m: m must be even");
    const std::int64_t q = std::int64_t(1) << m;
    const std::int64_t s0 = std::int64_t(1) << (m / 2 + 1);  // 2 sqrt q
    for (const std::int64_t s : {s0, -s0}) {
        const std::int64_t a = a1 - s;
        if (a % 2 == 0) continue;
        if (a * a > 4 * q) continue;
        if (((a % 4) + 4) % 4 != 3) continue;
        if (is_squarefree(s - a)) continue;
        return SplitWitness{s, a, smallest_square_divisor(s - a)};
    }
    return std::nullopt;
}

std::optional<SplitWitness> split_occurs_odd_m(int m, std::int64_t a1) {
    if (m % 2 == 0) throw ConfigError("split_occurs_odd_m: m must be odd");
    const std::int64_t q = std::int64_t(1) << m;
    const std::int64_t s0 = std::int64_t(1) << ((m + 1) / 2);  // sqrt(2q)
    for (const std::int64_t s : {s0, -s0, std::int64_t(0)}) {
        const std::int64_t a = a1 - s;
        if (a % 2 == 0) continue;
        if (a * a > 4 * q) continue;
        if (((a % 4) + 4) % 4 != 3) continue;
        const std::int64_t diff = s - a;
        if (diff >= -1 && diff <= 1) continue;  // gluing impossible at difference +-1
        return SplitWitness{s, a, 0};
    }
    return std::nullopt;
}

const char* weight_status_name(WeightStatus s) {
    switch (s) {
        case WeightStatus::InJ: return "in_J";
        case WeightStatus::Simple: return "simple";
        case WeightStatus::Split: return "split";
        case WeightStatus::Absent: return "absent";
    }
    return "?";
}

std::set<std::int64_t> WeightReport::predicted_weights() const {
    std::set<std::int64_t> s;
    for (const auto& v : verdicts)
        if (v.occurs()) s.insert(v.weight);
    return s;
}

std::vector<std::int64_t> WeightReport::extras_outside_J() const {
    std::vector<std::int64_t> out;
    for (const auto& v : verdicts)
        if (v.occurs() && !iv.in_J(v.weight)) out.push_back(v.weight);
    return out;
}

WeightReport predict_weight_set(int m) {
    if (m < 5) throw ConfigError("predict_weight_set: m >= 5 required");
    const std::int64_t q = std::int64_t(1) << m;
    WeightReport rep;
    rep.m = m;
    rep.iv = intervals(m);
    std::int64_t w0 = rep.iv.i_lo + (rep.iv.i_lo % 2 != 0 ? 1 : 0);
    for (std::int64_t w = w0; w <= rep.iv.i_hi; w += 2) {
        WeightVerdict v;
        v.weight = w;
        v.a1 = q - 1 - 2 * w;
        if (rep.iv.in_J(w)) {
            v.status = WeightStatus::InJ;
        } else if (m % 2 == 0) {
            v.split = split_occurs_even_m(m, v.a1);
            v.mn = mn_simple_exists(m, v.a1);
            v.status = v.split ? WeightStatus::Split
                               : (v.mn ? WeightStatus::Simple : WeightStatus::Absent);
        } else {
            v.mn = mn_simple_exists(m, v.a1);
            if (v.mn) {
                v.status = WeightStatus::Simple;
            } else {
                v.split = split_occurs_odd_m(m, v.a1);
                v.status = v.split ? WeightStatus::Split : WeightStatus::Absent;
            }
        }
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

namespace {

WeightReport diff_against_brute(WeightReport rep, const std::set<std::uint32_t>& brute) {
    rep.provenance = Provenance::Both;
    rep.brute_weights = brute;
    const std::set<std::int64_t> predicted = rep.predicted_weights();
    for (std::uint32_t w : brute) {
        if (w % 2 != 0)
            rep.mismatches.push_back("brute-force weight " + std::to_string(w) + " is odd");
        if (!rep.iv.in_I(w))
            rep.mismatches.push_back("brute-force weight " + std::to_string(w) + " outside I");
        if (!predicted.count(w))
            rep.mismatches.push_back("weight " + std::to_string(w) +
                                     " occurs but was predicted absent");
    }
    for (std::int64_t w : predicted) {
        if (!brute.count(static_cast<std::uint32_t>(w)))
            rep.mismatches.push_back("weight " + std::to_string(w) +
                                     " predicted to occur but never does");
    }
    return rep;
}

}  // namespace

WeightReport compare_predicted_vs_bruteforce(const Field& F, const EnumOptions& opt) {
    return diff_against_brute(predict_weight_set(F.m()), dual_weight_set(F, opt));
}

WeightReport compare_predicted_vs_bruteforce(const Field& F, const WeightDistribution& dist) {
    return diff_against_brute(predict_weight_set(F.m()), dist.weight_set());
}

std::vector<TableRow> reference_rows() {
    return {
        {6, 16, 47, 19, 44, {}},
        {7, 42, 85, 47, 80, {46, 82, 84}},
        {8, 96, 159, 100, 155, {}},
        {9, 211, 300, 219, 292, {216, 218, 294, 296}},
        {10, 448, 575, 454, 569, {452}},
        {11, 934, 1113, 945, 1102, {938, 942, 944, 1104, 1106}},
        {12, 1920, 2175, 1928, 2167, {1924}},
    };
}

TableRow computed_row(int m) {
    const WeightReport rep = predict_weight_set(m);
    TableRow row;
    row.m = m;
    row.i_lo = rep.iv.i_lo;
    row.i_hi = rep.iv.i_hi;
    row.j_lo = rep.iv.j_lo;
    row.j_hi = rep.iv.j_hi;
    row.extras = rep.extras_outside_J();
    return row;
}

TableCheck verify_tables(const std::vector<TableRow>& expected) {
    TableCheck check;
    for (const TableRow& want : expected) {
        const TableRow got = computed_row(want.m);
        check.rows.push_back(got);
        std::ostringstream diff;
        if (got.i_lo != want.i_lo || got.i_hi != want.i_hi)
            diff << "I=[" << got.i_lo << "," << got.i_hi << "] expected [" << want.i_lo << ","
                 << want.i_hi << "]; ";
        if (got.j_lo != want.j_lo || got.j_hi != want.j_hi)
            diff << "J=[" << got.j_lo << "," << got.j_hi << "] expected [" << want.j_lo << ","
                 << want.j_hi << "]; ";
        if (got.extras != want.extras) {
            diff << "extras {";
            for (auto w : got.extras) diff << w << " ";
            diff << "} expected {";
            for (auto w : want.extras) diff << w << " ";
            diff << "}";
        }
        if (!diff.str().empty())
            check.diffs.push_back("m=" + std::to_string(want.m) + ": " + diff.str());
    }
    return check;
}

}  // namespace cg2
