#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cg2/codes.hpp"
#include "cg2/numtheory.hpp"

namespace cg2 {

// Certificate that the isogeny-class conditions (Maisner-Nart) admit a simple
// abelian surface with trace a1: an admissible a2 with
//   (a) 2|a1|sqrt(q) - 2q <= a2 <= a1^2/4 + 2q   (lower end via delta_2 >= 0)
//   (b) a2 divisible by 2^{ceil(m/2)}
//   (c) delta_z = a1^2 - 4 a2 + 8q not a perfect square in Z
//   (d) delta_2 = (a2 + 2q)^2 - 4q a1^2 not a square in Z_2
struct MNWitness {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t delta_z = 0;
    std::int64_t delta_2 = 0;
    bool a1_odd = false;
    bool a1_in_range = false;       // a1^2 <= 16q
    bool a2_multiple = false;        // 2^{ceil(m/2)} | a2
    bool a2_in_range = false;        // condition (a)
    bool delta_z_not_square = false;
    bool delta_2_not_square = false;

    bool all_ok() const {
        return a1_odd && a1_in_range && a2_multiple && a2_in_range && delta_z_not_square &&
               delta_2_not_square;
    }
};

// Certificate that a split (supersingular x ordinary) surface realizes a1:
// a1 = s + a with s a supersingular elliptic trace and a an ordinary one.
//   m even: s = +-2^{m/2+1}, a odd, a^2 <= 4q, a == 3 (mod 4),
//           and s - a not squarefree (gluing needs a' == a mod p^2);
//           sq_divisor is the certifying prime p.
//   m odd:  s in {0, +-2^{(m+1)/2}}, a odd, a^2 <= 4q, a == 3 (mod 4),
//           and s - a outside {-1, 0, 1}; sq_divisor stays 0 (the odd-m
//           gluing condition is the difference being distinct from +-1).
struct SplitWitness {
    std::int64_t s = 0;
    std::int64_t a = 0;
    std::int64_t sq_divisor = 0;
};

std::optional<MNWitness> mn_simple_exists(int m, std::int64_t a1);
std::optional<SplitWitness> split_occurs_even_m(int m, std::int64_t a1);
std::optional<SplitWitness> split_occurs_odd_m(int m, std::int64_t a1);

enum class WeightStatus { InJ, Simple, Split, Absent };

const char* weight_status_name(WeightStatus s);

struct WeightVerdict {
    std::int64_t weight = 0;
    std::int64_t a1 = 0;  // q - 1 - 2*weight
    WeightStatus status = WeightStatus::Absent;
    std::optional<MNWitness> mn;
    std::optional<SplitWitness> split;

    bool occurs() const { return status != WeightStatus::Absent; }
};

enum class Provenance { Predicted, BruteForced, Both };

struct WeightReport {
    int m = 0;
    Intervals iv;
    std::vector<WeightVerdict> verdicts;  // the even integers of I, ascending
    Provenance provenance = Provenance::Predicted;
    std::set<std::uint32_t> brute_weights;   // filled when brute force ran
    std::vector<std::string> mismatches;     // must stay empty for Both

    std::set<std::int64_t> predicted_weights() const;
    std::vector<std::int64_t> extras_outside_J() const;  // occurring weights in I minus J
};

// Verdict for every even weight in I. m >= 5. In J: guaranteed. Outside J:
// for even m, split checked first, then the MN gate, both witnesses kept
// when both fire; for odd m, the MN gate first, then the odd split route.
WeightReport predict_weight_set(int m);

// Runs the full dual-code enumeration and diffs it against the prediction.
// Budget rules follow dual_weight_distribution. The mismatch list must come
// back empty; anything else falsifies the classification.
WeightReport compare_predicted_vs_bruteforce(const Field& F, const EnumOptions& opt = {});
// Same, reusing an already-computed brute-force distribution.
WeightReport compare_predicted_vs_bruteforce(const Field& F, const WeightDistribution& dist);

// Reference rows the predictor must reproduce, m = 6..12.
struct TableRow {
    int m = 0;
    std::int64_t i_lo = 0, i_hi = 0;
    std::int64_t j_lo = 0, j_hi = 0;
    std::vector<std::int64_t> extras;  // occurring weights in I minus J
};

std::vector<TableRow> reference_rows();
TableRow computed_row(int m);

struct TableCheck {
    std::vector<TableRow> rows;      // computed
    std::vector<std::string> diffs;  // vs reference; empty = match
    bool ok() const { return diffs.empty(); }
};

TableCheck verify_tables(const std::vector<TableRow>& expected = reference_rows());

}  // namespace cg2
