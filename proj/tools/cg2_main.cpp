// cg2: command-line surface over the core library.
//
// Subcommands: tables, mindist, dual-weights, mn-check, x, cache.
// Output is JSON by default (--format csv|markdown for tabular views).
// Exit codes: 0 success, 2 validation mismatch, 3 budget refusal,
// 4 bad configuration.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cg2/cache.hpp"
#include "cg2/classify.hpp"
#include "cg2/codes.hpp"
#include "cg2/curves.hpp"
#include "cg2/errors.hpp"
#include "cg2/field.hpp"
#include "cg2/numtheory.hpp"

using json = nlohmann::ordered_json;
using namespace cg2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;
constexpr int kExitConfig = 4;

struct GlobalOpts {
    std::string format = "json";
    std::string cache_dir;
    std::string modulus_hex;
    int m = 0;
    int threads = 0;
    bool allow_expensive = false;
};

std::uint32_t parse_modulus(const std::string& hex) {
    if (hex.empty()) return 0;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(hex, &pos, 16);
    } catch (const std::exception&) {
        throw ConfigError("--modulus: cannot parse '" + hex + "' as hex");
    }
    if (pos != hex.size() || v > 0xffffffffUL)
        throw ConfigError("--modulus: cannot parse '" + hex + "' as hex");
    return static_cast<std::uint32_t>(v);
}

Field make_field(const GlobalOpts& g) {
    if (g.m == 0) throw ConfigError("--m is required for this command");
    return Field(g.m, parse_modulus(g.modulus_hex));
}

// A tabular view of a payload for the csv/markdown renderers.
struct TableView {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

TableView key_value_view(const json& payload) {
    TableView v;
    v.columns = {"key", "value"};
    for (const auto& [k, val] : payload.items())
        v.rows.push_back({k, val.is_string() ? val.get<std::string>() : val.dump()});
    return v;
}

void emit(const json& payload, const TableView& view, const std::string& format) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < view.columns.size(); ++i)
            std::cout << view.columns[i] << (i + 1 < view.columns.size() ? "," : "\n");
        for (const auto& row : view.rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
    } else if (format == "markdown") {
        std::cout << "|";
        for (const auto& c : view.columns) std::cout << " " << c << " |";
        std::cout << "\n|";
        for (std::size_t i = 0; i < view.columns.size(); ++i) std::cout << " --- |";
        std::cout << "\n";
        for (const auto& row : view.rows) {
            std::cout << "|";
            for (const auto& cell : row) std::cout << " " << cell << " |";
            std::cout << "\n";
        }
    } else {
        throw ConfigError("--format must be json, csv, or markdown");
    }
}

std::string join_weights(const std::vector<std::int64_t>& ws) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i)
        s += (i ? " " : "") + std::to_string(ws[i]);
    return s;
}

json row_to_json(const TableRow& r) {
    return json{{"m", r.m},     {"i_lo", r.i_lo},   {"i_hi", r.i_hi},
                {"j_lo", r.j_lo}, {"j_hi", r.j_hi}, {"extras", r.extras}};
}

int cmd_tables(const GlobalOpts& g, bool inject_wrong_extra) {
    std::vector<TableRow> expected = reference_rows();
    if (inject_wrong_extra) expected[0].extras.push_back(16);  // negative-control fixture
    const TableCheck check = verify_tables(expected);
    json payload;
    payload["ok"] = check.ok();
    payload["rows"] = json::array();
    for (const TableRow& r : check.rows) payload["rows"].push_back(row_to_json(r));
    payload["diffs"] = check.diffs;

    TableView view;
    view.columns = {"m", "i_lo", "i_hi", "j_lo", "j_hi", "extras"};
    for (const TableRow& r : check.rows)
        view.rows.push_back({std::to_string(r.m), std::to_string(r.i_lo), std::to_string(r.i_hi),
                             std::to_string(r.j_lo), std::to_string(r.j_hi),
                             join_weights(r.extras)});
    emit(payload, view, g.format);
    return check.ok() ? kExitOk : kExitMismatch;
}

std::optional<WeightDistribution> cached_distribution(const GlobalOpts& g, const Field& F) {
    EnumOptions opt;
    opt.threads = g.threads;
    opt.allow_expensive = g.allow_expensive;
    if (g.cache_dir.empty()) return dual_weight_distribution(F, opt);
    const Cache cache{std::filesystem::path(g.cache_dir)};
    if (auto hit = cache.load_distribution(F)) return hit;
    WeightDistribution dist = dual_weight_distribution(F, opt);
    cache.store_distribution(F, dist);
    return dist;
}

int cmd_mindist(const GlobalOpts& g) {
    const Field F = make_field(g);
    MinDistOptions opt;
    opt.enumeration.threads = g.threads;
    opt.enumeration.allow_expensive = g.allow_expensive;
    std::optional<WeightDistribution> dist;
    if (F.m() <= 8) {
        dist = cached_distribution(g, F);
        opt.dual_dist = &*dist;
    }
    const MinDistanceResult r = min_distance_C(F, opt);
    json payload;
    payload["m"] = r.m;
    payload["modulus"] = F.modulus_hex();
    if (r.exact)
        payload["d"] = *r.exact;
    else
        payload["d"] = nullptr;
    payload["lower_bound"] = r.lower_bound;
    payload["method"] = r.method;
    if (r.good_points >= 0) payload["good_points"] = r.good_points;
    emit(payload, key_value_view(payload), g.format);
    return kExitOk;
}

json verdict_to_json(const WeightVerdict& v) {
    json j{{"weight", v.weight}, {"a1", v.a1}, {"status", weight_status_name(v.status)}};
    if (v.mn)
        j["mn"] = json{{"a2", v.mn->a2}, {"delta_z", v.mn->delta_z}, {"delta_2", v.mn->delta_2}};
    if (v.split)
        j["split"] =
            json{{"s", v.split->s}, {"a", v.split->a}, {"sq_divisor", v.split->sq_divisor}};
    return j;
}

json report_to_json(const WeightReport& rep) {
    json payload;
    payload["m"] = rep.m;
    payload["i"] = {rep.iv.i_lo, rep.iv.i_hi};
    payload["j"] = {rep.iv.j_lo, rep.iv.j_hi};
    payload["weights"] = rep.predicted_weights();
    payload["extras_outside_j"] = rep.extras_outside_J();
    payload["verdicts"] = json::array();
    for (const WeightVerdict& v : rep.verdicts) payload["verdicts"].push_back(verdict_to_json(v));
    return payload;
}

TableView report_view(const WeightReport& rep) {
    TableView view;
    view.columns = {"weight", "a1", "status"};
    for (const WeightVerdict& v : rep.verdicts)
        view.rows.push_back({std::to_string(v.weight), std::to_string(v.a1),
                             weight_status_name(v.status)});
    return view;
}

int cmd_dual_weights(const GlobalOpts& g, bool brute, bool predict, bool compare) {
    if (brute + predict + compare > 1)
        throw ConfigError("choose at most one of --brute, --predict, --compare");
    const Field F = make_field(g);

    if (brute) {
        const WeightDistribution dist = *cached_distribution(g, F);
        json payload;
        payload["m"] = F.m();
        payload["modulus"] = F.modulus_hex();
        payload["weights"] = dist.weight_set();
        payload["distribution"] = json::array();
        TableView view;
        view.columns = {"weight", "count"};
        for (const auto& [w, c] : dist.counts) {
            payload["distribution"].push_back(json{{"weight", w}, {"count", c.str()}});
            view.rows.push_back({std::to_string(w), c.str()});
        }
        emit(payload, view, g.format);
        return kExitOk;
    }

    if (compare) {
        const WeightDistribution dist = *cached_distribution(g, F);
        const WeightReport rep = compare_predicted_vs_bruteforce(F, dist);
        json payload = report_to_json(rep);
        payload["modulus"] = F.modulus_hex();
        payload["brute_weights"] = rep.brute_weights;
        payload["mismatches"] = rep.mismatches;
        payload["ok"] = rep.mismatches.empty();
        emit(payload, report_view(rep), g.format);
        return rep.mismatches.empty() ? kExitOk : kExitMismatch;
    }

    if (g.m == 0) throw ConfigError("--m is required for this command");
    const WeightReport rep = predict_weight_set(g.m);
    emit(report_to_json(rep), report_view(rep), g.format);
    return kExitOk;
}

int cmd_mn_check(const GlobalOpts& g, std::int64_t a1, std::int64_t weight, bool have_a1,
                 bool have_weight) {
    if (g.m == 0) throw ConfigError("--m is required for this command");
    if (g.m < 3 || g.m > 20) throw ConfigError("--m must be in 3..20");
    if (have_a1 == have_weight)
        throw ConfigError("mn-check needs exactly one of --a1 or --weight");
    const std::int64_t q = std::int64_t(1) << g.m;
    const std::int64_t trace = have_a1 ? a1 : q - 1 - 2 * weight;
    const auto w = mn_simple_exists(g.m, trace);
    json payload;
    payload["m"] = g.m;
    payload["a1"] = trace;
    if (have_weight) payload["weight"] = weight;
    payload["exists"] = w.has_value();
    if (w)
        payload["witness"] = json{{"a2", w->a2}, {"delta_z", w->delta_z},
                                  {"delta_2", w->delta_2}};
    emit(payload, key_value_view(payload), g.format);
    return kExitOk;
}

int cmd_x(const GlobalOpts& g, const std::string& what) {
    const Field F = make_field(g);
    XPointOptions opt;
    opt.threads = g.threads;
    opt.allow_expensive = g.allow_expensive;

    json payload;
    payload["m"] = F.m();
    payload["modulus"] = F.modulus_hex();

    if (what == "points") {
        const XPointSet xs = x_points(F, opt);
        payload["count"] = xs.points.size();
        payload["good"] = xs.good_count;
        payload["points"] = json::array();
        TableView view;
        view.columns = {"x", "y", "z", "good"};
        for (const XPoint& p : xs.points) {
            const bool good = is_good_point(F, p);
            payload["points"].push_back(json{{"x", p.x}, {"y", p.y}, {"z", p.z}, {"good", good}});
            view.rows.push_back({std::to_string(p.x), std::to_string(p.y), std::to_string(p.z),
                                 good ? "1" : "0"});
        }
        emit(payload, view, g.format);
        return kExitOk;
    }

    if (what == "singular") {
        const std::vector<XPoint> sing = x_singular_points(F, opt);
        payload["count"] = sing.size();
        payload["points"] = json::array();
        TableView view;
        view.columns = {"x", "y", "z"};
        for (const XPoint& p : sing) {
            payload["points"].push_back(json{{"x", p.x}, {"y", p.y}, {"z", p.z}});
            view.rows.push_back({std::to_string(p.x), std::to_string(p.y), std::to_string(p.z)});
        }
        payload["matches_degenerate"] = (sing == degenerate_points());
        emit(payload, view, g.format);
        return kExitOk;
    }

    if (what == "weil") {
        const XPointSet xs = x_points(F, opt);
        const WeilCheck wc = weil_bound_check(F, std::int64_t(xs.points.size()));
        payload["N"] = wc.count;
        payload["q"] = F.q();
        payload["deviation"] = wc.deviation;
        payload["bound_sq"] = wc.bound_sq;
        payload["margin"] = wc.margin;
        if (F.m() % 2 == 0)  // 220*sqrt(q) is an integer only for even m
            payload["bound"] = 220 * (std::int64_t(1) << (F.m() / 2));
        payload["ok"] = wc.ok;
        emit(payload, key_value_view(payload), g.format);
        return wc.ok ? kExitOk : kExitMismatch;
    }

    throw ConfigError("x: unknown target '" + what + "' (points, singular, weil)");
}

int cmd_cache(const GlobalOpts& g, const std::string& what) {
    if (g.cache_dir.empty()) throw ConfigError("cache: --cache-dir is required");
    const Cache cache{std::filesystem::path(g.cache_dir)};
    json payload;
    if (what == "stats") {
        const Cache::Stats s = cache.stats();
        payload["files"] = s.files;
        payload["bytes"] = s.bytes;
        payload["records"] = s.records;
    } else if (what == "clear") {
        payload["removed"] = cache.clear();
    } else {
        throw ConfigError("cache: unknown action '" + what + "' (stats, clear)");
    }
    emit(payload, key_value_view(payload), g.format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Binary cyclic codes of length 2^m - 1 from the BCH/Melas family: "
        "minimum distances, dual weight sets, and the genus-2 classification "
        "machinery behind them"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format: json, csv, or markdown")
        ->envname("CG2_FORMAT")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    app.add_option("--cache-dir", g.cache_dir, "Directory for enumeration caches")
        ->envname("CG2_CACHE_DIR");
    app.add_option("--threads", g.threads, "Worker threads (0 = hardware)")
        ->envname("CG2_THREADS");
    app.add_flag("--allow-expensive", g.allow_expensive,
                 "Unlock the opt-in large computations (m = 9 enumeration, m <= 16 curve scan)")
        ->envname("CG2_ALLOW_EXPENSIVE");

    auto add_field_opts = [&g](CLI::App* cmd, bool required_m = true) {
        cmd->fallthrough();  // accept the global flags after the subcommand too
        auto* mo = cmd->add_option("--m", g.m, "Field degree m (3..20)")->envname("CG2_M");
        if (required_m) mo->required();
        cmd->add_option("--modulus", g.modulus_hex,
                        "Primitive modulus bits, hex (default: least primitive)")
            ->envname("CG2_MODULUS");
    };

    auto* tables = app.add_subcommand(
        "tables", "Recompute the interval/extra-weight table rows for m = 6..12 and "
                  "verify them against the embedded expected values");
    tables->fallthrough();
    bool inject_wrong_extra = false;
    tables->add_flag("--inject-wrong-extra", inject_wrong_extra)->group("");  // test fixture

    auto* mindist =
        app.add_subcommand("mindist", "Minimum distance of C (curve criterion + exact "
                                      "MacWilliams computation where affordable)");
    add_field_opts(mindist);

    auto* dw = app.add_subcommand("dual-weights",
                                  "Weight set of the dual code: predicted, brute-forced, "
                                  "or both compared");
    add_field_opts(dw);
    bool dw_brute = false, dw_predict = false, dw_compare = false;
    dw->add_flag("--brute", dw_brute, "Exact enumeration over all q^3 parameter triples");
    dw->add_flag("--predict", dw_predict, "Interval + isogeny-class prediction (default)");
    dw->add_flag("--compare", dw_compare, "Run both and diff (exit 2 on any mismatch)");

    auto* mn = app.add_subcommand("mn-check",
                                  "Admissibility certificate for a simple abelian surface "
                                  "with the given trace");
    add_field_opts(mn);
    std::int64_t mn_a1 = 0, mn_weight = 0;
    auto* a1_opt = mn->add_option("--a1", mn_a1, "Frobenius trace a1 (odd)");
    auto* w_opt = mn->add_option("--weight", mn_weight, "Dual codeword weight (a1 = q-1-2w)");

    auto* x = app.add_subcommand("x", "The auxiliary plane curve: rational points, singular "
                                      "points, or the point-count bound");
    add_field_opts(x);
    std::string x_what;
    x->add_option("what", x_what, "points | singular | weil")->required();

    auto* cache = app.add_subcommand("cache", "Enumeration cache maintenance");
    cache->fallthrough();
    std::string cache_what;
    cache->add_option("action", cache_what, "stats | clear")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints the message; 0 for --help
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (tables->parsed()) return cmd_tables(g, inject_wrong_extra);
        if (mindist->parsed()) return cmd_mindist(g);
        if (dw->parsed()) return cmd_dual_weights(g, dw_brute, dw_predict, dw_compare);
        if (mn->parsed())
            return cmd_mn_check(g, mn_a1, mn_weight, a1_opt->count() > 0, w_opt->count() > 0);
        if (x->parsed()) return cmd_x(g, x_what);
        if (cache->parsed()) return cmd_cache(g, cache_what);
        throw ConfigError("no subcommand");
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
