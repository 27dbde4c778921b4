#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "cg2/cache.hpp"
#include "cg2/codes.hpp"
#include "cg2/field.hpp"

using namespace cg2;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("cg2_cache_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

WeightDistribution sample_dist() {
    WeightDistribution d;
    d.n = 63;
    d.counts[0] = 1;
    d.counts[20] = 1234567;
    // a count that overflows every fixed-width integer type
    d.counts[30] = BigInt("123456789012345678901234567890123456789");
    d.counts[44] = 7;
    return d;
}

}  // namespace

TEST_CASE("distribution round trip, including counts beyond 64 bits") {
    TempDir tmp;
    const Cache cache(tmp.path);
    const Field F(6);
    CHECK(!cache.load_distribution(F).has_value());

    const WeightDistribution d = sample_dist();
    cache.store_distribution(F, d);
    const auto back = cache.load_distribution(F);
    REQUIRE(back.has_value());
    CHECK(*back == d);
    // no stray temp file left behind
    CHECK(!fs::exists(tmp.path / "cg2_dist_m6_0x43.jsonl.tmp"));
    CHECK(fs::exists(tmp.path / "cg2_dist_m6_0x43.jsonl"));
}

TEST_CASE("a stale or foreign header is ignored, never deleted") {
    TempDir tmp;
    const Cache cache(tmp.path);
    const Field F43(6, 0x43);
    cache.store_distribution(F43, sample_dist());

    // same m, different modulus: the file names differ, so nothing is found
    const Field F5b(6, 0x5b);
    CHECK(!cache.load_distribution(F5b).has_value());

    // now corrupt the header in place: the load must fail soft
    const fs::path file = tmp.path / "cg2_dist_m6_0x43.jsonl";
    REQUIRE(fs::exists(file));
    {
        std::ofstream out(file, std::ios::trunc);
        out << "{\"version\": 999, \"kind\": \"dual_weight_distribution\", \"m\": 6, "
               "\"modulus_hex\": \"0x43\"}\n";
        out << "{\"weight\": 20, \"count\": \"1\"}\n";
    }
    CHECK(!cache.load_distribution(F43).has_value());
    CHECK(fs::exists(file));  // still there

    {
        std::ofstream out(file, std::ios::trunc);
        out << "not json at all\n";
    }
    CHECK(!cache.load_distribution(F43).has_value());
    CHECK(fs::exists(file));
}

TEST_CASE("weight records append and load in order") {
    TempDir tmp;
    const Cache cache(tmp.path);
    const Field F(5);
    CHECK(cache.load_weight_records(F).empty());

    cache.append_weight_record(F, {1, 2, 3, 16});
    cache.append_weight_record(F, {0x1f, 0, 0x10, 12});
    cache.append_weight_record(F, {7, 7, 7, 22});

    const auto recs = cache.load_weight_records(F);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].a == 1);
    CHECK(recs[0].b == 2);
    CHECK(recs[0].c == 3);
    CHECK(recs[0].weight == 16);
    CHECK(recs[1].a == 0x1f);
    CHECK(recs[1].c == 0x10);
    CHECK(recs[2].weight == 22);

    // records for one field are invisible to another
    const Field other(6);
    CHECK(cache.load_weight_records(other).empty());
}

TEST_CASE("stats and clear touch only this cache's files") {
    TempDir tmp;
    const Cache cache(tmp.path);
    const Field F(6);
    cache.store_distribution(F, sample_dist());
    cache.append_weight_record(F, {1, 2, 3, 20});
    cache.append_weight_record(F, {4, 5, 6, 24});

    // plant a foreign file the cache must not count or remove
    const fs::path foreign = tmp.path / "unrelated.txt";
    {
        std::ofstream out(foreign);
        out << "hands off\n";
    }

    const Cache::Stats s = cache.stats();
    CHECK(s.files == 2);
    CHECK(s.records == 6);  // 4 distribution lines + 2 record lines
    CHECK(s.bytes > 0);

    CHECK(cache.clear() == 2);
    CHECK(fs::exists(foreign));
    CHECK(cache.stats().files == 0);
    CHECK(!cache.load_distribution(F).has_value());
}

TEST_CASE("cache round trip feeds the distance computation") {
    // store the real m = 5 enumeration, reload it, hand it to min_distance_C
    TempDir tmp;
    const Cache cache(tmp.path);
    const Field F(5);
    const WeightDistribution dist = dual_weight_distribution(F);
    cache.store_distribution(F, dist);
    const auto back = cache.load_distribution(F);
    REQUIRE(back.has_value());
    REQUIRE(*back == dist);

    MinDistOptions opt;
    opt.dual_dist = &*back;
    const MinDistanceResult r = min_distance_C(F, opt);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 5);
}

TEST_CASE("constructor creates nested directories") {
    TempDir tmp;
    const fs::path nested = tmp.path / "a" / "b" / "c";
    const Cache cache(nested);
    CHECK(fs::is_directory(nested));
    const Field F(4);
    cache.store_distribution(F, sample_dist());
    CHECK(cache.load_distribution(F).has_value());
}
