#include "cg2/cache.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cg2/errors.hpp"

namespace cg2 {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kCacheVersion = 1;

std::string hex32(std::uint32_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

bool header_matches(const std::string& line, const char* kind, const Field& F) {
    json h = json::parse(line, nullptr, false);
    if (h.is_discarded() || !h.is_object()) return false;
    return h.value("version", -1) == kCacheVersion && h.value("kind", "") == kind &&
           h.value("m", -1) == F.m() && h.value("modulus_hex", "") == F.modulus_hex();
}

json header_for(const char* kind, const Field& F) {
    return json{{"version", kCacheVersion},
                {"kind", kind},
                {"m", F.m()},
                {"modulus_hex", F.modulus_hex()}};
}

}  // namespace

Cache::Cache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path Cache::dist_path(const Field& F) const {
    return dir_ / ("cg2_dist_m" + std::to_string(F.m()) + "_" + F.modulus_hex() + ".jsonl");
}

fs::path Cache::records_path(const Field& F) const {
    return dir_ / ("cg2_weights_m" + std::to_string(F.m()) + "_" + F.modulus_hex() + ".jsonl");
}

std::optional<WeightDistribution> Cache::load_distribution(const Field& F) const {
    std::ifstream in(dist_path(F));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || !header_matches(line, "dual_weight_distribution", F))
        return std::nullopt;  // foreign or stale header: ignore, never delete
    WeightDistribution dist;
    dist.n = F.n();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded()) return std::nullopt;
        const std::uint32_t w = rec.at("weight").get<std::uint32_t>();
        dist.counts[w] = BigInt(rec.at("count").get<std::string>());
    }
    if (dist.counts.empty()) return std::nullopt;
    return dist;
}

void Cache::store_distribution(const Field& F, const WeightDistribution& dist) const {
    const fs::path target = dist_path(F);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ConfigError("cache: cannot write " + tmp.string());
        out << header_for("dual_weight_distribution", F).dump() << "\n";
        for (const auto& [w, c] : dist.counts)
            out << json{{"weight", w}, {"count", c.str()}}.dump() << "\n";
    }
    fs::rename(tmp, target);
}

void Cache::append_weight_record(const Field& F, const WeightRecord& rec) const {
    const fs::path target = records_path(F);
    if (!fs::exists(target)) {
        const fs::path tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw ConfigError("cache: cannot write " + tmp.string());
            out << header_for("weight_records", F).dump() << "\n";
        }
        fs::rename(tmp, target);
    }
    std::ofstream out(target, std::ios::app);
    out << json{{"m", F.m()},
                {"a", hex32(rec.a)},
                {"b", hex32(rec.b)},
                {"c", hex32(rec.c)},
                {"weight", rec.weight}}
               .dump()
        << "\n";
}

std::vector<Cache::WeightRecord> Cache::load_weight_records(const Field& F) const {
    std::vector<WeightRecord> out;
    std::ifstream in(records_path(F));
    if (!in) return out;
    std::string line;
    if (!std::getline(in, line) || !header_matches(line, "weight_records", F)) return out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded()) continue;
        WeightRecord r;
        r.a = static_cast<std::uint32_t>(std::stoul(rec.at("a").get<std::string>(), nullptr, 16));
        r.b = static_cast<std::uint32_t>(std::stoul(rec.at("b").get<std::string>(), nullptr, 16));
        r.c = static_cast<std::uint32_t>(std::stoul(rec.at("c").get<std::string>(), nullptr, 16));
        r.weight = rec.at("weight").get<std::uint32_t>();
        out.push_back(r);
    }
    return out;
}

Cache::Stats Cache::stats() const {
    Stats s;
    if (!fs::exists(dir_)) return s;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.rfind("cg2_", 0) != 0 || entry.path().extension() != ".jsonl") continue;
        ++s.files;
        s.bytes += entry.file_size();
        std::ifstream in(entry.path());
        std::string line;
        std::uint64_t lines = 0;
        while (std::getline(in, line)) ++lines;
        if (lines > 0) s.records += lines - 1;  // minus header
    }
    return s;
}

std::uint64_t Cache::clear() const {
    std::uint64_t removed = 0;
    if (!fs::exists(dir_)) return removed;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.rfind("cg2_", 0) != 0 || entry.path().extension() != ".jsonl") continue;
        fs::remove(entry.path());
        ++removed;
    }
    return removed;
}

}  // namespace cg2
