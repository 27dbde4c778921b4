#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cg2/codes.hpp"
#include "cg2/field.hpp"

namespace cg2 {

// On-disk cache of enumeration results, one JSON-lines file per (kind, m,
// modulus). Every file starts with a header line {version, kind, m,
// modulus_hex}; a file whose header does not match the requesting field is
// ignored (never deleted). Whole-file writes go to a temp file first and are
// renamed into place.
class Cache {
public:
    explicit Cache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<WeightDistribution> load_distribution(const Field& F) const;
    void store_distribution(const Field& F, const WeightDistribution& dist) const;

    struct WeightRecord {
        std::uint32_t a = 0, b = 0, c = 0;
        std::uint32_t weight = 0;
    };
    void append_weight_record(const Field& F, const WeightRecord& rec) const;
    std::vector<WeightRecord> load_weight_records(const Field& F) const;

    struct Stats {
        std::uint64_t files = 0;
        std::uint64_t bytes = 0;
        std::uint64_t records = 0;  // data lines across all files
    };
    Stats stats() const;
    // Removes this cache's files (recognized by name pattern). Returns count.
    std::uint64_t clear() const;

private:
    std::filesystem::path dist_path(const Field& F) const;
    std::filesystem::path records_path(const Field& F) const;
    std::filesystem::path dir_;
};

}  // namespace cg2
