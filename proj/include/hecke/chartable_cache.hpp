#pragma once

// On-disk character tables, one JSON file per weight:
//   chartable_n<N>.json = {"version", "weight", "partitions", "values", "checksum"}
// The checksum is FNV-1a over the canonical value list; a file whose checksum
// does not match is treated as absent and rebuilt.

#include "hecke/combinatorics.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

class CharTableCache {
public:
    static constexpr int kVersion = 1;

    explicit CharTableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// Directory from HECKE_CACHE_DIR, if set.
    static std::optional<std::filesystem::path> from_environment() {
        if (const char* env = std::getenv("HECKE_CACHE_DIR"); env && *env) return std::filesystem::path(env);
        return std::nullopt;
    }

    const std::filesystem::path& dir() const noexcept { return dir_; }

    std::filesystem::path path_for(int n) const { return dir_ / ("chartable_n" + std::to_string(n) + ".json"); }

    static std::uint64_t checksum(const std::vector<long>& values) {
        std::uint64_t h = 1469598103934665603ULL;
        for (long v : values) {
            auto u = static_cast<std::uint64_t>(v);
            for (int i = 0; i < 8; ++i) {
                h ^= (u >> (8 * i)) & 0xFFu;
                h *= 1099511628211ULL;
            }
        }
        return h;
    }

    /// Table for weight n if a valid file exists.
    std::shared_ptr<const CharacterTable> load(int n) const {
        std::ifstream in(path_for(n));
        if (!in) return nullptr;
        try {
            auto j = nlohmann::json::parse(in);
            if (j.at("version").get<int>() != kVersion || j.at("weight").get<int>() != n) return nullptr;
            const auto& parts = partitions_of(n);
            auto names = j.at("partitions").get<std::vector<std::string>>();
            if (names.size() != parts.size()) return nullptr;
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] != parts[i].to_string()) return nullptr;
            std::vector<long> values;
            for (const auto& row : j.at("values"))
                for (const auto& v : row) values.push_back(v.get<long>());
            if (std::to_string(checksum(values)) != j.at("checksum").get<std::string>()) return nullptr;
            return std::make_shared<const CharacterTable>(n, std::move(values));
        } catch (const std::exception&) {
            return nullptr;
        }
    }

    void store(const CharacterTable& t) const {
        std::filesystem::create_directories(dir_);
        nlohmann::json j;
        j["version"] = kVersion;
        j["weight"] = t.weight();
        std::vector<std::string> names;
        for (const auto& p : t.partitions()) names.push_back(p.to_string());
        j["partitions"] = names;
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < t.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t k = 0; k < t.size(); ++k) row.push_back(t.at(i, k));
            rows.push_back(std::move(row));
        }
        j["values"] = std::move(rows);
        j["checksum"] = std::to_string(checksum(t.raw()));
        auto tmp = path_for(t.weight());
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw std::runtime_error("cannot write " + tmp.string());
            out << j.dump() << "\n";
            if (!out) throw std::runtime_error("write failed for " + tmp.string());
        }
        std::filesystem::rename(tmp, path_for(t.weight()));
    }

    struct BuildStats {
        int built = 0;
        int reused = 0;
    };

    /// Ensures files for weights 1..n; valid files are read, not recomputed.
    BuildStats build(int n) const {
        BuildStats stats;
        for (int k = 1; k <= n; ++k) {
            if (load(k)) {
                ++stats.reused;
                continue;
            }
            store(CharacterTable(k));
            ++stats.built;
        }
        return stats;
    }

    /// Weights with a valid file, ascending.
    std::vector<int> stat() const {
        std::vector<int> out;
        if (!std::filesystem::exists(dir_)) return out;
        for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
            auto name = entry.path().filename().string();
            if (name.rfind("chartable_n", 0) != 0 || entry.path().extension() != ".json") continue;
            int n = std::atoi(name.c_str() + 11);
            if (n > 0 && load(n)) out.push_back(n);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Removes every cache file; returns how many were removed.
    int clear() const {
        int removed = 0;
        if (!std::filesystem::exists(dir_)) return removed;
        for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
            auto name = entry.path().filename().string();
            if (name.rfind("chartable_n", 0) == 0) {
                std::filesystem::remove(entry.path());
                ++removed;
            }
        }
        return removed;
    }

    /// Routes CharacterRegistry lookups through this directory.
    void install() const {
        CharTableCache self = *this;
        CharacterRegistry::global().set_loader([self](int n) -> std::shared_ptr<const CharacterTable> {
            if (auto t = self.load(n)) return t;
            auto t = std::make_shared<const CharacterTable>(n);
            try {
                self.store(*t);
            } catch (const std::exception&) {
            }
            return t;
        });
    }

private:
    std::filesystem::path dir_;
};

}  // namespace hecke
