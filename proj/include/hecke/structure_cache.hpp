#pragma once

// Persistent table of structure-constant evaluations and interpolated
// polynomials. The on-disk form is line-delimited JSON:
//
//   {"lam":[1,1],"mu":[[1,0],[1,0]],"q":2,"count":3}
//   {"lam":[1,1],"mu":[[1,0],[1,0]],"poly":[1,1]}
//
// The file is append-only. Loading verifies that repeated keys carry equal
// payloads. One StructureCache instance is the only writer of its file;
// lookups may run concurrently with inserts.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "hecke/qpolynomial.hpp"
#include "hecke/weights.hpp"

namespace hecke {

class StructureCache {
   public:
    /// In-memory only.
    StructureCache() = default;
    /// Loads `path` if it exists and appends new records to it.
    explicit StructureCache(const std::filesystem::path& path);

    StructureCache(const StructureCache&) = delete;
    StructureCache& operator=(const StructureCache&) = delete;

    std::optional<Integer> count(const CoweightTuple& mu, const DominantCoweight& lam, int q) const;
    /// ConsistencyError if the key is present with a different value.
    void put_count(const CoweightTuple& mu, const DominantCoweight& lam, int q, const Integer& value);

    std::optional<QPolynomial> poly(const CoweightTuple& mu, const DominantCoweight& lam) const;
    void put_poly(const CoweightTuple& mu, const DominantCoweight& lam, const QPolynomial& value);

    std::size_t count_records() const;
    std::size_t poly_records() const;

   private:
    using InstanceKey = std::pair<std::vector<int>, std::vector<std::vector<int>>>;
    using CountKey = std::tuple<std::vector<int>, std::vector<std::vector<int>>, int>;

    static InstanceKey instance_key(const CoweightTuple& mu, const DominantCoweight& lam);
    void load(const std::filesystem::path& path);
    void append_line(const std::string& line);

    mutable std::shared_mutex mutex_;
    std::map<CountKey, Integer> counts_;
    std::map<InstanceKey, QPolynomial> polys_;
    std::optional<std::ofstream> sink_;
};

}  // namespace hecke
