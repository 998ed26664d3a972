#include "hecke/structure_cache.hpp"

#include <iterator>
#include <mutex>
#include <string>

#include <json.hpp>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using json = nlohmann::json;

json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw InvalidInput("cache record: expected an integer, got " + j.dump());
}

}  // namespace

StructureCache::StructureCache(const std::filesystem::path& path) {
    bool terminate_last = false;
    if (std::filesystem::exists(path)) {
        load(path);
        // Appended records must start on a fresh line: cut a torn tail, end a whole one.
        std::ifstream in(path, std::ios::binary);
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (!text.empty() && text.back() != '\n') {
            const auto keep = text.find_last_of('\n');
            const auto start = keep == std::string::npos ? 0 : keep + 1;
            in.close();
            if (json::accept(text.substr(start))) terminate_last = true;
            else std::filesystem::resize_file(path, start);
        }
    }
    sink_.emplace(path, std::ios::app);
    if (!*sink_) throw InvalidInput("cannot open cache file " + path.string() + " for appending");
    if (terminate_last) *sink_ << '\n' << std::flush;
}

StructureCache::InstanceKey StructureCache::instance_key(const CoweightTuple& mu, const DominantCoweight& lam) {
    std::vector<std::vector<int>> m;
    for (const auto& f : mu.factors()) m.push_back(f.parts());
    return {lam.parts(), std::move(m)};
}

void StructureCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            // A torn final record (writer interrupted mid-line) is dropped.
            if (in.peek() == std::char_traits<char>::eof()) break;
            throw InvalidInput(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        try {
            auto lam = rec.at("lam").get<std::vector<int>>();
            auto mu = rec.at("mu").get<std::vector<std::vector<int>>>();
            if (rec.contains("count")) {
                CountKey key{lam, mu, rec.at("q").get<int>()};
                const Integer value = integer_from_json(rec.at("count"));
                auto [it, inserted] = counts_.emplace(key, value);
                if (!inserted && it->second != value)
                    throw ConsistencyError(path.string() + ":" + std::to_string(lineno) +
                                           ": conflicting count for a repeated key");
            } else if (rec.contains("poly")) {
                std::vector<Integer> coeffs;
                for (const auto& c : rec.at("poly")) coeffs.push_back(integer_from_json(c));
                QPolynomial value(std::move(coeffs));
                auto [it, inserted] = polys_.emplace(InstanceKey{lam, mu}, value);
                if (!inserted && !(it->second == value))
                    throw ConsistencyError(path.string() + ":" + std::to_string(lineno) +
                                           ": conflicting polynomial for a repeated key");
            } else {
                throw InvalidInput("record has neither count nor poly");
            }
        } catch (const json::exception& e) {
            throw InvalidInput(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void StructureCache::append_line(const std::string& line) {
    if (!sink_) return;
    // One write per record keeps records whole for concurrent readers.
    const std::string record = line + '\n';
    sink_->write(record.data(), static_cast<std::streamsize>(record.size()));
    sink_->flush();
}

std::optional<Integer> StructureCache::count(const CoweightTuple& mu, const DominantCoweight& lam, int q) const {
    auto [l, m] = instance_key(mu, lam);
    std::shared_lock lock(mutex_);
    auto it = counts_.find(CountKey{l, m, q});
    if (it == counts_.end()) return std::nullopt;
    return it->second;
}

void StructureCache::put_count(const CoweightTuple& mu, const DominantCoweight& lam, int q, const Integer& value) {
    auto [l, m] = instance_key(mu, lam);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = counts_.emplace(CountKey{l, m, q}, value);
    if (!inserted) {
        if (it->second != value)
            throw ConsistencyError("cache: conflicting count for " + mu.to_string() + " -> " + lam.to_string() +
                                   " at q=" + std::to_string(q));
        return;
    }
    json rec{{"lam", l}, {"mu", m}, {"q", q}, {"count", integer_to_json(value)}};
    append_line(rec.dump());
}

std::optional<QPolynomial> StructureCache::poly(const CoweightTuple& mu, const DominantCoweight& lam) const {
    std::shared_lock lock(mutex_);
    auto it = polys_.find(instance_key(mu, lam));
    if (it == polys_.end()) return std::nullopt;
    return it->second;
}

void StructureCache::put_poly(const CoweightTuple& mu, const DominantCoweight& lam, const QPolynomial& value) {
    auto key = instance_key(mu, lam);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = polys_.emplace(key, value);
    if (!inserted) {
        if (!(it->second == value))
            throw ConsistencyError("cache: conflicting polynomial for " + mu.to_string() + " -> " + lam.to_string());
        return;
    }
    json coeffs = json::array();
    for (const auto& c : value.coefficients()) coeffs.push_back(integer_to_json(c));
    json rec{{"lam", key.first}, {"mu", key.second}, {"poly", coeffs}};
    append_line(rec.dump());
}

std::size_t StructureCache::count_records() const {
    std::shared_lock lock(mutex_);
    return counts_.size();
}

std::size_t StructureCache::poly_records() const {
    std::shared_lock lock(mutex_);
    return polys_.size();
}

}  // namespace hecke
