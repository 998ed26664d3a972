#include "hecke/weights.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

DominantCoweight::DominantCoweight(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("coweight must have at least one part");
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i])
            throw InvalidInput("coweight " + to_string() + " is not weakly decreasing");
}

DominantCoweight DominantCoweight::zero(int rank) {
    if (rank < 1) throw InvalidInput("rank must be positive");
    return DominantCoweight(std::vector<int>(static_cast<std::size_t>(rank), 0));
}

DominantCoweight DominantCoweight::parse(std::string_view text, int rank) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(start, end - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw InvalidInput("cannot parse coweight '" + std::string(text) + "'");
        parts.push_back(value);
        start = end + 1;
    }
    if (rank > 0 && static_cast<int>(parts.size()) != rank)
        throw InvalidInput("coweight '" + std::string(text) + "' does not have " +
                           std::to_string(rank) + " parts");
    return DominantCoweight(std::move(parts));
}

DominantCoweight DominantCoweight::sorted(Weight w) {
    std::sort(w.begin(), w.end(), std::greater<>());
    return DominantCoweight(std::move(w));
}

int DominantCoweight::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool DominantCoweight::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x == 0; });
}

DominantCoweight DominantCoweight::shifted(int c) const {
    std::vector<int> p = parts_;
    for (int& x : p) x += c;
    return DominantCoweight(std::move(p));
}

std::string DominantCoweight::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

CoweightTuple::CoweightTuple(int rank, std::vector<DominantCoweight> factors)
    : rank_(rank), factors_(std::move(factors)) {
    if (rank_ < 1) throw InvalidInput("rank must be positive");
    for (const auto& f : factors_)
        if (f.rank() != rank_)
            throw InvalidInput("factor " + f.to_string() + " does not have rank " +
                               std::to_string(rank_));
}

DominantCoweight CoweightTuple::total() const {
    std::vector<int> sum(static_cast<std::size_t>(rank_), 0);
    for (const auto& f : factors_)
        for (int i = 0; i < rank_; ++i) sum[static_cast<std::size_t>(i)] += f[i];
    return DominantCoweight(std::move(sum));
}

CoweightTuple CoweightTuple::suffix(std::size_t from) const {
    from = std::min(from, factors_.size());
    return CoweightTuple(rank_, std::vector<DominantCoweight>(factors_.begin() + static_cast<long>(from),
                                                              factors_.end()));
}

CoweightTuple CoweightTuple::prefix(std::size_t count) const {
    count = std::min(count, factors_.size());
    return CoweightTuple(rank_, std::vector<DominantCoweight>(factors_.begin(),
                                                              factors_.begin() + static_cast<long>(count)));
}

std::string CoweightTuple::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ' ';
        s += '(' + factors_[i].to_string() + ')';
    }
    return s + ')';
}

std::int64_t HalfInteger::integral() const {
    if (!is_integral()) throw ConsistencyError("expected an integral rho-pairing, got " + to_string());
    return twice / 2;
}

std::string HalfInteger::to_string() const {
    if (is_integral()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

bool dominance_leq(const DominantCoweight& a, const DominantCoweight& b) {
    if (a.rank() != b.rank())
        throw InvalidInput("dominance comparison of " + a.to_string() + " and " + b.to_string() +
                           ": rank mismatch");
    if (a.sum() != b.sum()) return false;
    long pa = 0, pb = 0;
    for (int k = 0; k + 1 < a.rank(); ++k) {
        pa += a[k];
        pb += b[k];
        if (pa > pb) return false;
    }
    return true;
}

HalfInteger rho_pairing(std::span<const int> v) {
    const auto n = static_cast<std::int64_t>(v.size());
    std::int64_t twice = 0;
    for (std::int64_t i = 0; i < n; ++i) twice += (n - 1 - 2 * i) * v[static_cast<std::size_t>(i)];
    return HalfInteger{twice};
}

HalfInteger rho_pairing(const DominantCoweight& b, const DominantCoweight& a) {
    if (a.rank() != b.rank()) throw InvalidInput("rho pairing: rank mismatch");
    Weight diff(static_cast<std::size_t>(a.rank()));
    for (int i = 0; i < a.rank(); ++i) diff[static_cast<std::size_t>(i)] = b[i] - a[i];
    return rho_pairing(diff);
}

bool is_minuscule(const DominantCoweight& mu) { return mu.parts().front() - mu.parts().back() <= 1; }

std::int64_t n_stat(const DominantCoweight& lam) {
    if (!lam.is_partition()) throw InvalidInput("n(lambda) needs a partition, got " + lam.to_string());
    std::int64_t s = 0;
    for (int i = 0; i < lam.rank(); ++i) s += static_cast<std::int64_t>(i) * lam[i];
    return s;
}

Integer weyl_dimension(const DominantCoweight& lam) {
    Integer num = 1, den = 1;
    for (int i = 0; i < lam.rank(); ++i)
        for (int j = i + 1; j < lam.rank(); ++j) {
            num *= lam[i] - lam[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

namespace {

// Weakly decreasing vectors v of length `rank` with v_i in [lo, hi], sum `total`,
// and (optionally) prefix sums bounded by `cap`.
void dominant_fill(std::vector<int>& cur, int pos, int remaining, int hi, int lo,
                   const std::vector<long>* cap, long prefix, std::vector<DominantCoweight>& out) {
    const int rank = static_cast<int>(cur.size());
    if (pos == rank) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    const int slots = rank - pos;
    for (int v = hi; v >= lo; --v) {
        // Remaining parts lie in [lo, v].
        const long rest = static_cast<long>(remaining) - v;
        if (rest > static_cast<long>(v) * (slots - 1)) break;
        if (rest < static_cast<long>(lo) * (slots - 1)) continue;
        if (cap && prefix + v > (*cap)[static_cast<std::size_t>(pos)]) continue;
        cur[static_cast<std::size_t>(pos)] = v;
        dominant_fill(cur, pos + 1, remaining - v, v, lo, cap, prefix + v, out);
    }
}

}  // namespace

std::vector<DominantCoweight> partitions(int total, int rank) {
    if (rank < 1) throw InvalidInput("rank must be positive");
    std::vector<DominantCoweight> out;
    if (total < 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(rank), 0);
    dominant_fill(cur, 0, total, total, 0, nullptr, 0, out);
    return out;
}

std::vector<DominantCoweight> dominated_by(const DominantCoweight& top) {
    std::vector<long> cap;
    long s = 0;
    for (int x : top.parts()) cap.push_back(s += x);
    std::vector<DominantCoweight> out;
    std::vector<int> cur(static_cast<std::size_t>(top.rank()), 0);
    dominant_fill(cur, 0, top.sum(), top.parts().front(), top.parts().back(), &cap, 0, out);
    return out;
}

NormalizedInstance normalize(const CoweightTuple& mu, const DominantCoweight& lambda) {
    if (lambda.rank() != mu.rank())
        throw InvalidInput("lambda " + lambda.to_string() + " does not have rank " +
                           std::to_string(mu.rank()));
    std::vector<DominantCoweight> shifted;
    int total_shift = 0;
    for (const auto& f : mu.factors()) {
        const int c = -f.parts().back();
        shifted.push_back(f.shifted(c));
        total_shift += c;
    }
    return {CoweightTuple(mu.rank(), std::move(shifted)), lambda.shifted(total_shift)};
}

}  // namespace hecke
