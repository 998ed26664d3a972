#pragma once

// Root-datum combinatorics for GL_n: dominant coweights, dominance order,
// the rho-pairing and a few classical statistics on partitions.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using Integer = boost::multiprecision::cpp_int;

/// A (not necessarily dominant) integer vector of length n.
using Weight = std::vector<int>;

/// Weakly decreasing integer vector of length n >= 1.
class DominantCoweight {
   public:
    /// Throws InvalidInput if `parts` is empty or not weakly decreasing.
    explicit DominantCoweight(std::vector<int> parts);

    /// The zero coweight of rank n.
    static DominantCoweight zero(int rank);

    /// Parses "2,1,0". If `rank` is positive the result must have that many parts.
    static DominantCoweight parse(std::string_view text, int rank = 0);

    /// Sorts an arbitrary weight into the dominant chamber.
    static DominantCoweight sorted(Weight w);

    int rank() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int sum() const;
    bool is_partition() const { return parts_.back() >= 0; }
    bool is_zero() const;

    /// Adds c to every part (tensoring with det^c).
    DominantCoweight shifted(int c) const;

    std::string to_string() const;

    auto operator<=>(const DominantCoweight&) const = default;
    bool operator==(const DominantCoweight&) const = default;

   private:
    std::vector<int> parts_;
};

/// An ordered tuple mu_1, ..., mu_r of dominant coweights of a common rank.
/// The rank is stored separately so that the empty tuple still knows it.
class CoweightTuple {
   public:
    CoweightTuple(int rank, std::vector<DominantCoweight> factors);

    int rank() const { return rank_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }
    const std::vector<DominantCoweight>& factors() const { return factors_; }
    const DominantCoweight& operator[](std::size_t i) const { return factors_[i]; }

    /// |mu_.| = mu_1 + ... + mu_r (zero for the empty tuple).
    DominantCoweight total() const;

    /// Factors i, i+1, ... as a new tuple.
    CoweightTuple suffix(std::size_t from) const;
    CoweightTuple prefix(std::size_t count) const;

    std::string to_string() const;

    auto operator<=>(const CoweightTuple&) const = default;
    bool operator==(const CoweightTuple&) const = default;

   private:
    int rank_;
    std::vector<DominantCoweight> factors_;
};

/// Exact value in (1/2)Z, stored as twice the value.
struct HalfInteger {
    std::int64_t twice = 0;

    bool is_integral() const { return twice % 2 == 0; }
    /// Throws ConsistencyError when the value is not an integer.
    std::int64_t integral() const;
    std::string to_string() const;

    auto operator<=>(const HalfInteger&) const = default;
};

/// b - a is a nonnegative sum of positive coroots: equal sums and prefix sums of a
/// bounded by those of b. Throws InvalidInput on rank mismatch.
bool dominance_leq(const DominantCoweight& a, const DominantCoweight& b);

/// <rho, v> with rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2).
HalfInteger rho_pairing(std::span<const int> v);

/// <rho, b - a>; integral whenever a <= b.
HalfInteger rho_pairing(const DominantCoweight& b, const DominantCoweight& a);

/// All root pairings lie in {-1, 0, 1}.
bool is_minuscule(const DominantCoweight& mu);

/// n(lambda) = sum (i-1) lambda_i. Requires a partition.
std::int64_t n_stat(const DominantCoweight& lam);

/// Weyl dimension formula for GL_n.
Integer weyl_dimension(const DominantCoweight& lam);

/// Partitions of `total` with at most `rank` parts, padded to length `rank`,
/// in reverse lexicographic order ((2,0) before (1,1)).
std::vector<DominantCoweight> partitions(int total, int rank);

/// Every dominant coweight nu with nu <= top, in reverse lexicographic order.
std::vector<DominantCoweight> dominated_by(const DominantCoweight& top);

/// Result of shifting an instance by central coweights so all data are partitions.
struct NormalizedInstance {
    CoweightTuple mu;
    DominantCoweight lambda;
};

/// mu_i -> mu_i - min(mu_i), lambda -> lambda - sum_i min(mu_i).
/// Throws InvalidInput on rank mismatch.
NormalizedInstance normalize(const CoweightTuple& mu, const DominantCoweight& lambda);

}  // namespace hecke
