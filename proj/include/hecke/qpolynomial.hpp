#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hecke/weights.hpp"

namespace hecke {

/// Integer polynomial in q. Coefficients are stored in ascending degree with no
/// trailing zeros, so the zero polynomial has no coefficients and degree -1.
class QPolynomial {
   public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Integer> coefficients);
    QPolynomial(std::initializer_list<long> coefficients);

    static QPolynomial constant(const Integer& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(int k) const;
    Integer leading_coefficient() const;

    Integer evaluate(const Integer& q) const;

    QPolynomial operator+(const QPolynomial& rhs) const;
    QPolynomial operator-(const QPolynomial& rhs) const;
    QPolynomial operator*(const QPolynomial& rhs) const;
    QPolynomial& operator+=(const QPolynomial& rhs);

    bool operator==(const QPolynomial&) const = default;

    /// "[1,1]" for q+1, "[]" for zero.
    std::string to_string() const;

   private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// One sample (q, value) of a counting function.
struct Sample {
    std::int64_t q;
    Integer value;
};

/// The unique polynomial of degree <= degree_bound through the first
/// degree_bound + 1 samples. The remaining samples must lie on it and the
/// coefficients must be integers, else InterpolationInconsistency.
QPolynomial interpolate_bounded(const std::vector<Sample>& points, int degree_bound);

}  // namespace hecke
