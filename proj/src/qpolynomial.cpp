#include "hecke/qpolynomial.hpp"

#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "hecke/errors.hpp"

namespace hecke {

using Rational = boost::multiprecision::cpp_rational;

QPolynomial::QPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

QPolynomial QPolynomial::constant(const Integer& c) { return QPolynomial(std::vector<Integer>{c}); }

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer QPolynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Integer QPolynomial::leading_coefficient() const { return is_zero() ? Integer(0) : coeffs_.back(); }

Integer QPolynomial::evaluate(const Integer& q) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

QPolynomial QPolynomial::operator+(const QPolynomial& rhs) const {
    QPolynomial out = *this;
    out += rhs;
    return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial QPolynomial::operator-(const QPolynomial& rhs) const {
    std::vector<Integer> c = coeffs_;
    if (c.size() < rhs.coeffs_.size()) c.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] -= rhs.coeffs_[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].str();
    }
    return s + ']';
}

QPolynomial interpolate_bounded(const std::vector<Sample>& points, int degree_bound) {
    if (degree_bound < 0) throw InvalidInput("degree bound must be nonnegative");
    const auto needed = static_cast<std::size_t>(degree_bound) + 1;
    if (points.size() < needed)
        throw InvalidInput("interpolation with degree bound " + std::to_string(degree_bound) + " needs " +
                           std::to_string(needed) + " points, got " + std::to_string(points.size()));
    std::set<std::int64_t> seen;
    for (const auto& p : points) {
        if (p.q < 2) throw InvalidInput("interpolation nodes must be >= 2");
        if (!seen.insert(p.q).second) throw InvalidInput("duplicate interpolation node " + std::to_string(p.q));
    }

    // Newton divided differences on the first `needed` points.
    std::vector<Rational> dd;
    for (std::size_t i = 0; i < needed; ++i) dd.emplace_back(points[i].value);
    for (std::size_t level = 1; level < needed; ++level)
        for (std::size_t i = needed - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].q - points[i - level].q);
            if (i == level) break;
        }

    // Expand the Newton form into monomial coefficients (Horner from the top).
    std::vector<Rational> mono(needed, Rational(0));
    for (std::size_t k = needed; k-- > 0;) {
        // mono <- mono * (q - x_k) + dd[k]
        const Rational xk(points[k].q);
        for (std::size_t d = needed - 1; d > 0; --d) mono[d] = mono[d - 1] - xk * mono[d];
        mono[0] = -xk * mono[0];
        mono[0] += dd[k];
    }

    std::vector<Integer> coeffs;
    for (std::size_t d = 0; d < needed; ++d) {
        if (denominator(mono[d]) != 1)
            throw InterpolationInconsistency("interpolated coefficient of q^" + std::to_string(d) +
                                             " is not an integer: " + mono[d].str());
        coeffs.push_back(numerator(mono[d]));
    }
    QPolynomial poly(std::move(coeffs));
    for (std::size_t i = needed; i < points.size(); ++i) {
        const Integer at = poly.evaluate(points[i].q);
        if (at != points[i].value)
            throw InterpolationInconsistency("point (" + std::to_string(points[i].q) + ", " +
                                             points[i].value.str() + ") is off the interpolant " +
                                             poly.to_string() + " (value " + at.str() + ")");
    }
    return poly;
}

}  // namespace hecke
