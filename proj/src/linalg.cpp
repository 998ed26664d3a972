#include "hecke/linalg.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

FieldMatrix::FieldMatrix(const FiniteField& field, int dim)
    : field_(&field), dim_(dim), data_(static_cast<std::size_t>(dim * dim), 0) {}

FieldVector FieldMatrix::apply(const FieldVector& v) const {
    FieldVector out(static_cast<std::size_t>(dim_), 0);
    for (int i = 0; i < dim_; ++i) {
        FiniteField::Element acc = 0;
        for (int j = 0; j < dim_; ++j) acc = field_->add(acc, field_->mul(at(i, j), v[static_cast<std::size_t>(j)]));
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
    FieldMatrix out(*field_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            FiniteField::Element acc = 0;
            for (int k = 0; k < dim_; ++k) acc = field_->add(acc, field_->mul(at(i, k), rhs.at(k, j)));
            out.set(i, j, acc);
        }
    return out;
}

bool FieldMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](auto x) { return x == 0; });
}

Subspace::Subspace(const FiniteField& field, int ambient_dim) : field_(&field), dim_(ambient_dim) {}

Subspace Subspace::whole(const FiniteField& field, int ambient_dim) {
    Subspace s(field, ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) {
        FieldVector e(static_cast<std::size_t>(ambient_dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        s.rows_.push_back(std::move(e));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::from_echelon(const FiniteField& field, int ambient_dim, std::vector<FieldVector> rows,
                                std::vector<int> pivots) {
    Subspace s(field, ambient_dim);
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::span(const FiniteField& f, int ambient_dim, const std::vector<FieldVector>& generators) {
    std::vector<FieldVector> m = generators;
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < ambient_dim && rank < m.size(); ++col) {
        const auto c = static_cast<std::size_t>(col);
        std::size_t pr = rank;
        while (pr < m.size() && m[pr][c] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[rank], m[pr]);
        const auto inv = f.inv(m[rank][c]);
        for (auto& x : m[rank]) x = f.mul(x, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const auto factor = m[r][c];
            for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
        }
        pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    Subspace s(f, ambient_dim);
    s.rows_ = std::move(m);
    s.pivots_ = std::move(pivots);
    return s;
}

FieldVector Subspace::reduce(FieldVector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto c = v[static_cast<std::size_t>(pivots_[r])];
        if (c == 0) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = field_->sub(v[k], field_->mul(c, rows_[r][k]));
    }
    return v;
}

bool Subspace::contains(const FieldVector& v) const {
    const FieldVector res = reduce(v);
    return std::all_of(res.begin(), res.end(), [](auto x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const auto& r) { return contains(r); });
}

Subspace Subspace::operator+(const Subspace& other) const {
    std::vector<FieldVector> gens = rows_;
    gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
    return span(*field_, dim_, gens);
}

std::optional<AffineSolution> solve_affine(const FiniteField& f, int unknowns, std::vector<FieldVector> equations,
                                           FieldVector rhs) {
    const auto n = static_cast<std::size_t>(unknowns);
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < equations.size(); ++col) {
        std::size_t pr = rank;
        while (pr < equations.size() && equations[pr][col] == 0) ++pr;
        if (pr == equations.size()) continue;
        std::swap(equations[rank], equations[pr]);
        std::swap(rhs[rank], rhs[pr]);
        const auto inv = f.inv(equations[rank][col]);
        for (auto& x : equations[rank]) x = f.mul(x, inv);
        rhs[rank] = f.mul(rhs[rank], inv);
        for (std::size_t r = 0; r < equations.size(); ++r) {
            if (r == rank || equations[r][col] == 0) continue;
            const auto factor = equations[r][col];
            for (std::size_t k = 0; k < n; ++k)
                equations[r][k] = f.sub(equations[r][k], f.mul(factor, equations[rank][k]));
            rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[rank]));
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    for (std::size_t r = rank; r < equations.size(); ++r)
        if (rhs[r] != 0) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(n, 0);
    for (std::size_t r = 0; r < rank; ++r) sol.particular[static_cast<std::size_t>(pivot_col[r])] = rhs[r];
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        FieldVector k(n, 0);
        k[free] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            k[static_cast<std::size_t>(pivot_col[r])] = f.neg(equations[r][free]);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

}  // namespace hecke
