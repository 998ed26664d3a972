#pragma once

// Dense linear algebra over the small finite fields in finite_field.hpp.

#include <optional>
#include <vector>

#include "hecke/finite_field.hpp"

namespace hecke {

using FieldVector = std::vector<FiniteField::Element>;

/// Square matrix stored row-major; apply() computes M v.
class FieldMatrix {
   public:
    FieldMatrix(const FiniteField& field, int dim);

    int dimension() const { return dim_; }
    FiniteField::Element at(int row, int col) const { return data_[static_cast<std::size_t>(row * dim_ + col)]; }
    void set(int row, int col, FiniteField::Element v) { data_[static_cast<std::size_t>(row * dim_ + col)] = v; }

    FieldVector apply(const FieldVector& v) const;
    FieldMatrix operator*(const FieldMatrix& rhs) const;
    bool is_zero() const;
    const FiniteField& field() const { return *field_; }

   private:
    const FiniteField* field_;
    int dim_;
    FieldVector data_;
};

/// A subspace of F_q^d held in reduced row echelon form, rows sorted by pivot.
/// The form is canonical: two subspaces are equal iff their rows are equal.
class Subspace {
   public:
    Subspace(const FiniteField& field, int ambient_dim);

    static Subspace span(const FiniteField& field, int ambient_dim, const std::vector<FieldVector>& generators);
    static Subspace whole(const FiniteField& field, int ambient_dim);
    /// Adopts rows that are already in reduced echelon form, sorted by pivot. Unchecked.
    static Subspace from_echelon(const FiniteField& field, int ambient_dim, std::vector<FieldVector> rows,
                                 std::vector<int> pivots);

    int ambient_dimension() const { return dim_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<FieldVector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const FiniteField& field() const { return *field_; }

    /// v minus its projection along the pivot columns; zero iff v is in the subspace.
    FieldVector reduce(FieldVector v) const;
    bool contains(const FieldVector& v) const;
    bool contains(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;

    /// Image under a linear map given as a function on vectors.
    template <class Map>
    Subspace image(Map&& map) const {
        std::vector<FieldVector> gens;
        gens.reserve(rows_.size());
        for (const auto& r : rows_) gens.push_back(map(r));
        return span(*field_, dim_, gens);
    }

    bool operator==(const Subspace& other) const { return dim_ == other.dim_ && rows_ == other.rows_; }

   private:
    const FiniteField* field_;
    int dim_;
    std::vector<FieldVector> rows_;
    std::vector<int> pivots_;
};

/// Solution set {particular + span(kernel)} of A x = b, or nullopt if empty.
struct AffineSolution {
    FieldVector particular;
    std::vector<FieldVector> kernel;
};

/// `equations[i]` holds the coefficients of row i of A.
std::optional<AffineSolution> solve_affine(const FiniteField& field, int unknowns,
                                           std::vector<FieldVector> equations, FieldVector rhs);

/// Calls visit(x) for every x = particular + sum a_j kernel_j, a_j in F_q.
template <class Visit>
void for_each_solution(const FiniteField& field, const AffineSolution& sol, Visit&& visit) {
    const std::size_t k = sol.kernel.size();
    std::vector<int> coeff(k, 0);
    FieldVector x = sol.particular;
    const int q = field.order();
    while (true) {
        visit(static_cast<const FieldVector&>(x));
        std::size_t j = 0;
        // Odometer over coefficient encodings; x tracks particular + sum coeff_j kernel_j.
        for (; j < k; ++j) {
            const auto& kv = sol.kernel[j];
            const auto before = static_cast<FiniteField::Element>(coeff[j]);
            const int next = coeff[j] + 1 < q ? coeff[j] + 1 : 0;
            const auto after = static_cast<FiniteField::Element>(next);
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = field.add(field.sub(x[i], field.mul(before, kv[i])), field.mul(after, kv[i]));
            coeff[j] = next;
            if (next != 0) break;
        }
        if (j == k) return;
    }
}

}  // namespace hecke
