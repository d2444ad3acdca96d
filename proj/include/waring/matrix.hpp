#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Rational trace() const;
    bool is_symmetric() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Result of an exact solve of A x = b.
struct LinearSolution {
    bool consistent = false;
    /// When consistent: the solution with every free variable set to zero.
    std::vector<Rational> x;
    std::size_t rank = 0;
    /// Dimension of the solution space (number of free variables).
    std::size_t null_dimension = 0;
};

/// Fraction-free (Bareiss) row echelon elimination over the integers after
/// scaling each row of [A | b] to integer entries. Pivot columns are taken in
/// order; there is no tolerance anywhere.
LinearSolution solve_exact(const RationalMatrix& a, std::span<const Rational> b);

std::size_t rank(const RationalMatrix& a);

/// Coefficients (lowest degree first) of det(t I - A), via reduction to upper
/// Hessenberg form. Monic of degree A.rows().
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

/// A rational matrix known to be symmetric.
class SymmetricMatrixQ {
   public:
    /// Throws std::invalid_argument if `m` is not square and symmetric.
    explicit SymmetricMatrixQ(RationalMatrix m);

    std::size_t dim() const noexcept { return m_.rows(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const RationalMatrix& matrix() const noexcept { return m_; }

    friend bool operator==(const SymmetricMatrixQ&, const SymmetricMatrixQ&) = default;

   private:
    RationalMatrix m_;
};

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia. Eigenvalues of a real symmetric matrix are real, so
/// Descartes' rule of signs on the characteristic polynomial counts positive
/// and negative eigenvalues exactly; the zero count comes from the rank.
Inertia signature(const SymmetricMatrixQ& b);

}  // namespace waring
