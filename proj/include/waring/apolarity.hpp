#pragma once

#include <optional>
#include <vector>

#include "waring/polynomial.hpp"

namespace waring {

/// Point of projective space, scaled so its first nonzero coordinate is 1.
class ProjectivePoint {
   public:
    /// Throws std::invalid_argument if all coordinates are zero.
    explicit ProjectivePoint(std::vector<Rational> coords);
    ProjectivePoint(std::initializer_list<Rational> coords) : ProjectivePoint(std::vector<Rational>(coords)) {}

    std::size_t size() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Rational> coordinates() const noexcept { return coords_; }

    /// p_0 x_0 + ... + p_n x_n with the canonical coordinates.
    LinearForm form() const { return LinearForm(coords_); }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

   private:
    std::vector<Rational> coords_;
};

/// Ordered set of distinct points of a common projective space.
class PointSet {
   public:
    PointSet() = default;
    /// Throws std::invalid_argument on duplicates (after canonical scaling) or
    /// mixed dimensions.
    explicit PointSet(std::vector<ProjectivePoint> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

   private:
    std::vector<ProjectivePoint> points_;
};

/// Cartesian grid {[1 : p_1 : ... : p_n]} with p_i drawn from axes[i-1]; the
/// first axis varies slowest.
PointSet grid_points(const std::vector<std::vector<Rational>>& axes);

struct DecompositionTerm {
    Rational coeff;
    LinearForm form;

    friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// target = sum of coeff * form^deg(target).
struct Decomposition {
    Monomial target;
    std::vector<DecompositionTerm> terms;

    std::size_t size() const noexcept { return terms.size(); }
    unsigned degree() const noexcept { return target.degree(); }
};

/// The expanded right-hand side sum of coeff * form^d.
Polynomial expand(const Decomposition& dec);

/// True iff the expansion equals the target monomial exactly.
bool verify_decomposition(const Decomposition& dec);

/// op annihilates M under the differentiation action.
bool perp_membership(const Monomial& m, const Polynomial& op);

struct SolveDiagnostic {
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    /// Dimension of the solution space; free unknowns are set to zero.
    std::size_t null_dimension = 0;
    /// Points whose coefficient came out zero and were dropped.
    std::size_t pruned = 0;
};

struct SolveOutcome {
    /// Empty when the point set does not support a decomposition of the target.
    std::optional<Decomposition> decomposition;
    SolveDiagnostic diagnostic;
};

/// Finds coefficients c_P with sum c_P L_P^d = M by an exact fraction-free
/// solve over all degree-d coefficients.
SolveOutcome solve_decomposition(const Monomial& m, const PointSet& points);

/// Same problem for a grid point set, using the tensor-product structure: one
/// Vandermonde solve per axis, then the product coefficients are certified by
/// expansion. Agrees with solve_decomposition whenever the full system has a
/// unique solution.
SolveOutcome solve_grid_decomposition(const Monomial& m, const std::vector<std::vector<Rational>>& axes);

}  // namespace waring
