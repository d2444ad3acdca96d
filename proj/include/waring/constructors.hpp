#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/ranks.hpp"

namespace waring {

/// a0 + ai distinct rationals whose e_{a0} vanishes, so that
/// prod_j (X_i - r_j X_0) has no X_0^{a0} X_i^{ai} term.
struct GappedRootSet {
    unsigned a0;
    unsigned ai;
    std::vector<Rational> roots;
};

/// Seeds the first a0 + ai - 1 roots from 1, 2, -1, 3, -2, 4, -3, ... and
/// solves e_{a0} = 0 for the last one, which is linear in it. When that is
/// impossible (e_{a0-1} of the seed vanishes) or the solution collides with a
/// seed value, the largest seed value is bumped to the next integer not yet
/// in the seed and the solve is retried.
/// Throws std::invalid_argument unless 1 <= a0 <= ai.
GappedRootSet gapped_roots(unsigned a0, unsigned ai);

/// Per-axis root sets of the upper-bound grid: axis i holds
/// gapped_roots(a0, a_i).roots. Requires a canonical (sorted) monomial.
std::vector<std::vector<Rational>> upper_bound_axes(const Monomial& m);

/// Grid of prod_{i>=1} (a0 + a_i) real points apolar to m.
PointSet upper_bound_points(const Monomial& m);

/// `count` distinct integers summing to zero: 0, 1, -1, ..., m, -m for odd
/// counts and 1, -1, ..., m, -m for even ones.
std::vector<Rational> symmetric_sum_zero_values(unsigned count);

/// Throws std::invalid_argument unless the values are pairwise distinct,
/// sum to zero, and there are `count` of them.
void validate_sum_zero_values(const std::vector<Rational>& values, unsigned count);

/// Axes for the least-exponent-one family. `values`, when given, overrides the
/// symmetric defaults; one sum-zero set of a_i + 1 distinct values per axis.
std::vector<std::vector<Rational>> a0_eq_1_axes(const Monomial& m,
                                                const std::optional<std::vector<std::vector<Rational>>>& values = {});

/// Grid of prod_{i>=1} (a_i + 1) points for a canonical monomial with a0 = 1.
/// Throws std::invalid_argument when the least exponent is not 1.
PointSet min_points_a0_eq_1(const Monomial& m,
                            const std::optional<std::vector<std::vector<Rational>>>& values = {});

/// Closed-form decomposition of x0^2 ... xn^2 over the (3^(n+1) - 1) / 2
/// points with entries in {0, 1, -1} and leading entry 1; the point with k
/// nonzero entries gets coefficient (-2)^(n+1-k) * 2 / (2n+2)!.
/// Certified by expansion before returning.
Decomposition squares_decomposition(unsigned n);

struct DecomposeOptions {
    /// Force a specific construction instead of the smallest applicable one.
    std::optional<Method> method;
    /// Replacement value sets for the a0eq1 construction, in sorted-exponent
    /// variable order.
    std::optional<std::vector<std::vector<Rational>>> a0eq1_values;
};

struct RealDecomposition {
    Decomposition decomposition;
    Method method;
    SolveDiagnostic diagnostic;
};

/// Certified real decomposition of m, reported in m's own variable order.
/// The default construction is real_rank_upper(m).method.
/// Throws std::invalid_argument when a forced method does not apply and
/// std::logic_error if a construction fails to certify.
RealDecomposition decompose_real(const Monomial& m, const DecomposeOptions& options = {});

}  // namespace waring
