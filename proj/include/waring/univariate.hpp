#pragma once

#include <span>
#include <vector>

#include "waring/polynomial.hpp"

namespace waring {

/// e_k(values): sum of all k-fold products. e_0 = 1.
/// Throws std::out_of_range unless 0 <= k <= values.size().
Rational elementary_symmetric(std::span<const Rational> values, int k);

/// Monic product of (t - r) over the roots, as a one-variable Polynomial.
Polynomial polynomial_from_roots(std::span<const Rational> roots);

/// Dense coefficients c_0..c_d (lowest degree first) of a one-variable
/// polynomial. Throws std::invalid_argument if nvars != 1.
std::vector<Rational> dense_coefficients(const Polynomial& p);

Polynomial from_dense(std::span<const Rational> coeffs);

/// Number of distinct real roots of a nonzero one-variable polynomial, from
/// the sign variations of its Sturm sequence at -inf and +inf. The sequence
/// is built from primitive pseudo-remainders over the integers.
/// Throws std::domain_error for the zero polynomial.
int sturm_count(const Polynomial& p);

/// Sturm count plus whether the input is squarefree (the last Sturm
/// element is a constant).
struct SturmInfo {
    int distinct_real_roots;
    bool squarefree;
};
SturmInfo sturm_info(const Polynomial& p);

}  // namespace waring
