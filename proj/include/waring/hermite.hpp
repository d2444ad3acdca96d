#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/polynomial.hpp"

namespace waring {

/// Raised for systems that do not have the gap shape they claim.
struct GapSystemError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// G_i = X_i^(a_i + 1) + F_i, i = 1..n, in n variables with deg F_i <= a_i - a0.
///
/// Variable i of the system is index i-1 of every Polynomial. The leading
/// powers are pairwise coprime and strictly dominate every F_i, so rewriting
/// X_i^(a_i+1) -> -F_i reduces any polynomial to the monomials
/// {X^alpha : alpha_i <= a_i}.
class GapSystem {
   public:
    /// Throws GapSystemError on a degree violation or a variable-count mismatch.
    GapSystem(std::vector<unsigned> a, unsigned a0, std::vector<Polynomial> tails);

    /// Splits each generator into X_i^(a_i+1) + F_i. The generator must
    /// contain X_i^(a_i+1) with coefficient 1.
    static GapSystem from_generators(const std::vector<Polynomial>& generators, std::vector<unsigned> a,
                                     unsigned a0);

    std::size_t n() const noexcept { return a_.size(); }
    const std::vector<unsigned>& a() const noexcept { return a_; }
    unsigned a0() const noexcept { return a0_; }
    const Polynomial& tail(std::size_t i) const { return tails_.at(i); }
    Polynomial generator(std::size_t i) const;

   private:
    std::vector<unsigned> a_;
    unsigned a0_;
    std::vector<Polynomial> tails_;
};

/// R[X_1..X_n] / (G_1..G_n) with the monomial basis {X^alpha : alpha_i <= a_i},
/// ordered lexicographically with X_1 slowest.
///
/// Normal forms of monomials are memoized. The cache is guarded by a mutex and
/// every entry is a pure function of its key, so concurrent callers see the
/// same values a sequential run would.
class QuotientAlgebra {
   public:
    explicit QuotientAlgebra(GapSystem system);

    const GapSystem& system() const noexcept { return system_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<ExponentVector>& basis() const noexcept { return basis_; }
    std::size_t index_of(const ExponentVector& alpha) const;

    /// Coordinates of NF(X^delta) in the basis.
    std::vector<Rational> normal_form_coordinates(const ExponentVector& delta) const;

    Polynomial normal_form(const Polynomial& f) const;

    /// Column j holds the coordinates of NF(f * basis[j]).
    RationalMatrix mult_matrix(const Polynomial& f) const;

    /// Tr(m_f) without building the full matrix.
    Rational trace(const Polynomial& f) const;

    /// B(X^alpha, X^beta) = Tr(m_{X^(alpha+beta)}) over the basis.
    SymmetricMatrixQ trace_form() const;

   private:
    bool in_basis(const ExponentVector& e) const;
    Rational trace_of_monomial(const ExponentVector& gamma) const;

    GapSystem system_;
    std::vector<ExponentVector> basis_;
    std::vector<std::size_t> stride_;

    mutable std::mutex cache_mutex_;
    mutable std::map<ExponentVector, std::vector<Rational>, GrlexGreater> nf_cache_;
};

struct PointCount {
    /// n_plus - n_minus: distinct real solutions.
    int real = 0;
    /// n_plus + n_minus (rank of the trace form): distinct complex solutions.
    int complex_distinct = 0;
    Inertia inertia;
    std::size_t dim = 0;
};

/// Hermite count from the signature of the trace form. Counts distinct points;
/// multiplicities are not reported.
PointCount count_real_points(const GapSystem& system);

struct GapObstruction {
    /// B(X_1, X_1) = Tr(m_{X_1^2}); zero for every gap system with a0 >= 2.
    Rational b11;
    PointCount count;
    std::size_t bezout;
};

/// Computes both quantities of the obstruction without judging them.
/// Throws GapSystemError when a0 < 2 or some a_i < a0.
GapObstruction inspect_gap_obstruction(const GapSystem& system);

/// Confirms that a system with a0 >= 2 has fewer than prod (a_i + 1) real
/// solutions and that Tr(m_{X_1^2}) vanishes; returns true. Throws
/// GapSystemError when a0 < 2 or some a_i < a0, and std::logic_error if either
/// conclusion fails.
bool check_gap_obstruction(const GapSystem& system);

}  // namespace waring
