#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Multi-exponent (e_0, ..., e_n) of a monomial in n+1 variables.
class ExponentVector {
   public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<unsigned> exponents);
    ExponentVector(std::initializer_list<unsigned> exponents);

    static ExponentVector zero(std::size_t nvars);
    /// k-th power of variable i.
    static ExponentVector unit(std::size_t nvars, std::size_t i, unsigned k = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept { return degree_; }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    std::span<const unsigned> values() const noexcept { return exps_; }

    /// Componentwise <=.
    bool divides(const ExponentVector& other) const;

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.exps_ == b.exps_; }

   private:
    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

/// All exponent vectors in `nvars` variables of total degree d, in
/// decreasing lexicographic order (x0^d first).
std::vector<ExponentVector> exponents_of_degree(std::size_t nvars, unsigned d);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically with x0 > x1 > ... > xn.
struct GrlexGreater {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The same type represents forms in x0..xn and differential operators in the
/// dual variables X0..Xn; which ring is meant depends on how it is used.
/// Zero coefficients are never stored, so the zero polynomial has no terms.
class Polynomial {
   public:
    using Terms = std::map<ExponentVector, Rational, GrlexGreater>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial term(const ExponentVector& e, const Rational& c = 1);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }

    Rational coefficient(const ExponentVector& e) const;
    /// Total degree. Throws std::domain_error for the zero polynomial.
    unsigned degree() const;
    /// Leading term in grlex order. Throws std::domain_error for zero.
    const Terms::value_type& leading() const;

    /// Accumulates c*x^e in place.
    void add_term(const ExponentVector& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

   private:
    void check_same_ring(const Polynomial& rhs) const;

    std::size_t nvars_;
    Terms terms_;
};

Polynomial operator-(const Polynomial& f);
Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(Polynomial f, const Rational& s);
Polynomial operator*(const Rational& s, Polynomial f);

Polynomial pow(const Polynomial& f, unsigned k);

/// Partial derivative with respect to variable `var`, taken `times` times.
Polynomial derivative(const Polynomial& f, std::size_t var, unsigned times = 1);

/// Action of the dual ring: each X^b in `op` acts on f as the iterated partial
/// derivative d^|b| / dx^b. No factorial rescaling.
Polynomial apply_diff(const Polynomial& op, const Polynomial& f);

/// p_0 x_0 + ... + p_n x_n with not all p_i zero.
class LinearForm {
   public:
    explicit LinearForm(std::vector<Rational> coeffs);
    LinearForm(std::initializer_list<Rational> coeffs);

    std::size_t size() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    Polynomial to_polynomial() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

   private:
    std::vector<Rational> coeffs_;
};

/// L^d expanded by the multinomial theorem.
Polynomial linear_form_power(const LinearForm& form, unsigned d);

/// x0^a0 * ... * xn^an with at least two variables and every a_i >= 1.
class Monomial {
   public:
    explicit Monomial(ExponentVector exps);
    Monomial(std::initializer_list<unsigned> exps) : Monomial(ExponentVector(exps)) {}

    const ExponentVector& exponents() const noexcept { return exps_; }
    std::size_t nvars() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept { return exps_.degree(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned least_exponent() const;
    bool is_canonical() const;

    Polynomial to_polynomial() const { return Polynomial::term(exps_); }

    friend bool operator==(const Monomial&, const Monomial&) = default;

   private:
    ExponentVector exps_;
};

/// A monomial with its exponents sorted non-decreasingly, plus the map back to
/// the caller's variable order: canonical variable k is original variable
/// `original_index[k]`.
struct CanonicalMonomial {
    Monomial monomial;
    std::vector<std::size_t> original_index;
};

CanonicalMonomial canonicalize(const Monomial& m);

}  // namespace waring
