#include "waring/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace waring {

ExponentVector::ExponentVector(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

ExponentVector::ExponentVector(std::initializer_list<unsigned> exponents)
    : ExponentVector(std::vector<unsigned>(exponents)) {}

ExponentVector ExponentVector::zero(std::size_t nvars) { return ExponentVector(std::vector<unsigned>(nvars, 0)); }

ExponentVector ExponentVector::unit(std::size_t nvars, std::size_t i, unsigned k) {
    std::vector<unsigned> e(nvars, 0);
    e.at(i) = k;
    return ExponentVector(std::move(e));
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent vectors of different length");
    std::vector<unsigned> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
    return ExponentVector(std::move(e));
}

namespace {

void compositions(std::size_t i, unsigned remaining, std::vector<unsigned>& cur, std::vector<ExponentVector>& out) {
    if (i + 1 == cur.size()) {
        cur[i] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
        cur[i] = k;
        compositions(i + 1, remaining - k, cur, out);
    }
}

}  // namespace

std::vector<ExponentVector> exponents_of_degree(std::size_t nvars, unsigned d) {
    std::vector<ExponentVector> out;
    if (nvars == 0) return out;
    std::vector<unsigned> cur(nvars, 0);
    compositions(0, d, cur, out);
    return out;
}

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    auto av = a.values();
    auto bv = b.values();
    return std::lexicographical_compare(bv.begin(), bv.end(), av.begin(), av.end());
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(ExponentVector::zero(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    return term(ExponentVector::unit(nvars, i));
}

Polynomial Polynomial::term(const ExponentVector& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree() const { return leading().first.degree(); }

const Polynomial::Terms::value_type& Polynomial::leading() const {
    if (terms_.empty()) throw std::domain_error("the zero polynomial has no degree");
    return *terms_.begin();
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != nvars_)
        throw std::invalid_argument("term has " + std::to_string(e.size()) + " variables, polynomial has " +
                                    std::to_string(nvars_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_same_ring(const Polynomial& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(nvars_) + " vs " +
                                    std::to_string(rhs.nvars_));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    check_same_ring(rhs);
    Polynomial product(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) product.add_term(e1 + e2, c1 * c2);
    *this = std::move(product);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator-(const Polynomial& f) { return f * Rational(-1); }

Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }

Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    Polynomial p = f;
    p *= g;
    return p;
}

Polynomial operator*(Polynomial f, const Rational& s) { return f *= s; }

Polynomial operator*(const Rational& s, Polynomial f) { return f *= s; }

Polynomial pow(const Polynomial& f, unsigned k) {
    Polynomial result = Polynomial::constant(f.nvars(), 1);
    Polynomial base = f;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

namespace {

// e! / (e-k)!
Integer falling_factorial(unsigned e, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= e - i;
    return r;
}

}  // namespace

Polynomial derivative(const Polynomial& f, std::size_t var, unsigned times) {
    if (var >= f.nvars()) throw std::out_of_range("derivative variable out of range");
    return apply_diff(Polynomial::term(ExponentVector::unit(f.nvars(), var, times)), f);
}

Polynomial apply_diff(const Polynomial& op, const Polynomial& f) {
    if (op.nvars() != f.nvars())
        throw std::invalid_argument("variable-count mismatch between operator and form");
    const std::size_t n = f.nvars();
    Polynomial result(n);
    std::vector<unsigned> out(n);
    for (const auto& [beta, c] : op.terms()) {
        for (const auto& [alpha, k] : f.terms()) {
            if (!beta.divides(alpha)) continue;
            Rational coeff = c * k;
            for (std::size_t i = 0; i < n; ++i) {
                out[i] = alpha[i] - beta[i];
                if (beta[i] > 0) coeff *= Rational(falling_factorial(alpha[i], beta[i]));
            }
            result.add_term(ExponentVector(out), coeff);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------

LinearForm::LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; }))
        throw std::invalid_argument("linear form with all coefficients zero");
}

LinearForm::LinearForm(std::initializer_list<Rational> coeffs) : LinearForm(std::vector<Rational>(coeffs)) {}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(size());
    for (std::size_t i = 0; i < size(); ++i) p.add_term(ExponentVector::unit(size(), i), coeffs_[i]);
    return p;
}

namespace {

struct PowerExpansion {
    const std::vector<std::vector<Rational>>& powers;  // powers[i][k] = p_i^k
    const std::vector<std::vector<Integer>>& binom;
    Polynomial& out;
    std::vector<unsigned> exps;

    // Distributes `remaining` degree over variables i..n.
    void expand(std::size_t i, unsigned remaining, const Rational& acc) {
        const std::size_t last = exps.size() - 1;
        if (i == last) {
            exps[i] = remaining;
            if (remaining > 0 && powers[i][1] == 0) return;
            out.add_term(ExponentVector(exps), acc * powers[i][remaining]);
            return;
        }
        const unsigned top = powers[i][1] == 0 ? 0 : remaining;
        for (unsigned k = 0; k <= top; ++k) {
            exps[i] = k;
            expand(i + 1, remaining - k, acc * powers[i][k] * binom[remaining][k]);
        }
    }
};

}  // namespace

Polynomial linear_form_power(const LinearForm& form, unsigned d) {
    const std::size_t n = form.size();
    if (d == 0) return Polynomial::constant(n, 1);
    std::vector<std::vector<Rational>> powers(n, std::vector<Rational>(d + 1));
    for (std::size_t i = 0; i < n; ++i) {
        powers[i][0] = 1;
        for (unsigned k = 1; k <= d; ++k) powers[i][k] = powers[i][k - 1] * form[i];
    }
    std::vector<std::vector<Integer>> binom(d + 1);
    for (unsigned m = 0; m <= d; ++m) {
        binom[m].resize(m + 1);
        binom[m][0] = binom[m][m] = 1;
        for (unsigned k = 1; k < m; ++k) binom[m][k] = binom[m - 1][k - 1] + binom[m - 1][k];
    }
    Polynomial out(n);
    PowerExpansion{powers, binom, out, std::vector<unsigned>(n, 0)}.expand(0, d, Rational(1));
    return out;
}

// ---------------------------------------------------------------------------

Monomial::Monomial(ExponentVector exps) : exps_(std::move(exps)) {
    if (exps_.size() < 2) throw std::invalid_argument("a monomial needs at least two variables");
    for (unsigned a : exps_.values())
        if (a == 0) throw std::invalid_argument("every variable of a monomial must have exponent >= 1");
}

unsigned Monomial::least_exponent() const {
    auto v = exps_.values();
    return *std::min_element(v.begin(), v.end());
}

bool Monomial::is_canonical() const {
    auto v = exps_.values();
    return std::is_sorted(v.begin(), v.end());
}

CanonicalMonomial canonicalize(const Monomial& m) {
    std::vector<std::size_t> order(m.nvars());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] < m[b]; });
    std::vector<unsigned> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order) sorted.push_back(m[i]);
    return {Monomial(ExponentVector(std::move(sorted))), std::move(order)};
}

}  // namespace waring
