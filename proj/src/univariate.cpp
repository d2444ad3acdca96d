#include "waring/univariate.hpp"

#include <stdexcept>
#include <string>

namespace waring {

Rational elementary_symmetric(std::span<const Rational> values, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > values.size())
        throw std::out_of_range("elementary_symmetric: k=" + std::to_string(k) + " outside [0, " +
                                std::to_string(values.size()) + "]");
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1);
    e[0] = 1;
    for (const Rational& v : values)
        for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += e[j - 1] * v;
    return e.back();
}

Polynomial polynomial_from_roots(std::span<const Rational> roots) {
    // coefficient of t^(d-k) is (-1)^k e_k
    std::vector<Rational> coeffs(roots.size() + 1);
    coeffs[0] = 1;  // highest first while building
    for (const Rational& r : roots)
        for (std::size_t j = coeffs.size() - 1; j >= 1; --j) coeffs[j] -= coeffs[j - 1] * r;
    std::vector<Rational> low_first(coeffs.rbegin(), coeffs.rend());
    return from_dense(low_first);
}

std::vector<Rational> dense_coefficients(const Polynomial& p) {
    if (p.nvars() != 1) throw std::invalid_argument("expected a polynomial in one variable");
    if (p.is_zero()) return {};
    std::vector<Rational> c(p.degree() + 1);
    for (const auto& [e, v] : p.terms()) c[e[0]] = v;
    return c;
}

Polynomial from_dense(std::span<const Rational> coeffs) {
    Polynomial p(1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(ExponentVector{static_cast<unsigned>(k)}, coeffs[k]);
    return p;
}

namespace {

using IntPoly = std::vector<Integer>;  // lowest degree first, no trailing zeros

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides out the positive content.
void make_primitive(IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) g = gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
}

IntPoly to_integer_primitive(const std::vector<Rational>& c) {
    Integer l = 1;
    for (const auto& v : c) l = lcm(l, Integer(v.get_den()));
    IntPoly p;
    p.reserve(c.size());
    for (const auto& v : c) p.push_back(Integer(v.get_num() * (l / v.get_den())));
    trim(p);
    make_primitive(p);
    return p;
}

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
    trim(d);
    return d;
}

// Returns -rem(a, b) up to a positive factor.
IntPoly negated_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t nb = b.size() - 1;
    const Integer& lb = b.back();
    int steps = 0;
    while (!a.empty() && a.size() - 1 >= nb) {
        const std::size_t shift = a.size() - 1 - nb;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t k = 0; k <= nb; ++k) a[k + shift] -= la * b[k];
        trim(a);
        ++steps;
    }
    // a = lb^steps * (true remainder)
    const bool flip = !(sgn(lb) < 0 && (steps % 2 == 1));
    if (flip)
        for (auto& c : a) c = -c;
    make_primitive(a);
    return a;
}

int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

SturmInfo sturm_info(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("sturm_count of the zero polynomial");
    IntPoly s0 = to_integer_primitive(dense_coefficients(p));
    std::vector<IntPoly> seq{s0};
    IntPoly s1 = derivative(s0);
    while (!s1.empty()) {
        seq.push_back(s1);
        IntPoly next = negated_remainder(seq[seq.size() - 2], seq.back());
        s1 = std::move(next);
    }

    std::vector<int> at_pos, at_neg;
    for (const auto& s : seq) {
        int lead = sgn(s.back());
        at_pos.push_back(lead);
        at_neg.push_back((s.size() - 1) % 2 == 0 ? lead : -lead);
    }
    return {variations(at_neg) - variations(at_pos), seq.back().size() == 1};
}

int sturm_count(const Polynomial& p) { return sturm_info(p).distinct_real_roots; }

}  // namespace waring
