// Acceptance checks. One PASS/FAIL line per criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "support.hpp"
#include "waring/constructors.hpp"
#include "waring/hermite.hpp"
#include "waring/univariate.hpp"

using namespace waring;
using waring::testing::Gen;
using waring::testing::M;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Monomial> monomials_up_to(std::size_t max_vars, unsigned max_exp) {
    std::vector<Monomial> out;
    for (std::size_t nv = 2; nv <= max_vars; ++nv) {
        std::vector<unsigned> e(nv, 1);
        while (true) {
            out.emplace_back(ExponentVector(e));
            std::size_t i = 0;
            while (i < nv && e[i] == max_exp) e[i++] = 1;
            if (i == nv) break;
            ++e[i];
        }
    }
    return out;
}

using TermSet = std::multiset<std::pair<Rational, std::vector<Rational>>>;

TermSet terms_of(const Decomposition& d, const Rational& scale) {
    TermSet out;
    for (const auto& t : d.terms) {
        const auto c = t.form.coefficients();
        out.emplace(scale * t.coeff, std::vector<Rational>(c.begin(), c.end()));
    }
    return out;
}

Outcome squares_n1() {
    const auto t0 = Clock::now();
    const Decomposition d = squares_decomposition(1);
    // 12 x0^2 x1^2 = (x0+x1)^4 + (x0-x1)^4 - 2 x0^4 - 2 x1^4
    const TermSet expected{{1, {1, 1}}, {1, {1, -1}}, {-2, {1, 0}}, {-2, {0, 1}}};
    Polynomial lhs = M({2, 2}).to_polynomial() * Rational(12);
    Polynomial rhs(2);
    for (const auto& [c, f] : expected) rhs += linear_form_power(LinearForm(f), 4) * c;
    const bool ok = terms_of(d, 12) == expected && lhs == rhs && verify_decomposition(d);
    const double s = seconds_since(t0);
    return {ok && s < 1.0, "4 terms, " + std::to_string(s) + " s"};
}

Outcome squares_n2() {
    const auto t0 = Clock::now();
    const Decomposition d = squares_decomposition(2);
    TermSet expected;
    for (int a : {1, -1})
        for (int b : {1, -1}) expected.emplace(1, std::vector<Rational>{1, a, b});
    for (int s : {1, -1}) {
        expected.emplace(-2, std::vector<Rational>{1, s, 0});
        expected.emplace(-2, std::vector<Rational>{1, 0, s});
        expected.emplace(-2, std::vector<Rational>{0, 1, s});
    }
    expected.emplace(4, std::vector<Rational>{1, 0, 0});
    expected.emplace(4, std::vector<Rational>{0, 1, 0});
    expected.emplace(4, std::vector<Rational>{0, 0, 1});
    Polynomial rhs(3);
    for (const auto& [c, f] : expected) rhs += linear_form_power(LinearForm(f), 6) * c;
    const bool ok = terms_of(d, 360) == expected && rhs == M({2, 2, 2}).to_polynomial() * Rational(360) &&
                    verify_decomposition(d);
    const double s = seconds_since(t0);
    return {ok && s < 1.0, std::to_string(d.size()) + " terms, " + std::to_string(s) + " s"};
}

Outcome rank_formulas() {
    const Monomial m = M({2, 2, 2});
    const bool ok = complex_rank(m) == 9 && real_rank_upper(m).size == 13 && real_rank_lower(m) == 11 &&
                    !real_equals_complex(m);
    return {ok, "rk_C=" + std::to_string(complex_rank(m)) + ", rk_R in [" + std::to_string(real_rank_lower(m)) +
                    ", " + std::to_string(real_rank_upper(m).size) + "]"};
}

Outcome binary_optimum() {
    int checked = 0, bad = 0;
    for (unsigned a0 = 1; a0 <= 6; ++a0)
        for (unsigned a1 = a0; a1 <= 6; ++a1) {
            const auto rd = decompose_real(M({a0, a1}));
            ++checked;
            if (!verify_decomposition(rd.decomposition) || rd.decomposition.size() != a0 + a1) ++bad;
        }
    return {bad == 0, std::to_string(checked) + " monomials, " + std::to_string(bad) + " failures"};
}

Outcome a0_equals_1() {
    int checked = 0, bad = 0;
    for (const auto& m : monomials_up_to(4, 4)) {
        if (m.least_exponent() != 1) continue;
        const auto rd = decompose_real(m);
        ++checked;
        if (rd.decomposition.size() != complex_rank(m) || !verify_decomposition(rd.decomposition)) ++bad;
    }
    return {bad == 0, std::to_string(checked) + " monomials, " + std::to_string(bad) + " failures"};
}

Outcome general_sweep() {
    const auto t0 = Clock::now();
    int checked = 0, bad = 0;
    for (const auto& m : monomials_up_to(4, 4)) {
        const auto rd = decompose_real(m);
        ++checked;
        const std::size_t size = rd.decomposition.size();
        if (!verify_decomposition(rd.decomposition) || size != real_rank_upper(m).size || size < complex_rank(m))
            ++bad;
    }
    const double s = seconds_since(t0);
    return {bad == 0 && s < 300.0,
            std::to_string(checked) + " monomials, " + std::to_string(bad) + " failures, " + std::to_string(s) + " s"};
}

Polynomial random_tail(Gen& gen, std::size_t n, unsigned max_degree) {
    Polynomial f(n);
    for (unsigned d = 0; d <= max_degree; ++d)
        for (const auto& e : exponents_of_degree(n, d))
            if (gen.integer(0, 2) != 0) f.add_term(e, gen.rational(5, 4));  // stays inside [-5, 5]
    return f;
}

Outcome gap_systems() {
    Gen gen(20240601);
    int bad = 0;
    std::size_t max_dim = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        const unsigned a0 = static_cast<unsigned>(gen.integer(2, 3));
        std::vector<unsigned> a(n);
        for (auto& x : a) x = static_cast<unsigned>(gen.integer(a0, 3));
        std::sort(a.begin(), a.end());
        std::vector<Polynomial> tails;
        for (std::size_t i = 0; i < n; ++i) tails.push_back(random_tail(gen, n, a[i] - a0));
        const GapSystem sys(a, a0, tails);
        try {
            const auto g = inspect_gap_obstruction(sys);
            max_dim = std::max(max_dim, g.count.dim);
            if (g.b11 != 0 || g.count.real < 0 || static_cast<std::size_t>(g.count.real) >= g.bezout) ++bad;
            check_gap_obstruction(sys);
        } catch (const std::exception&) {
            ++bad;
        }
    }
    return {bad == 0, "100 systems (max dim " + std::to_string(max_dim) + "), " + std::to_string(bad) + " failures"};
}

Outcome hermite_vs_sturm() {
    Gen gen(777);
    int tested = 0, bad = 0;
    while (tested < 200) {
        const unsigned deg = static_cast<unsigned>(gen.integer(1, 8));
        std::vector<Rational> dense(deg + 1);
        dense[deg] = 1;
        for (unsigned k = 0; k < deg; ++k) dense[k] = gen.rational(6, 3);
        const Polynomial u = from_dense(dense);
        const auto info = sturm_info(u);
        if (!info.squarefree) continue;
        ++tested;
        const auto c = count_real_points(GapSystem::from_generators({u}, {deg - 1}, 0));
        if (c.real != info.distinct_real_roots || c.complex_distinct != static_cast<int>(deg)) ++bad;
    }
    return {bad == 0, "200 squarefree polynomials, " + std::to_string(bad) + " failures"};
}

Outcome trace_form_witness() {
    const std::vector<Monomial> ms{M({1, 1}),       M({1, 2}),       M({1, 5}),    M({1, 1, 1}),
                                   M({1, 1, 2}),    M({1, 2, 3}),    M({1, 3, 4}), M({1, 1, 1, 1}),
                                   M({1, 1, 2, 2}), M({1, 2, 2, 3})};
    int bad = 0;
    for (const auto& m : ms) {
        const auto axes = a0_eq_1_axes(m);
        const std::size_t n = axes.size();
        std::vector<unsigned> a;
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < n; ++i) {
            a.push_back(static_cast<unsigned>(axes[i].size()) - 1);
            const Polynomial u = polynomial_from_roots(axes[i]);
            Polynomial g(n);
            for (const auto& [e, c] : u.terms())
                g.add_term(ExponentVector::unit(n, i, e[0]), c);
            gens.push_back(g);
        }
        const auto c = count_real_points(GapSystem::from_generators(gens, a, 1));
        if (c.inertia.positive != static_cast<int>(c.dim) || c.dim != min_points_a0_eq_1(m).size()) ++bad;
    }
    return {bad == 0, std::to_string(ms.size()) + " grids, " + std::to_string(bad) + " failures"};
}

Outcome gapped_root_checks() {
    int bad_sets = 0, sets = 0;
    for (unsigned a0 = 1; a0 <= 5; ++a0)
        for (unsigned ai = a0; ai <= 5; ++ai) {
            const auto g = gapped_roots(a0, ai);
            ++sets;
            if (elementary_symmetric(g.roots, static_cast<int>(a0)) != 0 ||
                sturm_count(polynomial_from_roots(g.roots)) != static_cast<int>(a0 + ai))
                ++bad_sets;
        }
    Gen gen(4242);
    int bad_gaps = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned deg = static_cast<unsigned>(gen.integer(3, 8));
        std::vector<Rational> dense(deg + 1);
        dense[deg] = 1;
        for (unsigned k = 0; k < deg; ++k) dense[k] = gen.rational(9, 4);
        const unsigned k = static_cast<unsigned>(gen.integer(1, deg - 2));
        dense[k] = dense[k + 1] = 0;
        if (sturm_count(from_dense(dense)) >= static_cast<int>(deg)) ++bad_gaps;
    }
    return {bad_sets == 0 && bad_gaps == 0, std::to_string(sets) + " root sets (" + std::to_string(bad_sets) +
                                                " failures), 100 gapped polynomials (" + std::to_string(bad_gaps) +
                                                " failures)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"all-squares identity, n=1", squares_n1},
        {"all-squares identity, n=2", squares_n2},
        {"rank formulas for x0^2*x1^2*x2^2", rank_formulas},
        {"binary optimum a0+a1", binary_optimum},
        {"a0=1 equality with the complex rank", a0_equals_1},
        {"general bound sweep", general_sweep},
        {"gap systems: zero diagonal and too few real points", gap_systems},
        {"Hermite count vs Sturm", hermite_vs_sturm},
        {"positive definite trace forms of a0=1 grids", trace_form_witness},
        {"gapped root sets and consecutive zero coefficients", gapped_root_checks},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failures;
        std::printf("[%s] %2zu. %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
