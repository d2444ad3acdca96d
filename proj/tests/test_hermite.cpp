#include <doctest.h>

#include "support.hpp"
#include "waring/constructors.hpp"
#include "waring/hermite.hpp"
#include "waring/univariate.hpp"

using namespace waring;
using waring::testing::Gen;

namespace {

// Generators are written over x0..x(n-1); x0 plays X1.
GapSystem gap(std::initializer_list<const char*> gens, std::vector<unsigned> a, unsigned a0) {
    std::vector<Polynomial> g;
    for (const char* s : gens) g.push_back(testing::P(s, a.size()));
    return GapSystem::from_generators(g, std::move(a), a0);
}

Polynomial random_tail(Gen& gen, std::size_t n, int max_degree) {
    Polynomial f(n);
    if (max_degree < 0) return f;
    for (int t = 0; t < 4; ++t) {
        std::vector<unsigned> e(n);
        unsigned budget = static_cast<unsigned>(gen.integer(0, max_degree));
        for (auto& x : e) {
            x = static_cast<unsigned>(gen.integer(0, budget));
            budget -= x;
        }
        f.add_term(ExponentVector(std::move(e)), gen.integer(-5, 5));
    }
    return f;
}

}  // namespace

TEST_CASE("normal forms") {
    const QuotientAlgebra cube(gap({"x0^3 + 1"}, {2}, 0));
    CHECK(cube.dim() == 3);
    CHECK(cube.normal_form(testing::P("x0^3", 1)) == testing::P("-1", 1));
    CHECK(cube.normal_form(testing::P("x0^4", 1)) == testing::P("-x0", 1));

    const QuotientAlgebra t3(gap({"x0^3 - x0"}, {2}, 0));
    CHECK(t3.normal_form(testing::P("x0^5", 1)) == testing::P("x0", 1));
    CHECK(t3.normal_form(testing::P("x0^2 + 7", 1)) == testing::P("x0^2 + 7", 1));
}

TEST_CASE("normal forms agree with univariate division") {
    Gen gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned a = static_cast<unsigned>(gen.integer(1, 5));
        Polynomial g = Polynomial::term(ExponentVector{a + 1});
        g += random_tail(gen, 1, static_cast<int>(a));
        const QuotientAlgebra alg(GapSystem::from_generators({g}, {a}, 0));
        const Polynomial f = gen.polynomial(1, 12, 5);
        if (f.is_zero()) continue;
        // remainder by long division on dense coefficients
        auto r = dense_coefficients(f);
        const auto gd = dense_coefficients(g);
        const std::size_t m = gd.size() - 1;
        for (std::size_t k = r.size(); k-- > m;) {
            const Rational q = r[k];
            for (std::size_t j = 0; j <= m; ++j) r[k - m + j] -= q * gd[j];
        }
        r.resize(std::min(r.size(), m));
        CHECK(alg.normal_form(f) == from_dense(r));
    }
}

TEST_CASE("multiplication matrices") {
    const QuotientAlgebra alg(gap({"x0^2 - 1"}, {1}, 0));
    CHECK(alg.mult_matrix(testing::P("1", 1)) == RationalMatrix::identity(2));
    RationalMatrix swap(2, 2);
    swap(0, 1) = swap(1, 0) = 1;
    CHECK(alg.mult_matrix(testing::P("x0", 1)) == swap);
}

TEST_CASE("trace forms") {
    RationalMatrix two(2, 2);
    two(0, 0) = two(1, 1) = 2;
    CHECK(QuotientAlgebra(gap({"x0^2 - 1"}, {1}, 0)).trace_form().matrix() == two);
    two(1, 1) = -2;
    CHECK(QuotientAlgebra(gap({"x0^2 + 1"}, {1}, 0)).trace_form().matrix() == two);
    CHECK(signature(QuotientAlgebra(gap({"x0^3 - x0"}, {2}, 0)).trace_form()) == Inertia{3, 0, 0});
}

TEST_CASE("real point counts") {
    auto c = count_real_points(gap({"x0^2 + 1"}, {1}, 0));
    CHECK(c.real == 0);
    CHECK(c.complex_distinct == 2);
    c = count_real_points(gap({"x0^3 - x0"}, {2}, 0));
    CHECK(c.real == 3);
    CHECK(c.complex_distinct == 3);
    c = count_real_points(gap({"x0^3 + 1", "x1^3 + 2"}, {2, 2}, 2));
    CHECK(c.real == 1);
    CHECK(c.complex_distinct == 9);
    CHECK(c.dim == 9);
    // a double root: the rank sees two distinct points
    c = count_real_points(gap({"x0^3 - x0^2"}, {2}, 0));
    CHECK(c.real == 2);
    CHECK(c.complex_distinct == 2);
    CHECK(c.inertia.zero == 1);
}

TEST_CASE("gap obstruction") {
    const GapSystem s1 = gap({"x0^3 + 1", "x1^3 + 1"}, {2, 2}, 2);
    CHECK(check_gap_obstruction(s1));
    const auto g1 = inspect_gap_obstruction(s1);
    CHECK(g1.b11 == 0);
    CHECK(g1.count.real == 1);
    CHECK(g1.bezout == 9);

    const GapSystem s2 = gap({"x0^4 + x0", "x1^4 + 1"}, {3, 3}, 2);
    CHECK(check_gap_obstruction(s2));
    CHECK(inspect_gap_obstruction(s2).count.real == 0);

    CHECK_THROWS_AS(gap({"x0^3 - x0"}, {2}, 2), GapSystemError);
    CHECK_THROWS_AS(inspect_gap_obstruction(gap({"x0^2 + 1"}, {1}, 1)), GapSystemError);
    CHECK_THROWS_AS(inspect_gap_obstruction(gap({"x0^3 + 1", "x1^2"}, {2, 1}, 1)), GapSystemError);
    CHECK_THROWS_AS(gap({"2*x0^3 + 1"}, {2}, 0), GapSystemError);
    CHECK_THROWS_AS(GapSystem({2}, 0, {testing::P("x0", 2)}), GapSystemError);
}

TEST_CASE("multiplication matrices form a homomorphism and normal forms are idempotent") {
    Gen gen(32);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
        std::vector<unsigned> a(n);
        for (auto& x : a) x = static_cast<unsigned>(gen.integer(1, 3));
        std::vector<Polynomial> tails;
        for (std::size_t i = 0; i < n; ++i) tails.push_back(random_tail(gen, n, static_cast<int>(a[i])));
        const QuotientAlgebra alg(GapSystem(a, 0, tails));
        const Polynomial f = gen.polynomial(n, 3, 3);
        const Polynomial g = gen.polynomial(n, 3, 3);
        CHECK(alg.mult_matrix(f * g) == alg.mult_matrix(f) * alg.mult_matrix(g));
        const Polynomial nf = alg.normal_form(f * g);
        CHECK(alg.normal_form(nf) == nf);
        for (const auto& [e, c] : nf.terms())
            for (std::size_t i = 0; i < n; ++i) CHECK(e[i] <= a[i]);
        CHECK(alg.trace(f * g) == (alg.mult_matrix(f) * alg.mult_matrix(g)).trace());
    }
}

TEST_CASE("Hermite count agrees with Sturm on univariate systems") {
    Gen gen(33);
    int tested = 0;
    while (tested < 60) {
        const unsigned deg = static_cast<unsigned>(gen.integer(1, 6));
        Polynomial g = Polynomial::term(ExponentVector{deg});
        for (unsigned k = 0; k < deg; ++k) g.add_term(ExponentVector{k}, gen.integer(-4, 4));
        const auto info = sturm_info(g);
        const auto c = count_real_points(GapSystem::from_generators({g}, {deg - 1}, 0));
        CHECK(c.real == info.distinct_real_roots);
        if (info.squarefree) CHECK(c.complex_distinct == static_cast<int>(deg));
        ++tested;
    }
}

TEST_CASE("product systems multiply real counts") {
    Gen gen(34);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        std::vector<unsigned> a(n);
        std::vector<Polynomial> gens;
        int expected = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned deg = static_cast<unsigned>(gen.integer(1, n == 3 ? 3 : 4));
            a[i] = deg - 1;
            std::vector<Rational> dense(deg + 1);
            dense[deg] = 1;
            for (unsigned k = 0; k < deg; ++k) dense[k] = gen.integer(-3, 3);
            const Polynomial u = from_dense(dense);
            expected *= sturm_count(u);
            // embed the univariate g_i in variable i
            Polynomial p(n);
            for (const auto& [e, c] : u.terms()) p.add_term(ExponentVector::unit(n, i, e[0]), c);
            gens.push_back(p);
        }
        CHECK(count_real_points(GapSystem::from_generators(gens, a, 0)).real == expected);
    }
}

TEST_CASE("grid systems from a0 = 1 point sets have positive definite trace forms") {
    for (const auto& m : {testing::M({1, 1}), testing::M({1, 2}), testing::M({1, 1, 2}), testing::M({1, 2, 3})}) {
        const auto axes = a0_eq_1_axes(m);
        std::vector<unsigned> a;
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            a.push_back(static_cast<unsigned>(axes[i].size()) - 1);
            const Polynomial u = polynomial_from_roots(axes[i]);
            Polynomial p(axes.size());
            for (const auto& [e, c] : u.terms()) p.add_term(ExponentVector::unit(axes.size(), i, e[0]), c);
            gens.push_back(p);
        }
        const auto c = count_real_points(GapSystem::from_generators(gens, a, 1));
        CHECK(c.inertia.positive == static_cast<int>(c.dim));
        CHECK(c.real == static_cast<int>(complex_rank(m)));
    }
}
