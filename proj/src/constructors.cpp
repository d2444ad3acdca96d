#include "waring/constructors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "waring/univariate.hpp"

namespace waring {

namespace {

// 1, 2, -1, 3, -2, 4, -3, ...
long seed_value(std::size_t k) {
    if (k == 0) return 1;
    const long m = static_cast<long>((k + 1) / 2);
    return k % 2 == 1 ? m + 1 : -m;
}

void require_canonical(const Monomial& m) {
    if (!m.is_canonical()) throw std::invalid_argument("expected exponents in non-decreasing order");
}

}  // namespace

GappedRootSet gapped_roots(unsigned a0, unsigned ai) {
    if (a0 < 1 || a0 > ai)
        throw std::invalid_argument("gapped_roots needs 1 <= a0 <= ai, got a0=" + std::to_string(a0) +
                                    ", ai=" + std::to_string(ai));
    const std::size_t d = a0 + ai;
    std::vector<long> seed;
    for (std::size_t k = 0; k + 1 < d; ++k) seed.push_back(seed_value(k));

    while (true) {
        std::vector<Rational> roots(seed.begin(), seed.end());
        const Rational top = elementary_symmetric(roots, static_cast<int>(a0));
        const Rational lower = elementary_symmetric(roots, static_cast<int>(a0) - 1);
        if (lower != 0) {
            Rational last = -top / lower;
            if (std::find(roots.begin(), roots.end(), last) == roots.end()) {
                roots.push_back(std::move(last));
                return {a0, ai, std::move(roots)};
            }
        }
        auto largest = std::max_element(seed.begin(), seed.end());
        long next = *largest + 1;
        while (std::find(seed.begin(), seed.end(), next) != seed.end()) ++next;
        *largest = next;
    }
}

std::vector<std::vector<Rational>> upper_bound_axes(const Monomial& m) {
    require_canonical(m);
    std::vector<std::vector<Rational>> axes;
    for (std::size_t i = 1; i < m.nvars(); ++i) axes.push_back(gapped_roots(m[0], m[i]).roots);
    return axes;
}

PointSet upper_bound_points(const Monomial& m) { return grid_points(upper_bound_axes(m)); }

std::vector<Rational> symmetric_sum_zero_values(unsigned count) {
    std::vector<Rational> v;
    if (count % 2 == 1) v.push_back(0);
    for (unsigned k = 1; v.size() < count; ++k) {
        v.push_back(k);
        v.push_back(-static_cast<long>(k));
    }
    return v;
}

void validate_sum_zero_values(const std::vector<Rational>& values, unsigned count) {
    if (values.size() != count)
        throw std::invalid_argument("expected " + std::to_string(count) + " values, got " +
                                    std::to_string(values.size()));
    Rational sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum += values[i];
        for (std::size_t j = 0; j < i; ++j)
            if (values[i] == values[j]) throw std::invalid_argument("values must be pairwise distinct");
    }
    if (sum != 0) throw std::invalid_argument("values must sum to zero");
}

std::vector<std::vector<Rational>> a0_eq_1_axes(const Monomial& m,
                                                const std::optional<std::vector<std::vector<Rational>>>& values) {
    require_canonical(m);
    if (m[0] != 1) throw std::invalid_argument("least exponent must be 1");
    std::vector<std::vector<Rational>> axes;
    if (values && values->size() != m.nvars() - 1)
        throw std::invalid_argument("need one value set per variable after x0");
    for (std::size_t i = 1; i < m.nvars(); ++i) {
        if (values) {
            validate_sum_zero_values((*values)[i - 1], m[i] + 1);
            axes.push_back((*values)[i - 1]);
        } else {
            axes.push_back(symmetric_sum_zero_values(m[i] + 1));
        }
    }
    return axes;
}

PointSet min_points_a0_eq_1(const Monomial& m, const std::optional<std::vector<std::vector<Rational>>>& values) {
    return grid_points(a0_eq_1_axes(m, values));
}

Decomposition squares_decomposition(unsigned n) {
    if (n < 1) throw std::invalid_argument("squares_decomposition needs n >= 1");
    const std::size_t nv = n + 1;

    // entries from {1, -1, 0} in this order, leading nonzero entry 1
    std::vector<std::vector<int>> pts;
    std::vector<int> cur(nv, 0);
    const int order[3] = {1, -1, 0};
    std::vector<int> idx(nv, 0);
    while (true) {
        for (std::size_t i = 0; i < nv; ++i) cur[i] = order[idx[i]];
        auto lead = std::find_if(cur.begin(), cur.end(), [](int v) { return v != 0; });
        if (lead != cur.end() && *lead == 1) pts.push_back(cur);
        std::size_t i = nv;
        while (i > 0 && ++idx[i - 1] == 3) idx[--i] = 0;
        if (i == 0) break;
    }
    auto weight = [](const std::vector<int>& p) { return std::count_if(p.begin(), p.end(), [](int v) { return v; }); };
    std::stable_sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return weight(a) > weight(b); });

    const Rational base = Rational(2) / Rational(factorial(2 * n + 2));
    Decomposition dec{Monomial(ExponentVector(std::vector<unsigned>(nv, 2))), {}};
    for (const auto& p : pts) {
        const auto k = static_cast<unsigned>(weight(p));
        Rational c = base * pow(Rational(-2), n + 1 - k);
        dec.terms.push_back({c, LinearForm(std::vector<Rational>(p.begin(), p.end()))});
    }
    if (!verify_decomposition(dec)) throw std::logic_error("squares decomposition failed to verify");
    return dec;
}

namespace {

RealDecomposition build_canonical(const Monomial& m, Method method, const DecomposeOptions& options) {
    auto certified = [&](SolveOutcome out) {
        if (!out.decomposition)
            throw std::logic_error("construction '" + std::string(to_string(method)) + "' did not certify");
        return RealDecomposition{std::move(*out.decomposition), method, out.diagnostic};
    };
    switch (method) {
        case Method::binary:
            return certified(solve_grid_decomposition(m, {gapped_roots(m[0], m[1]).roots}));
        case Method::a0eq1:
            return certified(solve_grid_decomposition(m, a0_eq_1_axes(m, options.a0eq1_values)));
        case Method::squares: {
            Decomposition dec = squares_decomposition(static_cast<unsigned>(m.nvars() - 1));
            SolveDiagnostic diag{0, dec.size(), dec.size(), 0, 0};
            return {std::move(dec), method, diag};
        }
        case Method::general_grid:
            return certified(solve_grid_decomposition(m, upper_bound_axes(m)));
    }
    throw std::logic_error("unknown method");
}

}  // namespace

RealDecomposition decompose_real(const Monomial& m, const DecomposeOptions& options) {
    const CanonicalMonomial canon = canonicalize(m);
    Method method = real_rank_upper(canon.monomial).method;
    if (options.method) {
        const auto bounds = applicable_bounds(canon.monomial);
        if (std::none_of(bounds.begin(), bounds.end(), [&](const RankBound& b) { return b.method == *options.method; }))
            throw std::invalid_argument("method '" + std::string(to_string(*options.method)) +
                                        "' does not apply to this monomial");
        method = *options.method;
    }
    RealDecomposition out = build_canonical(canon.monomial, method, options);

    // back to the caller's variable order
    out.decomposition.target = m;
    for (auto& term : out.decomposition.terms) {
        std::vector<Rational> coords(m.nvars());
        for (std::size_t k = 0; k < m.nvars(); ++k) coords[canon.original_index[k]] = term.form[k];
        term.form = LinearForm(std::move(coords));
    }
    return out;
}

}  // namespace waring
