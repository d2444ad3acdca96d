#include "waring/apolarity.hpp"

#include <algorithm>
#include <stdexcept>

#include "waring/matrix.hpp"

namespace waring {

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return c != 0; });
    if (lead == coords_.end()) throw std::invalid_argument("projective point with all coordinates zero");
    const Rational scale = *lead;
    if (scale != 1)
        for (auto& c : coords_) c /= scale;
}

PointSet::PointSet(std::vector<ProjectivePoint> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != points_.front().size())
            throw std::invalid_argument("points of different dimensions in one point set");
        for (std::size_t j = 0; j < i; ++j)
            if (points_[i] == points_[j]) throw std::invalid_argument("duplicate point in point set");
    }
}

PointSet grid_points(const std::vector<std::vector<Rational>>& axes) {
    std::vector<ProjectivePoint> pts;
    std::vector<std::size_t> idx(axes.size(), 0);
    for (const auto& axis : axes)
        if (axis.empty()) return PointSet{};
    bool done = false;
    while (!done) {
        std::vector<Rational> coords{Rational(1)};
        for (std::size_t i = 0; i < axes.size(); ++i) coords.push_back(axes[i][idx[i]]);
        pts.emplace_back(std::move(coords));
        done = true;
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++idx[i] < axes[i].size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
    }
    return PointSet(std::move(pts));
}

Polynomial expand(const Decomposition& dec) {
    Polynomial sum(dec.target.nvars());
    for (const auto& t : dec.terms) {
        if (t.form.size() != dec.target.nvars())
            throw std::invalid_argument("linear form size does not match the target's variable count");
        sum += linear_form_power(t.form, dec.degree()) * t.coeff;
    }
    return sum;
}

bool verify_decomposition(const Decomposition& dec) {
    for (const auto& t : dec.terms)
        if (t.form.size() != dec.target.nvars()) return false;
    return expand(dec) == dec.target.to_polynomial();
}

bool perp_membership(const Monomial& m, const Polynomial& op) {
    return apply_diff(op, m.to_polynomial()).is_zero();
}

namespace {

void check_points(const Monomial& m, const PointSet& points) {
    for (const auto& p : points)
        if (p.size() != m.nvars()) throw std::invalid_argument("point dimension does not match the monomial");
}

// Builds the decomposition from per-point coefficients, dropping zeros.
SolveOutcome collect(const Monomial& m, const PointSet& points, const std::vector<Rational>& coeffs,
                     SolveDiagnostic diag) {
    Decomposition dec{m, {}};
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (coeffs[k] == 0) {
            ++diag.pruned;
            continue;
        }
        dec.terms.push_back({coeffs[k], points[k].form()});
    }
    return {std::move(dec), diag};
}

}  // namespace

SolveOutcome solve_decomposition(const Monomial& m, const PointSet& points) {
    check_points(m, points);
    const unsigned d = m.degree();
    const auto rows = exponents_of_degree(m.nvars(), d);

    // Row beta divided by multinomial(d; beta): entries prod_i p_i^beta_i.
    RationalMatrix a(rows.size(), points.size());
    std::vector<Rational> rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& beta = rows[r];
        for (std::size_t c = 0; c < points.size(); ++c) {
            Rational v = 1;
            for (std::size_t i = 0; i < beta.size() && v != 0; ++i)
                if (beta[i] > 0) v *= pow(points[c][i], beta[i]);
            a(r, c) = v;
        }
        if (beta == m.exponents()) rhs[r] = Rational(1) / Rational(multinomial(beta.values()));
    }

    const LinearSolution sol = solve_exact(a, rhs);
    SolveDiagnostic diag{rows.size(), points.size(), sol.rank, sol.null_dimension, 0};
    if (!sol.consistent) return {std::nullopt, diag};
    return collect(m, points, sol.x, diag);
}

SolveOutcome solve_grid_decomposition(const Monomial& m, const std::vector<std::vector<Rational>>& axes) {
    if (axes.size() + 1 != m.nvars()) throw std::invalid_argument("grid needs one axis per variable after x0");
    const PointSet points = grid_points(axes);

    // Per axis: sum_j w_j p_j^k = [k == a_i] for k < |axis|.
    std::vector<std::vector<Rational>> weights;
    std::size_t rank_total = 1;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const auto& axis = axes[i];
        const unsigned target = m[i + 1];
        SolveDiagnostic fail{0, points.size(), 0, 0, 0};
        if (target >= axis.size()) return {std::nullopt, fail};
        RationalMatrix v(axis.size(), axis.size());
        std::vector<Rational> e(axis.size());
        for (std::size_t k = 0; k < axis.size(); ++k) {
            for (std::size_t j = 0; j < axis.size(); ++j) v(k, j) = pow(axis[j], static_cast<unsigned>(k));
            e[k] = k == target ? 1 : 0;
        }
        LinearSolution w = solve_exact(v, e);
        if (!w.consistent || w.null_dimension != 0) return {std::nullopt, fail};
        weights.push_back(std::move(w.x));
        rank_total *= axis.size();
    }

    const Rational scale = Rational(1) / Rational(multinomial(m.exponents().values()));
    std::vector<Rational> coeffs;
    coeffs.reserve(points.size());
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t k = 0; k < points.size(); ++k) {
        Rational c = scale;
        for (std::size_t i = 0; i < axes.size(); ++i) c *= weights[i][idx[i]];
        coeffs.push_back(c);
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++idx[i] < axes[i].size()) break;
            idx[i] = 0;
        }
    }

    SolveDiagnostic diag{exponents_of_degree(m.nvars(), m.degree()).size(), points.size(), rank_total, 0, 0};
    SolveOutcome out = collect(m, points, coeffs, diag);
    if (!verify_decomposition(*out.decomposition)) return {std::nullopt, diag};
    return out;
}

}  // namespace waring
