#include "waring/hermite.hpp"

#include <string>

namespace waring {

GapSystem::GapSystem(std::vector<unsigned> a, unsigned a0, std::vector<Polynomial> tails)
    : a_(std::move(a)), a0_(a0), tails_(std::move(tails)) {
    if (a_.empty()) throw GapSystemError("gap system needs at least one equation");
    if (tails_.size() != a_.size()) throw GapSystemError("one tail polynomial per equation expected");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        const Polynomial& f = tails_[i];
        if (f.nvars() != a_.size())
            throw GapSystemError("F_" + std::to_string(i + 1) + " has " + std::to_string(f.nvars()) +
                                 " variables, system has " + std::to_string(a_.size()));
        if (f.is_zero()) continue;
        const long bound = static_cast<long>(a_[i]) - static_cast<long>(a0_);
        if (static_cast<long>(f.degree()) > bound)
            throw GapSystemError("deg F_" + std::to_string(i + 1) + " = " + std::to_string(f.degree()) +
                                 " exceeds a_" + std::to_string(i + 1) + " - a0 = " + std::to_string(bound));
    }
}

GapSystem GapSystem::from_generators(const std::vector<Polynomial>& generators, std::vector<unsigned> a,
                                     unsigned a0) {
    if (generators.size() != a.size()) throw GapSystemError("one exponent a_i per generator expected");
    std::vector<Polynomial> tails;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto lead = ExponentVector::unit(generators[i].nvars(), i, a[i] + 1);
        if (generators[i].nvars() != a.size() || generators[i].coefficient(lead) != 1)
            throw GapSystemError("generator " + std::to_string(i + 1) + " must contain X" + std::to_string(i + 1) +
                                 "^" + std::to_string(a[i] + 1) + " with coefficient 1");
        tails.push_back(generators[i] - Polynomial::term(lead));
    }
    return GapSystem(std::move(a), a0, std::move(tails));
}

Polynomial GapSystem::generator(std::size_t i) const {
    return tails_.at(i) + Polynomial::term(ExponentVector::unit(n(), i, a_[i] + 1));
}

// ---------------------------------------------------------------------------

QuotientAlgebra::QuotientAlgebra(GapSystem system) : system_(std::move(system)) {
    const auto& a = system_.a();
    const std::size_t n = a.size();
    stride_.assign(n, 1);
    for (std::size_t i = n - 1; i-- > 0;) stride_[i] = stride_[i + 1] * (a[i + 1] + 1);
    const std::size_t dim = stride_[0] * (a[0] + 1);
    basis_.reserve(dim);
    std::vector<unsigned> alpha(n);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t i = 0; i < n; ++i) alpha[i] = static_cast<unsigned>((k / stride_[i]) % (a[i] + 1));
        basis_.emplace_back(alpha);
    }
}

bool QuotientAlgebra::in_basis(const ExponentVector& e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > system_.a()[i]) return false;
    return true;
}

std::size_t QuotientAlgebra::index_of(const ExponentVector& alpha) const {
    if (alpha.size() != system_.n() || !in_basis(alpha)) throw std::out_of_range("not a basis monomial");
    std::size_t k = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) k += alpha[i] * stride_[i];
    return k;
}

std::vector<Rational> QuotientAlgebra::normal_form_coordinates(const ExponentVector& delta) const {
    if (delta.size() != system_.n()) throw std::invalid_argument("monomial has the wrong number of variables");
    if (in_basis(delta)) {
        std::vector<Rational> v(dim());
        v[index_of(delta)] = 1;
        return v;
    }
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = nf_cache_.find(delta); it != nf_cache_.end()) return it->second;
    }

    // X^delta = X_i^(a_i+1) X^rest -> -F_i X^rest; the total degree drops.
    std::size_t i = 0;
    while (delta[i] <= system_.a()[i]) ++i;
    const ExponentVector rest(
        [&] {
            auto v = delta.values();
            std::vector<unsigned> r(v.begin(), v.end());
            r[i] -= system_.a()[i] + 1;
            return r;
        }());
    std::vector<Rational> out(dim());
    for (const auto& [tau, c] : system_.tail(i).terms()) {
        const auto sub = normal_form_coordinates(rest + tau);
        for (std::size_t k = 0; k < out.size(); ++k)
            if (sub[k] != 0) out[k] -= c * sub[k];
    }

    std::lock_guard lock(cache_mutex_);
    return nf_cache_.try_emplace(delta, std::move(out)).first->second;
}

Polynomial QuotientAlgebra::normal_form(const Polynomial& f) const {
    if (f.nvars() != system_.n()) throw std::invalid_argument("polynomial has the wrong number of variables");
    Polynomial out(system_.n());
    for (const auto& [e, c] : f.terms()) {
        const auto v = normal_form_coordinates(e);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) out.add_term(basis_[k], c * v[k]);
    }
    return out;
}

RationalMatrix QuotientAlgebra::mult_matrix(const Polynomial& f) const {
    if (f.nvars() != system_.n()) throw std::invalid_argument("polynomial has the wrong number of variables");
    RationalMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [e, c] : f.terms()) {
            const auto v = normal_form_coordinates(e + basis_[j]);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k] != 0) m(k, j) += c * v[k];
        }
    return m;
}

Rational QuotientAlgebra::trace_of_monomial(const ExponentVector& gamma) const {
    Rational t = 0;
    for (std::size_t j = 0; j < dim(); ++j) t += normal_form_coordinates(gamma + basis_[j])[j];
    return t;
}

Rational QuotientAlgebra::trace(const Polynomial& f) const {
    if (f.nvars() != system_.n()) throw std::invalid_argument("polynomial has the wrong number of variables");
    Rational t = 0;
    for (const auto& [e, c] : f.terms()) t += c * trace_of_monomial(e);
    return t;
}

SymmetricMatrixQ QuotientAlgebra::trace_form() const {
    std::map<ExponentVector, Rational, GrlexGreater> traces;
    RationalMatrix b(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j) {
            const ExponentVector gamma = basis_[i] + basis_[j];
            auto it = traces.find(gamma);
            if (it == traces.end()) it = traces.emplace(gamma, trace_of_monomial(gamma)).first;
            b(i, j) = b(j, i) = it->second;
        }
    return SymmetricMatrixQ(std::move(b));
}

// ---------------------------------------------------------------------------

namespace {

PointCount count_from(const QuotientAlgebra& alg) {
    const Inertia in = signature(alg.trace_form());
    return {in.positive - in.negative, in.positive + in.negative, in, alg.dim()};
}

}  // namespace

PointCount count_real_points(const GapSystem& system) { return count_from(QuotientAlgebra(system)); }

GapObstruction inspect_gap_obstruction(const GapSystem& system) {
    if (system.a0() < 2) throw GapSystemError("the gap obstruction needs a0 >= 2");
    std::size_t bezout = 1;
    for (std::size_t i = 0; i < system.n(); ++i) {
        if (system.a()[i] < system.a0())
            throw GapSystemError("a_" + std::to_string(i + 1) + " is below a0 = " + std::to_string(system.a0()));
        bezout *= system.a()[i] + 1;
    }
    const QuotientAlgebra alg(system);
    const Rational b11 = alg.mult_matrix(Polynomial::term(ExponentVector::unit(system.n(), 0, 2))).trace();
    return {b11, count_from(alg), bezout};
}

bool check_gap_obstruction(const GapSystem& system) {
    const GapObstruction g = inspect_gap_obstruction(system);
    if (g.b11 != 0) throw std::logic_error("Tr(m_{X1^2}) = " + to_string(g.b11) + " on a gap system");
    if (g.count.real < 0 || static_cast<std::size_t>(g.count.real) >= g.bezout)
        throw std::logic_error("gap system reached " + std::to_string(g.count.real) + " real solutions");
    return true;
}

}  // namespace waring
