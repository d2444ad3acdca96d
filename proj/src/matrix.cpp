#include "waring/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace waring {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

namespace {

using IntRow = std::vector<Integer>;

IntRow integer_row(const RationalMatrix& a, std::size_t i, const Rational* rhs) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) l = lcm(l, Integer(a(i, j).get_den()));
    if (rhs) l = lcm(l, Integer(rhs->get_den()));
    IntRow row;
    row.reserve(a.cols() + 1);
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_num() * (l / a(i, j).get_den()));
    if (rhs) row.push_back(rhs->get_num() * (l / rhs->get_den()));
    return row;
}

struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivot_cols;
};

// Fraction-free elimination on the first `ncoef` columns; any further columns
// are carried along.
Echelon bareiss(std::vector<IntRow> m, std::size_t ncoef) {
    Echelon out;
    const std::size_t nrows = m.size();
    const std::size_t width = nrows ? m[0].size() : 0;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncoef && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[r]);
        const Integer& piv = m[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            if (m[i][c] == 0) {
                // still needs the scaling step to keep later divisions exact
                for (std::size_t j = c + 1; j < width; ++j) {
                    if (m[i][j] == 0) continue;
                    m[i][j] *= piv;
                    mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            const Integer f = m[i][c];
            for (std::size_t j = c + 1; j < width; ++j) {
                m[i][j] = piv * m[i][j] - f * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = piv;
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

}  // namespace

LinearSolution solve_exact(const RationalMatrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    std::vector<IntRow> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(integer_row(a, i, &b[i]));
    const std::size_t n = a.cols();
    Echelon e = bareiss(std::move(rows), n);

    LinearSolution sol;
    sol.rank = e.pivot_cols.size();
    sol.null_dimension = n - sol.rank;
    for (std::size_t i = sol.rank; i < e.rows.size(); ++i)
        if (e.rows[i][n] != 0) return sol;
    sol.consistent = true;
    sol.x.assign(n, Rational(0));
    for (std::size_t k = sol.rank; k-- > 0;) {
        const std::size_t c = e.pivot_cols[k];
        const IntRow& row = e.rows[k];
        Rational acc = Rational(row[n]);
        for (std::size_t j = c + 1; j < n; ++j)
            if (row[j] != 0 && sol.x[j] != 0) acc -= Rational(row[j]) * sol.x[j];
        sol.x[c] = acc / Rational(row[c]);
    }
    return sol;
}

std::size_t rank(const RationalMatrix& a) {
    std::vector<IntRow> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(integer_row(a, i, nullptr));
    return bareiss(std::move(rows), a.cols()).pivot_cols.size();
}

namespace {

using u64 = std::uint64_t;

__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 inv_mod(u64 a, u64 p) {
    u64 r = 1, e = p - 2;
    for (; e; e >>= 1, a = mul_mod(a, a, p))
        if (e & 1) r = mul_mod(r, a, p);
    return r;
}

// Monic characteristic polynomial (low-first) of a matrix over Z/p, via
// Hessenberg reduction and the usual leading-block recurrence.
std::vector<u64> charpoly_mod(std::vector<u64> h, std::size_t n, u64 p) {
    auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && at(i, m - 1) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(i, j), at(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(at(j, i), at(j, m));
        }
        const u64 t_inv = inv_mod(at(m, m - 1), p);
        for (std::size_t r = m + 1; r < n; ++r) {
            if (at(r, m - 1) == 0) continue;
            const u64 u = mul_mod(at(r, m - 1), t_inv, p);
            for (std::size_t j = 0; j < n; ++j) at(r, j) = (at(r, j) + p - mul_mod(u, at(m, j), p)) % p;
            for (std::size_t j = 0; j < n; ++j) at(j, m) = (at(j, m) + mul_mod(u, at(j, r), p)) % p;
        }
    }
    std::vector<std::vector<u64>> c(n + 1);
    c[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<u64> next(m + 1, 0);
        const u64 diag = at(m - 1, m - 1);
        for (std::size_t k = 0; k < m; ++k) {
            next[k + 1] = (next[k + 1] + c[m - 1][k]) % p;
            next[k] = (next[k] + p - mul_mod(diag, c[m - 1][k], p)) % p;
        }
        u64 t = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = mul_mod(t, at(i, i - 1), p);
            if (t == 0) break;
            const u64 f = mul_mod(t, at(i - 1, m - 1), p);
            if (f != 0)
                for (std::size_t k = 0; k < c[i - 1].size(); ++k)
                    next[k] = (next[k] + p - mul_mod(f, c[i - 1][k], p)) % p;
        }
        c[m] = std::move(next);
    }
    return c[n];
}

}  // namespace

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return {Rational(1)};

    // chi_A(t) = L^(-n) chi_{LA}(L t) with LA integral
    Integer l = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, Integer(a(i, j).get_den()));
    std::vector<Integer> m(n * n);
    Integer beta = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i * n + j] = a(i, j).get_num() * (l / a(i, j).get_den());
            beta = std::max(beta, Integer(abs(m[i * n + j])));
        }

    // |coefficient of t^(n-k)| <= C(n,k) * (sqrt(k) * beta)^k (Hadamard)
    Integer bound = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer root_k;
        mpz_sqrt(root_k.get_mpz_t(), Integer(static_cast<unsigned long>(k)).get_mpz_t());
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), Integer((root_k + 1) * beta).get_mpz_t(), k);
        bound = std::max(bound, Integer(b * pw));
    }

    std::vector<Integer> coeffs(n + 1, 0);
    Integer modulus = 1;
    Integer prime = Integer(1) << 62;
    std::vector<u64> h(n * n);
    while (modulus <= 2 * bound) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const u64 p = mpz_get_ui(prime.get_mpz_t());
        for (std::size_t k = 0; k < n * n; ++k) h[k] = mpz_fdiv_ui(m[k].get_mpz_t(), p);
        const std::vector<u64> r = charpoly_mod(h, n, p);
        // Garner step: x += modulus * ((r - x) / modulus mod p)
        const u64 m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t k = 0; k <= n; ++k) {
            const u64 x_mod = mpz_fdiv_ui(coeffs[k].get_mpz_t(), p);
            const u64 delta = mul_mod((r[k] + p - x_mod) % p, m_inv, p);
            coeffs[k] += modulus * Integer(static_cast<unsigned long>(delta));
        }
        modulus *= prime;
    }

    std::vector<Rational> out(n + 1);
    Integer scale = 1;  // L^(n-k), built from k = n downwards
    for (std::size_t k = n + 1; k-- > 0;) {
        Integer c = coeffs[k];
        if (2 * c > modulus) c -= modulus;
        out[k] = Rational(c, scale);
        out[k].canonicalize();
        scale *= l;
    }
    return out;
}

SymmetricMatrixQ::SymmetricMatrixQ(RationalMatrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
}

namespace {

int sign_variations(const std::vector<Rational>& c, bool alternate) {
    int count = 0;
    int last = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        int s = sgn(c[k]);
        if (s == 0) continue;
        if (alternate && k % 2 == 1) s = -s;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

Inertia signature(const SymmetricMatrixQ& b) {
    const std::vector<Rational> chi = characteristic_polynomial(b.matrix());
    Inertia in;
    in.positive = sign_variations(chi, false);
    in.negative = sign_variations(chi, true);
    in.zero = static_cast<int>(b.dim() - rank(b.matrix()));
    if (in.positive + in.negative + in.zero != static_cast<int>(b.dim()))
        throw std::logic_error("inertia does not add up to the dimension");
    return in;
}

}  // namespace waring
