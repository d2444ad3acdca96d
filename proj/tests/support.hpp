#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "waring/polynomial.hpp"
#include "waring/text.hpp"

namespace waring::testing {

inline Polynomial P(std::string_view text, std::size_t nvars) { return parse_polynomial(text, nvars).polynomial; }

inline Monomial M(std::initializer_list<unsigned> exps) { return Monomial(ExponentVector(exps)); }

class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 5, long max_den = 3) {
        Rational r(integer(-bound, bound), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long bound = 5, long max_den = 3) {
        Rational r;
        do r = rational(bound, max_den);
        while (r == 0);
        return r;
    }

    // Distinct values, pairwise different, from a small rational pool.
    std::vector<Rational> distinct(std::size_t count, long bound = 6, long max_den = 3) {
        std::vector<Rational> out;
        while (out.size() < count) {
            Rational r = rational(bound, max_den);
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
        return out;
    }

    Polynomial polynomial(std::size_t nvars, unsigned max_degree, std::size_t terms) {
        Polynomial p(nvars);
        for (std::size_t t = 0; t < terms; ++t) {
            std::vector<unsigned> e(nvars);
            unsigned budget = static_cast<unsigned>(integer(0, max_degree));
            for (auto& x : e) {
                x = static_cast<unsigned>(integer(0, budget));
                budget -= x;
            }
            p.add_term(ExponentVector(std::move(e)), rational());
        }
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

}  // namespace waring::testing
