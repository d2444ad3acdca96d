#include "waring/ranks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace waring {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rank does not fit in 64 bits");
    return r;
}

std::vector<unsigned> sorted_exponents(const Monomial& m) {
    auto v = m.exponents().values();
    std::vector<unsigned> e(v.begin(), v.end());
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::binary:
            return "binary";
        case Method::a0eq1:
            return "a0eq1";
        case Method::squares:
            return "squares";
        case Method::general_grid:
            return "general-grid";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : {Method::binary, Method::a0eq1, Method::squares, Method::general_grid})
        if (to_string(m) == name) return m;
    return std::nullopt;
}

std::uint64_t complex_rank(const Monomial& m) {
    const auto e = sorted_exponents(m);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i < e.size(); ++i) r = checked_mul(r, e[i] + 1u);
    return r;
}

std::vector<RankBound> applicable_bounds(const Monomial& m) {
    const auto e = sorted_exponents(m);
    const std::size_t n = e.size() - 1;
    const unsigned a0 = e.front();
    std::vector<RankBound> out;
    if (n == 1) out.push_back({std::uint64_t{a0} + e[1], Method::binary});
    if (a0 == 1) out.push_back({complex_rank(m), Method::a0eq1});
    if (std::all_of(e.begin(), e.end(), [](unsigned a) { return a == 2; })) {
        std::uint64_t p = 1;
        for (std::size_t i = 0; i <= n; ++i) p = checked_mul(p, 3);
        out.push_back({(p - 1) / 2, Method::squares});
    }
    // (1 / (2 a0)) prod_{i=0..n} (a_i + a0); the i = 0 factor is exactly 2 a0
    std::uint64_t grid = 1;
    for (std::size_t i = 1; i <= n; ++i) grid = checked_mul(grid, std::uint64_t{a0} + e[i]);
    out.push_back({grid, Method::general_grid});
    return out;
}

RankBound real_rank_upper(const Monomial& m) {
    const auto bounds = applicable_bounds(m);
    return *std::min_element(bounds.begin(), bounds.end(),
                             [](const RankBound& a, const RankBound& b) { return a.size < b.size; });
}

std::optional<std::uint64_t> real_rank_exact(const Monomial& m) {
    const auto e = sorted_exponents(m);
    if (e.size() == 2) return std::uint64_t{e[0]} + e[1];
    if (e.front() == 1) return complex_rank(m);
    return std::nullopt;
}

std::optional<std::uint64_t> literature_lower_bound(const Monomial& m) {
    // rk_R(x0^2 x1^2 x2^2) > 10
    static const std::map<std::vector<unsigned>, std::uint64_t> known{{{2, 2, 2}, 11}};
    auto it = known.find(sorted_exponents(m));
    if (it == known.end()) return std::nullopt;
    return it->second;
}

std::uint64_t real_rank_lower(const Monomial& m) {
    if (auto exact = real_rank_exact(m)) return *exact;
    std::uint64_t lower = complex_rank(m) + (m.least_exponent() >= 2 ? 1 : 0);
    if (auto lit = literature_lower_bound(m)) lower = std::max(lower, *lit);
    return lower;
}

bool real_equals_complex(const Monomial& m) { return m.least_exponent() == 1; }

RankReport rank_report(const Monomial& m) {
    const RankBound upper = real_rank_upper(m);
    return {m,
            complex_rank(m),
            upper.size,
            real_rank_exact(m),
            real_rank_lower(m),
            real_equals_complex(m),
            upper.method};
}

}  // namespace waring
