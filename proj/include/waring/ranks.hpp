#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "waring/polynomial.hpp"

namespace waring {

/// Which construction realizes a real upper bound.
enum class Method { binary, a0eq1, squares, general_grid };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// All ranks below are invariant under permuting the variables; exponents
/// are sorted internally. Values that overflow 64 bits throw
/// std::overflow_error.

/// (1 / (a0 + 1)) * prod (a_i + 1), a0 the least exponent.
std::uint64_t complex_rank(const Monomial& m);

struct RankBound {
    std::uint64_t size;
    Method method;

    friend bool operator==(const RankBound&, const RankBound&) = default;
};

/// Every real upper bound that applies to m, in tie-break preference order:
/// binary (two variables), a0eq1 (least exponent 1), squares (all exponents
/// 2), general-grid (always).
std::vector<RankBound> applicable_bounds(const Monomial& m);

/// Smallest applicable bound; ties go to the earlier method.
RankBound real_rank_upper(const Monomial& m);

/// Known exact real rank: a0 + a1 for two variables, the complex rank when
/// the least exponent is 1. Empty otherwise.
std::optional<std::uint64_t> real_rank_exact(const Monomial& m);

/// complex rank when a0 = 1, otherwise complex rank + 1, raised to the exact
/// value or a literature constant where one is known.
std::uint64_t real_rank_lower(const Monomial& m);

/// Real and complex ranks agree exactly when the least exponent is 1.
bool real_equals_complex(const Monomial& m);

/// Lower bounds proved elsewhere, keyed by sorted exponents. Kept apart from
/// anything computed here.
std::optional<std::uint64_t> literature_lower_bound(const Monomial& m);

struct RankReport {
    Monomial monomial;
    std::uint64_t complex_rank;
    std::uint64_t real_upper;
    std::optional<std::uint64_t> real_exact;
    std::uint64_t real_lower;
    bool equality;
    Method method;
};

RankReport rank_report(const Monomial& m);

}  // namespace waring
