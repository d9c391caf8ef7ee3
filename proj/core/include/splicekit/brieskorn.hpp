#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "splicekit/exact_math.hpp"

namespace splicekit {

/// Exponents (a_1, ..., a_n) of a Brieskorn complete intersection, n >= 3,
/// every entry >= 1.
class BrieskornTuple {
public:
    explicit BrieskornTuple(std::vector<BigInt> alphas);

    /// Parses a comma-separated list, e.g. "2,3,5".
    static BrieskornTuple parse(std::string_view text);

    const std::vector<BigInt>& alphas() const noexcept { return alphas_; }
    std::size_t size() const noexcept { return alphas_.size(); }
    std::string to_string() const;

    friend bool operator==(const BrieskornTuple&, const BrieskornTuple&) = default;

private:
    std::vector<BigInt> alphas_;
};

/// 2 + (n-2) * prod/lcm - sum_i prod_{j!=i} / lcm_{j!=i}. Zero exactly when
/// the base orbifold has genus zero.
BigInt genus_indicator(const BrieskornTuple& t);

enum class RhsCondition { condition1, condition2, condition3, not_rhs };

std::string_view to_string(RhsCondition c);

/// condition1: pairwise coprime. condition2: exactly one non-coprime pair.
/// condition3: the non-coprime pairs are exactly the three pairs of one
/// triple, each with gcd 2.
RhsCondition classify_rhs(const BrieskornTuple& t);

inline bool is_rhs(RhsCondition c) { return c != RhsCondition::not_rhs; }

struct ScanCounterexample {
    std::vector<BigInt> alphas;
    RhsCondition verdict;
    BigInt indicator;
};

struct ScanReport {
    bool all_agree = true;
    std::size_t tuples_checked = 0;
    std::size_t rhs_count = 0;
    std::vector<ScanCounterexample> counterexamples;
};

/// Every ordered tuple with entries in [1, max_alpha] and length in
/// [n_min, n_max] is checked for classify_rhs != not_rhs <=> indicator == 0.
/// Requires max_alpha >= 2 and 3 <= n_min <= n_max <= 6.
ScanReport rhs_equivalence_scan(int max_alpha, int n_min, int n_max);

}  // namespace splicekit
