#include "splicekit/brieskorn.hpp"

#include <sstream>

namespace splicekit {

BrieskornTuple::BrieskornTuple(std::vector<BigInt> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.size() < 3) throw InputError("a Brieskorn tuple needs at least 3 entries");
    for (const auto& a : alphas_)
        if (a < 1) throw InputError("Brieskorn exponents must be positive, got " + splicekit::to_string(a));
}

BrieskornTuple BrieskornTuple::parse(std::string_view text) {
    std::vector<BigInt> alphas;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        alphas.push_back(parse_integer(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return BrieskornTuple(std::move(alphas));
}

std::string BrieskornTuple::to_string() const {
    std::ostringstream out;
    out << "Σ(";
    for (std::size_t i = 0; i < alphas_.size(); ++i) out << (i ? "," : "") << alphas_[i];
    out << ')';
    return out.str();
}

BigInt genus_indicator(const BrieskornTuple& t) {
    const auto& a = t.alphas();
    const std::size_t n = a.size();
    const BigInt all = product(a) / lcm_list(a);
    BigInt sum = 0;
    std::vector<BigInt> rest;
    rest.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        rest.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) rest.push_back(a[j]);
        sum += product(rest) / lcm_list(rest);
    }
    return 2 + BigInt(n - 2) * all - sum;
}

std::string_view to_string(RhsCondition c) {
    switch (c) {
        case RhsCondition::condition1: return "condition1";
        case RhsCondition::condition2: return "condition2";
        case RhsCondition::condition3: return "condition3";
        case RhsCondition::not_rhs: return "not_rhs";
    }
    return "not_rhs";
}

RhsCondition classify_rhs(const BrieskornTuple& t) {
    const auto& a = t.alphas();
    struct Pair {
        std::size_t i, j;
        BigInt g;
    };
    std::vector<Pair> shared;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            BigInt g = boost::multiprecision::gcd(a[i], a[j]);
            if (g != 1) shared.push_back({i, j, std::move(g)});
        }
    if (shared.empty()) return RhsCondition::condition1;
    if (shared.size() == 1) return RhsCondition::condition2;
    if (shared.size() == 3) {
        // Pairs come out lexicographically, so a triangle k<l<m reads (k,l),(k,m),(l,m).
        const bool triangle = shared[0].i == shared[1].i && shared[0].j == shared[2].i && shared[1].j == shared[2].j;
        const bool all_two = shared[0].g == 2 && shared[1].g == 2 && shared[2].g == 2;
        if (triangle && all_two) return RhsCondition::condition3;
    }
    return RhsCondition::not_rhs;
}

ScanReport rhs_equivalence_scan(int max_alpha, int n_min, int n_max) {
    if (max_alpha < 2) throw InputError("scan needs max_alpha >= 2");
    if (n_min < 3 || n_max > 6 || n_min > n_max) throw InputError("scan lengths must satisfy 3 <= n_min <= n_max <= 6");
    ScanReport report;
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<int> digits(static_cast<std::size_t>(n), 1);
        while (true) {
            std::vector<BigInt> alphas(digits.begin(), digits.end());
            const BrieskornTuple t(alphas);
            const RhsCondition verdict = classify_rhs(t);
            const BigInt indicator = genus_indicator(t);
            ++report.tuples_checked;
            if (is_rhs(verdict)) ++report.rhs_count;
            if (is_rhs(verdict) != (indicator == 0))
                report.counterexamples.push_back({std::move(alphas), verdict, indicator});
            std::size_t pos = 0;
            while (pos < digits.size() && digits[pos] == max_alpha) digits[pos++] = 1;
            if (pos == digits.size()) break;
            ++digits[pos];
        }
    }
    report.all_agree = report.counterexamples.empty();
    return report;
}

}  // namespace splicekit
