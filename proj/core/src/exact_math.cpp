#include "splicekit/exact_math.hpp"

#include <algorithm>
#include <cctype>

namespace splicekit {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BigInt gcd_list(std::span<const BigInt> xs) {
    if (xs.empty()) throw InputError("gcd_list: empty generating set");
    BigInt g = 0;
    for (const auto& x : xs) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return abs(g);
}

BigInt gcd_list(std::initializer_list<BigInt> xs) { return gcd_list(std::span<const BigInt>(xs.begin(), xs.size())); }

BigInt lcm_list(std::span<const BigInt> xs) {
    if (xs.empty()) throw InputError("lcm_list: empty list");
    BigInt l = 1;
    for (const auto& x : xs) {
        if (x <= 0) throw InputError("lcm_list: entries must be positive, got " + to_string(x));
        l = l / boost::multiprecision::gcd(l, x) * x;
    }
    return l;
}

BigInt lcm_list(std::initializer_list<BigInt> xs) { return lcm_list(std::span<const BigInt>(xs.begin(), xs.size())); }

bool divides(const BigInt& a, const BigInt& b) {
    if (a == 0) return b == 0;
    return b % a == 0;
}

BigInt product(std::span<const BigInt> xs) {
    BigInt p = 1;
    for (const auto& x : xs) p *= x;
    return p;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("zero denominator");
    return den < 0 ? BigRational(BigInt(-num), BigInt(-den)) : BigRational(num, den);
}

int sign(const BigInt& x) { return x.sign(); }
int sign(const BigRational& x) { return x.sign(); }

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const BigRational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt parse_integer(std::string_view text) {
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) throw InputError("not an integer: '" + std::string(text) + "'");
    BigInt value{std::string(digits)};
    return negative ? BigInt(-value) : value;
}

BigRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    const BigInt num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InputError("not a rational: '" + std::string(text) + "'");
    const BigInt den(std::string{den_text});
    if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

BigRational exact_determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    BigRational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        const BigRational p = a(col, col);
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const BigRational factor = a(r, col) / p;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

BigInt exact_determinant(const IntegerMatrix& m) {
    if (!m.is_square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    BigInt previous = 1;
    int det_sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            det_sign = -det_sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            }
        }
        previous = a(k, k);
    }
    return det_sign * a(n - 1, n - 1);
}

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = BigRational(m(r, c));
    return out;
}

}  // namespace splicekit
