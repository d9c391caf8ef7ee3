#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splicekit/errors.hpp"

namespace splicekit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Positive generator of the ideal (x_1, ..., x_k) of Z. Zero only when every
/// input is zero. Throws InputError on an empty list.
BigInt gcd_list(std::span<const BigInt> xs);
BigInt gcd_list(std::initializer_list<BigInt> xs);

/// Least common multiple of positive integers. Throws InputError on an empty
/// list or any entry <= 0.
BigInt lcm_list(std::span<const BigInt> xs);
BigInt lcm_list(std::initializer_list<BigInt> xs);

/// a | b, with the convention 0 | b iff b == 0.
bool divides(const BigInt& a, const BigInt& b);

BigInt product(std::span<const BigInt> xs);

/// num/den reduced, with the sign moved to the numerator. Throws InputError
/// for a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

int sign(const BigInt& x);
int sign(const BigRational& x);

/// Integers render as "n", everything else as reduced "a/b".
std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);

/// Accepts "[-]digits" or "[-]digits/digits" with a nonzero denominator.
BigInt parse_integer(std::string_view text);
BigRational parse_rational(std::string_view text);

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw InputError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix square(std::size_t n) { return Matrix(n, n); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    /// Principal submatrix on the given (ordered) index set.
    Matrix principal(std::span<const std::size_t> indices) const {
        Matrix out(indices.size(), indices.size());
        for (std::size_t r = 0; r < indices.size(); ++r)
            for (std::size_t c = 0; c < indices.size(); ++c)
                out(r, c) = (*this)(indices[r], indices[c]);
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<BigRational>;

/// Exact determinant by Gaussian elimination, pivoting on the first nonzero
/// entry of each column. The empty matrix has determinant 1.
BigRational exact_determinant(const RationalMatrix& m);

/// Fraction-free (Bareiss) determinant of an integer matrix.
BigInt exact_determinant(const IntegerMatrix& m);

RationalMatrix to_rational(const IntegerMatrix& m);

}  // namespace splicekit
