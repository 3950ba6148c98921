// Exact scalars: half-integers for weight coordinates, GMP rationals for
// everything else, and a small dense rational matrix with row reduction.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsf {

using Rational = mpq_class;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline long long checked_add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace detail

// A number in ½Z stored as twice its value.
struct Half {
    std::int32_t twice = 0;

    constexpr Half() = default;
    static constexpr Half from_twice(std::int32_t t)
    {
        Half h;
        h.twice = t;
        return h;
    }
    constexpr Half(int v) : twice(2 * v) {}

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr int floor_int() const { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }
    // only valid when is_integer()
    constexpr int as_int() const { return twice / 2; }

    Rational to_rational() const
    {
        Rational r(twice, 2);
        r.canonicalize();
        return r;
    }

    static Half from_rational(const Rational &q)
    {
        Rational t = q * 2;
        if (t.get_den() != 1)
            throw domain_error("coordinate " + q.get_str() + " is not in (1/2)Z");
        if (!t.get_num().fits_sint_p())
            throw domain_error("coordinate out of range");
        return from_twice(static_cast<std::int32_t>(t.get_num().get_si()));
    }

    constexpr Half operator-() const { return from_twice(-twice); }
    constexpr Half &operator+=(Half o)
    {
        twice += o.twice;
        return *this;
    }
    constexpr Half &operator-=(Half o)
    {
        twice -= o.twice;
        return *this;
    }
    friend constexpr Half operator+(Half a, Half b) { return from_twice(a.twice + b.twice); }
    friend constexpr Half operator-(Half a, Half b) { return from_twice(a.twice - b.twice); }
    friend constexpr Half operator*(int k, Half a) { return from_twice(k * a.twice); }
    friend constexpr auto operator<=>(Half, Half) = default;
    friend constexpr bool operator==(Half, Half) = default;

    std::string str() const
    {
        if (is_integer())
            return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

inline std::ostream &operator<<(std::ostream &os, Half h) { return os << h.str(); }

inline Rational parse_rational(const std::string &s)
{
    std::string t;
    for (char c : s)
        if (c != ' ')
            t += c;
    if (t.empty())
        throw domain_error("empty number");
    if (t[0] == '+')
        t.erase(0, 1);
    Rational q;
    if (q.set_str(t, 10) != 0)
        throw domain_error("cannot parse number '" + s + "'");
    if (q.get_den() == 0)
        throw domain_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_str(Rational q)
{
    q.canonicalize();
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Dense exact matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const
    {
        for (auto &x : a_)
            if (sgn(x) != 0)
                return false;
        return true;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.c_ != b.r_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const Rational &x = a(i, k);
                if (sgn(x) == 0)
                    continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    if (sgn(b(k, j)) != 0)
                        m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix &b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_)
            throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix &b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_)
            throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const Rational &s, Matrix a)
    {
        for (auto &x : a.a_)
            x *= s;
        return a;
    }
    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    Matrix submatrix(const std::vector<std::size_t> &rs, const std::vector<std::size_t> &cs) const
    {
        Matrix m(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j)
                m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// Row echelon form in place; returns rank. Pivot choice prefers the entry
// with the smallest numerator and denominator to keep entries short.
inline std::size_t row_reduce(Matrix &m)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = m.rows();
        for (std::size_t i = rank; i < m.rows(); ++i) {
            if (sgn(m(i, col)) == 0)
                continue;
            if (piv == m.rows()) {
                piv = i;
                continue;
            }
            auto size = [](const Rational &q) {
                return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
            };
            if (size(m(i, col)) < size(m(piv, col)))
                piv = i;
        }
        if (piv == m.rows())
            continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(rank, j));
        Rational inv = 1 / m(rank, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || sgn(m(i, col)) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_of(Matrix m) { return row_reduce(m); }

inline std::size_t rank_of(const std::vector<std::vector<Rational>> &rows, std::size_t ncols)
{
    Matrix m(rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            m(i, j) = rows[i][j];
    return row_reduce(m);
}

} // namespace dsf
