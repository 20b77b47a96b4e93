#pragma once

#include "polyrank/exactmath.hpp"

#include <cmath>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <vector>

namespace polyrank {

// Real quadratic extension Q(sqrt(D)), D a positive nonsquare.
template <long D>
struct QuadExt {
    Rat a, b; // a + b*sqrt(D)

    QuadExt() : a(0), b(0) {}
    QuadExt(Rat r) : a(std::move(r)), b(0) {}
    QuadExt(long r) : a(r), b(0) {}
    QuadExt(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a + y.a, x.b + y.b}; }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a - y.a, x.b - y.b}; }
    friend QuadExt operator-(const QuadExt& x) { return {-x.a, -x.b}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return {x.a * y.a + D * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }

    QuadExt inverse() const {
        if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
        Rat n = a * a - D * b * b; // nonzero: sqrt(D) is irrational
        return {a / n, -b / n};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    // Exact sign of a + b*sqrt(D).
    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with D*b^2; the larger magnitude wins.
        Rat d = a * a - D * b * b;
        int sd = sgn(d);
        return sd == 0 ? 0 : (sd > 0 ? sa : sb);
    }

    double to_double() const { return a.get_d() + b.get_d() * std::sqrt(double(D)); }

    std::string str() const {
        std::ostringstream os;
        if (b == 0) return a.get_str();
        if (a != 0) os << a.get_str() << (b > 0 ? "+" : "");
        if (b == 1) os << "sqrt" << D;
        else if (b == -1) os << "-sqrt" << D;
        else os << b.get_str() << "*sqrt" << D;
        return os.str();
    }

  private:
    static int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }
};

using Q5 = QuadExt<5>;
using Q2 = QuadExt<2>;

inline Q5 golden_ratio() { return Q5(Rat(1, 2), Rat(1, 2)); }

// Element of Q(i, sqrt(2)): re + im*i with re, im in Q(sqrt(2)).
// Four rational coordinates total: a + b*sqrt2 + c*i + d*sqrt2*i.
struct GaussQ2 {
    Q2 re, im;

    GaussQ2() = default;
    GaussQ2(Q2 r) : re(std::move(r)) {}
    GaussQ2(long r) : re(Rat(r)) {}
    GaussQ2(Q2 r, Q2 i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend GaussQ2 operator+(const GaussQ2& x, const GaussQ2& y) { return {x.re + y.re, x.im + y.im}; }
    friend GaussQ2 operator-(const GaussQ2& x, const GaussQ2& y) { return {x.re - y.re, x.im - y.im}; }
    friend GaussQ2 operator-(const GaussQ2& x) { return {-x.re, -x.im}; }
    friend GaussQ2 operator*(const GaussQ2& x, const GaussQ2& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const GaussQ2& x, const GaussQ2& y) { return x.re == y.re && x.im == y.im; }

    GaussQ2 conj() const { return {re, -im}; }
    Q2 norm_sq() const { return re * re + im * im; } // |z|^2, an element of Q(sqrt2)

    GaussQ2 inverse() const {
        if (is_zero()) throw std::domain_error("GaussQ2: inverse of zero");
        Q2 n = norm_sq();
        GaussQ2 c = conj();
        return {c.re / n, c.im / n};
    }
    friend GaussQ2 operator/(const GaussQ2& x, const GaussQ2& y) { return x * y.inverse(); }

    std::string str() const {
        std::ostringstream os;
        os << "(" << re.str() << ")+(" << im.str() << ")i";
        return os.str();
    }
};

inline bool is_zero(const Rat& x) { return x == 0; }
template <long D> bool is_zero(const QuadExt<D>& x) { return x.is_zero(); }
inline bool is_zero(const GaussQ2& x) { return x.is_zero(); }

inline Rat field_inv(const Rat& x) {
    if (x == 0) throw std::domain_error("inverse of zero");
    return Rat(1) / x;
}
template <long D> QuadExt<D> field_inv(const QuadExt<D>& x) { return x.inverse(); }
inline GaussQ2 field_inv(const GaussQ2& x) { return x.inverse(); }

// Dense row-major matrix over an arbitrary value type.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c, T init = T()) : rows_(r), cols_(c), data_(r * c, init) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Rank by Gaussian elimination over an exact field.
template <class F>
std::size_t exact_rank(Matrix<F> m) {
    std::size_t rank = 0;
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && is_zero(m(pivot, col))) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        F inv = field_inv(m(rank, col));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (is_zero(m(i, col))) continue;
            F f = m(i, col) * inv;
            for (std::size_t j = col; j < cols; ++j)
                m(i, j) = m(i, j) - f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace polyrank
