#pragma once

#include "lya/errors.hpp"
#include "lya/poly.hpp"
#include "lya/rational.hpp"

#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace lya {

template <class S>
using Vec = std::vector<S>;

template <class S>
Vec<S> unit_vec(int n, int i) {
    Vec<S> v(n);
    v[i] = S(1);
    return v;
}

template <class S>
bool vec_is_zero(const Vec<S>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

// y += a * x
template <class S>
void axpy(Vec<S>& y, const S& a, const Vec<S>& x) {
    if (is_zero(a)) return;
    for (size_t i = 0; i < y.size(); ++i)
        if (!is_zero(x[i])) y[i] += a * x[i];
}

template <class S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class S>
Vec<S>& operator+=(Vec<S>& a, const Vec<S>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class S>
Vec<S>& operator-=(Vec<S>& a, const Vec<S>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class S>
Vec<S> scaled(const S& a, Vec<S> v) {
    for (auto& x : v) x *= a;
    return v;
}

template <class S>
std::vector<std::string> vec_strings(const Vec<S>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

// Dense row-major matrix. Linear maps act on column vectors: column k holds
// the coordinates of the image of the k-th basis vector.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    static Matrix scalar(int n, const S& s) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            require_dims(static_cast<int>(rows[i].size()) == c, "ragged matrix rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_rows(std::initializer_list<std::initializer_list<S>> rows) {
        std::vector<std::vector<S>> v;
        for (auto& r : rows) v.emplace_back(r);
        return from_rows(v);
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    S& operator()(int i, int j) { return e_[static_cast<size_t>(i) * c_ + j]; }
    const S& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * c_ + j]; }
    const std::vector<S>& entries() const { return e_; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!lya::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec<S> col(int j) const {
        Vec<S> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Vec<S> apply(const Vec<S>& x) const {
        require_dims(static_cast<int>(x.size()) == c_, "matrix-vector size mismatch");
        Vec<S> y(r_);
        for (int j = 0; j < c_; ++j) {
            if (lya::is_zero(x[j])) continue;
            for (int i = 0; i < r_; ++i) {
                const S& a = (*this)(i, j);
                if (!lya::is_zero(a)) y[i] += a * x[j];
            }
        }
        return y;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.e_) x = -x;
        return m;
    }
    Matrix& operator+=(const Matrix& o) {
        require_dims(r_ == o.r_ && c_ == o.c_, "matrix sum shape mismatch");
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_dims(r_ == o.r_ && c_ == o.c_, "matrix difference shape mismatch");
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& x : e_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require_dims(a.c_ == b.r_, "matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const S& x = a(i, k);
                if (lya::is_zero(x)) continue;
                for (int j = 0; j < b.c_; ++j) {
                    const S& y = b(k, j);
                    if (!lya::is_zero(y)) m(i, j) += x * y;
                }
            }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int r_ = 0, c_ = 0;
    std::vector<S> e_;
};

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b - b * a;
}

inline Matrix<Poly> to_poly(const Matrix<Rational>& m) {
    Matrix<Poly> p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) p(i, j) = Poly(m(i, j));
    return p;
}

// Dense multi-index tensor in row-major order.
template <class S>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
        size_t n = 1;
        for (int s : shape_) n *= static_cast<size_t>(s);
        e_.assign(n, S());
    }
    const std::vector<int>& shape() const { return shape_; }
    size_t size() const { return e_.size(); }
    std::vector<S>& data() { return e_; }
    const std::vector<S>& data() const { return e_; }

    template <class... I>
    S& operator()(I... idx) {
        return e_[offset({static_cast<int>(idx)...})];
    }
    template <class... I>
    const S& operator()(I... idx) const {
        return e_[offset({static_cast<int>(idx)...})];
    }
    size_t offset(std::initializer_list<int> idx) const {
        size_t off = 0;
        size_t k = 0;
        for (int i : idx) off = off * static_cast<size_t>(shape_[k++]) + static_cast<size_t>(i);
        return off;
    }
    bool is_zero() const {
        for (const auto& x : e_)
            if (!lya::is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.shape_ == b.shape_ && a.e_ == b.e_; }

private:
    std::vector<int> shape_;
    std::vector<S> e_;
};

}  // namespace lya
