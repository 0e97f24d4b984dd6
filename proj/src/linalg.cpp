#include "lya/linalg.hpp"

namespace lya {

RowEchelon rref(Matrix<Rational> m) {
    RowEchelon out;
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (int j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (int j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const Matrix<Rational>& m) {
    // Forward elimination only; cheaper than full reduction for big sparse
    // coboundary matrices. Work on the orientation with fewer rows.
    Matrix<Rational> a = m.rows() <= m.cols() ? m : m.transpose();
    int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        std::vector<int> nz;
        for (int j = c + 1; j < cols; ++j)
            if (!a(r, j).is_zero()) nz.push_back(j);
        for (int i = r + 1; i < rows; ++i) {
            if (a(i, c).is_zero()) continue;
            Rational f = a(i, c) / a(r, c);
            a(i, c) = Rational(0);
            for (int j : nz) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

Matrix<Rational> constant_part(const Matrix<Poly>& m) {
    Matrix<Rational> c(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_constant())
                fail(ErrorKind::PolynomialEntries, "matrix has non-constant polynomial entries; evaluate t first");
            c(i, j) = m(i, j).constant();
        }
    return c;
}

int rank(const Matrix<Poly>& m) { return rank(constant_part(m)); }

std::vector<Vec<Rational>> nullspace_basis(const Matrix<Rational>& m) {
    RowEchelon e = rref(m);
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<Vec<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec<Rational> v(cols);
        v[f] = Rational(1);
        for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

int nullspace_dim(const Matrix<Rational>& m) { return m.cols() - rank(m); }
int nullspace_dim(const Matrix<Poly>& m) { return nullspace_dim(constant_part(m)); }

Matrix<Rational> invert(const Matrix<Rational>& m) {
    require_dims(m.is_square(), "invert needs a square matrix");
    int n = m.rows();
    if (n == 0) return m;
    Matrix<Rational> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    RowEchelon e = rref(aug);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1)
        fail(ErrorKind::Singular, "matrix is singular");
    Matrix<Rational> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

}  // namespace lya
