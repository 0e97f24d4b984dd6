#include "lya/sparse.hpp"

#include <algorithm>

namespace lya {

SparseMatrix SparseMatrix::from_dense(const Matrix<Rational>& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) s.row[i].emplace_back(j, m(i, j));
    return s;
}

SparseMatrix::Row SparseMatrix::normalize(Row r) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row out;
    out.reserve(r.size());
    for (auto& [c, v] : r) {
        if (!out.empty() && out.back().first == c)
            out.back().second += v;
        else
            out.emplace_back(c, std::move(v));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second.is_zero(); }), out.end());
    return out;
}

Vec<Rational> SparseMatrix::apply(const Vec<Rational>& x) const {
    require_dims(static_cast<int>(x.size()) == cols, "sparse apply size mismatch");
    Vec<Rational> y(rows);
    for (int i = 0; i < rows; ++i)
        for (const auto& [c, v] : row[i])
            if (!x[c].is_zero()) y[i] += v * x[c];
    return y;
}

Matrix<Rational> SparseMatrix::dense() const {
    Matrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (const auto& [c, v] : row[i]) m(i, c) = v;
    return m;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (const auto& [c, v] : row[i]) t.row[c].emplace_back(i, v);
    return t;
}

bool SparseMatrix::is_zero() const {
    for (const auto& r : row)
        if (!r.empty()) return false;
    return true;
}

size_t SparseMatrix::nnz() const {
    size_t n = 0;
    for (const auto& r : row) n += r.size();
    return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    require_dims(a.cols == b.rows, "sparse product shape mismatch");
    SparseMatrix out(a.rows, b.cols);
    std::vector<Rational> acc(b.cols);
    std::vector<char> touched(b.cols, 0);
    std::vector<int> list;
    for (int i = 0; i < a.rows; ++i) {
        list.clear();
        for (const auto& [k, av] : a.row[i])
            for (const auto& [j, bv] : b.row[k]) {
                if (!touched[j]) {
                    touched[j] = 1;
                    list.push_back(j);
                }
                acc[j] += av * bv;
            }
        std::sort(list.begin(), list.end());
        for (int j : list) {
            if (!acc[j].is_zero()) out.row[i].emplace_back(j, acc[j]);
            acc[j] = Rational(0);
            touched[j] = 0;
        }
    }
    return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.row == b.row;
}

}  // namespace lya
