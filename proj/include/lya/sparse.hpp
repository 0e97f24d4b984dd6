#pragma once

#include "lya/matrix.hpp"

#include <utility>
#include <vector>

namespace lya {

// Row-compressed sparse rational matrix. Used for coboundary operators, whose
// dense forms would be mostly zeros.
struct SparseMatrix {
    using Row = std::vector<std::pair<int, Rational>>;  // sorted by column, no zeros

    int rows = 0;
    int cols = 0;
    std::vector<Row> row;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), row(r) {}

    static SparseMatrix from_dense(const Matrix<Rational>& m);

    Vec<Rational> apply(const Vec<Rational>& x) const;
    Matrix<Rational> dense() const;
    SparseMatrix transpose() const;
    bool is_zero() const;
    size_t nnz() const;

    // Merges duplicate columns and drops zeros.
    static Row normalize(Row r);

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
};

}  // namespace lya
