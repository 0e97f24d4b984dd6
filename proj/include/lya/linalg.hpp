#pragma once

#include "lya/matrix.hpp"

#include <vector>

namespace lya {

struct RowEchelon {
    Matrix<Rational> reduced;  // reduced row echelon form
    std::vector<int> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(Matrix<Rational> m);

int rank(const Matrix<Rational>& m);
int rank(const Matrix<Poly>& m);  // PolynomialEntries unless every entry is constant

std::vector<Vec<Rational>> nullspace_basis(const Matrix<Rational>& m);
int nullspace_dim(const Matrix<Rational>& m);
int nullspace_dim(const Matrix<Poly>& m);

Matrix<Rational> invert(const Matrix<Rational>& m);  // Singular if not invertible

// Constant matrix from one whose entries are constant polynomials.
Matrix<Rational> constant_part(const Matrix<Poly>& m);

}  // namespace lya
