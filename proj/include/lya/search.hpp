#pragma once

#include "lya/quadratic.hpp"

#include <vector>

namespace lya {

// Exhaustive grid searches used to produce fixtures. Every entry ranges over
// the integers -range..range; results come in lexicographic grid order.
// These are fixture generators, not solvers: they find only what lies on the
// grid.

// All relative Rota-Baxter operators T : V -> g with entries on the grid.
std::vector<Matrix<Rational>> grid_relative_rb(const LieYRepPair<Rational>& P, int range = 2);

// All nondegenerate invariant symmetric forms with entries on the grid.
std::vector<Matrix<Rational>> grid_invariant_forms(const Algebra<Rational>& A, int range = 2);

struct QuadraticRBN {
    Matrix<Rational> R;
    Matrix<Rational> N;
};
// Rota-Baxter-Nijenhuis structures (R, N) on a quadratic algebra satisfying
// the premises of the r-matrix correspondence: R = K b with K skew on the
// grid -skew_range..skew_range (so R B^# = K is skew), R != 0, and N on the
// grid -n_range..n_range compatible with B.
std::vector<QuadraticRBN> grid_quadratic_rbn(const QuadraticForm& qf, int skew_range = 2, int n_range = 1);

// Nijenhuis operators on A with entries on the grid.
std::vector<Matrix<Rational>> grid_nijenhuis(const Algebra<Rational>& A, int range = 1);

}  // namespace lya
