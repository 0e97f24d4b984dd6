#include "lya/search.hpp"

#include <functional>

namespace lya {

namespace {

using RM = Matrix<Rational>;

// Calls visit(values) for every vector in {-range..range}^cells, lexicographically.
void for_each_grid_point(int cells, int range, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> e(cells, -range);
    while (true) {
        visit(e);
        int k = cells - 1;
        while (k >= 0 && ++e[k] > range) e[k--] = -range;
        if (k < 0) break;
    }
}

RM from_cells(int r, int c, const std::vector<int>& e) {
    RM m(r, c);
    for (int i = 0; i < r * c; ++i) m(i / c, i % c) = Rational(e[i]);
    return m;
}

}  // namespace

std::vector<Matrix<Rational>> grid_relative_rb(const LieYRepPair<Rational>& P, int range) {
    const int r = P.algebra.dim, c = P.rep.module_dim;
    std::vector<RM> found;
    for_each_grid_point(r * c, range, [&](const std::vector<int>& e) {
        RM T = from_cells(r, c, e);
        if (is_relative_rb(P, T)) found.push_back(T);
    });
    return found;
}

std::vector<Matrix<Rational>> grid_invariant_forms(const Algebra<Rational>& A, int range) {
    const int n = A.dim;
    std::vector<RM> found;
    for_each_grid_point(n * (n + 1) / 2, range, [&](const std::vector<int>& e) {
        RM b(n, n);
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j, ++idx) b(i, j) = b(j, i) = Rational(e[idx]);
        if (is_invariant_form(A, b)) found.push_back(b);
    });
    return found;
}

std::vector<QuadraticRBN> grid_quadratic_rbn(const QuadraticForm& qf, int skew_range, int n_range) {
    const Algebra<Rational>& A = qf.algebra();
    const int n = A.dim;
    const LieYRepPair<Rational> adj{A, adjoint_rep(A)};
    std::vector<QuadraticRBN> found;
    for_each_grid_point(n * (n - 1) / 2, skew_range, [&](const std::vector<int>& e) {
        RM K(n, n);
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx) {
                K(i, j) = Rational(e[idx]);
                K(j, i) = -K(i, j);
            }
        RM R = K * qf.b();
        if (R.is_zero() || !is_relative_rb(adj, R)) return;
        for_each_grid_point(n * n, n_range, [&](const std::vector<int>& f) {
            RM N = from_cells(n, n, f);
            if (!form_compatible(qf, N) || N * R != R * N) return;
            if (is_rb_nijenhuis(A, R, N)) found.push_back({R, N});
        });
    });
    return found;
}

std::vector<Matrix<Rational>> grid_nijenhuis(const Algebra<Rational>& A, int range) {
    const int n = A.dim;
    std::vector<RM> found;
    for_each_grid_point(n * n, range, [&](const std::vector<int>& e) {
        RM N = from_cells(n, n, e);
        if (is_nijenhuis(A, N)) found.push_back(N);
    });
    return found;
}

}  // namespace lya
