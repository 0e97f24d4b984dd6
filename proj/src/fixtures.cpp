#include "lya/fixtures.hpp"

#include "lya/linalg.hpp"

namespace lya {

RAlgebra a2() {
    RAlgebra A(2);
    A.set_bracket(0, 1, {1, 0});
    A.set_triple(0, 1, 1, {1, 0});
    return A;
}

RAlgebra abelian(int n) { return RAlgebra(n); }

RRep zero_rep(int n, int m) { return RRep(n, m); }

RAlgebra sl2() {
    RAlgebra A(3);
    A.basis = {"e", "f", "h"};
    A.set_bracket(2, 0, {2, 0, 0});
    A.set_bracket(2, 1, {0, -2, 0});
    A.set_bracket(0, 1, {0, 0, 1});
    return A;
}

RAlgebra heisenberg() {
    RAlgebra A(3);
    A.basis = {"x", "y", "z"};
    A.set_bracket(0, 1, {0, 0, 1});
    return A;
}

RAlgebra nonabelian_lie2() {
    RAlgebra A(2);
    A.basis = {"a", "b"};
    A.set_bracket(0, 1, {0, 1});
    return A;
}

RAlgebra lie_induced(const RAlgebra& lie) {
    RAlgebra A = lie;
    const int n = A.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<Rational> v = bracket(lie, bracket(lie, unit_vec<Rational>(n, i), unit_vec<Rational>(n, j)),
                                          unit_vec<Rational>(n, k));
                for (int l = 0; l < n; ++l) A.ternary(i, j, k, l) = v[l];
            }
    return A;
}

RAlgebra lie_triple_system(const RAlgebra& lie) {
    RAlgebra A = lie_induced(lie);
    for (auto& x : A.binary.data()) x = Rational(0);
    return A;
}

RAlgebra change_basis(const RAlgebra& A, const RMatrix& P) {
    const int n = A.dim;
    RMatrix Pi = invert(P);
    RAlgebra B(n);
    B.basis = A.basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<Rational> b = Pi.apply(bracket(A, P.col(i), P.col(j)));
            for (int k = 0; k < n; ++k) B.binary(i, j, k) = b[k];
            for (int k = 0; k < n; ++k) {
                Vec<Rational> t = Pi.apply(triple(A, P.col(i), P.col(j), P.col(k)));
                for (int l = 0; l < n; ++l) B.ternary(i, j, k, l) = t[l];
            }
        }
    return B;
}

RRep change_basis(const RRep& R, const RMatrix& P, const RMatrix& Q) {
    RMatrix Qi = invert(Q);
    RRep out(R.algebra_dim, R.module_dim);
    for (int i = 0; i < R.algebra_dim; ++i) out.rho[i] = Qi * R.rho_of(P.col(i)) * Q;
    for (int i = 0; i < R.algebra_dim; ++i)
        for (int j = 0; j < R.algebra_dim; ++j) out.mu.at(i, j) = Qi * R.mu_of(P.col(i), P.col(j)) * Q;
    return out;
}

RMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows) { return RMatrix::from_rows(rows); }

Rational random_rational(std::mt19937_64& rng, int range, int max_den) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

RMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range, int max_den, double density) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (u(rng) < density) M(i, j) = random_rational(rng, range, max_den);
    return M;
}

RMatrix random_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        RMatrix M = random_matrix(rng, n, n, 2, 1);
        if (rank(M) == n) return M;
    }
}

Vec<Rational> random_vec(std::mt19937_64& rng, int n) {
    Vec<Rational> v(n);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

namespace {

// mu(x,y) = rho(y) rho(x) turns a Lie algebra representation into one of the
// induced Lie-Yamaguti algebra (this reproduces the adjoint case).
RRep lie_induced_rep(const RAlgebra& lie, const std::vector<RMatrix>& rho) {
    const int n = lie.dim;
    const int m = rho.empty() ? 0 : rho[0].rows();
    RRep R(n, m);
    R.rho = rho;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.mu.at(i, j) = rho[j] * rho[i];
    return R;
}

std::vector<RMatrix> adjoint_matrices(const RAlgebra& A) { return adjoint_rep(A).rho; }

}  // namespace

NamedPair random_valid_pair(std::mt19937_64& rng, int max_dim) {
    std::uniform_int_distribution<int> pick(0, 9);
    while (true) {
        NamedPair np;
        int which = pick(rng);
        RAlgebra A;
        RRep R;
        switch (which) {
            case 0:
                np.name = "A2/adjoint";
                A = a2();
                R = adjoint_rep(A);
                break;
            case 1:
                np.name = "A2/coadjoint";
                A = a2();
                R = coadjoint_rep(A);
                break;
            case 2:
                np.name = "A2/zero";
                A = a2();
                R = zero_rep(2, 1 + static_cast<int>(rng() % max_dim));
                break;
            case 3: {
                int n = 1 + static_cast<int>(rng() % max_dim);
                np.name = "abelian" + std::to_string(n) + "/random";
                A = abelian(n);
                // On an abelian algebra rho must commute and mu must satisfy the
                // quadratic conditions; commuting diagonal data always works.
                int m = 1 + static_cast<int>(rng() % max_dim);
                R = RRep(n, m);
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < m; ++k) R.rho[i](k, k) = random_rational(rng);
                break;
            }
            case 4:
                np.name = "sl2-induced/adjoint";
                A = lie_induced(sl2());
                R = lie_induced_rep(A, adjoint_matrices(sl2()));
                break;
            case 5:
                np.name = "heisenberg-induced/adjoint";
                A = lie_induced(heisenberg());
                R = lie_induced_rep(A, adjoint_matrices(heisenberg()));
                break;
            case 6:
                np.name = "lie2-induced/adjoint";
                A = lie_induced(nonabelian_lie2());
                R = lie_induced_rep(A, adjoint_matrices(nonabelian_lie2()));
                break;
            case 7:
                np.name = "lie2-induced/coadjoint";
                A = lie_induced(nonabelian_lie2());
                R = coadjoint_rep(A);
                break;
            case 8:
                np.name = "sl2-lie/adjoint";
                A = sl2();
                R = adjoint_rep(A);
                break;
            default:
                np.name = "heisenberg-induced/coadjoint";
                A = lie_induced(heisenberg());
                R = coadjoint_rep(A);
                break;
        }
        if (A.dim > max_dim || R.module_dim > max_dim) continue;
        RMatrix P = random_invertible(rng, A.dim);
        RMatrix Q = random_invertible(rng, R.module_dim);
        np.pair.algebra = change_basis(A, P);
        np.pair.rep = change_basis(R, P, Q);
        np.name += " (random basis)";
        if (check_pair(np.pair).ok()) return np;
    }
}

std::vector<NamedPair> standard_pairs() {
    RAlgebra A = a2();
    RAlgebra S = semidirect(A, adjoint_rep(A));
    return {
        {"A2/adjoint", {A, adjoint_rep(A)}},
        {"A2/coadjoint", {A, coadjoint_rep(A)}},
        {"A2xA2/adjoint", {S, adjoint_rep(S)}},
    };
}

}  // namespace lya
