#pragma once

#include "lya/algebra.hpp"

#include <string>
#include <vector>

namespace lya {

// Bilinear table of operators on V indexed by ordered basis pairs: at(i,j).
template <class S>
struct OpTable {
    int n = 0;
    std::vector<Matrix<S>> m;

    OpTable() = default;
    OpTable(int n_, int module_dim) : n(n_), m(static_cast<size_t>(n_) * n_, Matrix<S>(module_dim, module_dim)) {}
    Matrix<S>& at(int i, int j) { return m[static_cast<size_t>(i) * n + j]; }
    const Matrix<S>& at(int i, int j) const { return m[static_cast<size_t>(i) * n + j]; }

    // sum_{i,j} x_i y_j at(i,j)
    Matrix<S> of(const Vec<S>& x, const Vec<S>& y) const {
        int md = m.empty() ? 0 : m[0].rows();
        Matrix<S> out(md, md);
        for (int i = 0; i < n; ++i) {
            if (is_zero(x[i])) continue;
            for (int j = 0; j < n; ++j) {
                if (is_zero(y[j])) continue;
                S c = x[i] * y[j];
                const Matrix<S>& a = at(i, j);
                if (a.is_zero()) continue;
                out += c * a;
            }
        }
        return out;
    }
    friend bool operator==(const OpTable& a, const OpTable& b) { return a.n == b.n && a.m == b.m; }
};

// Representation (V; rho, mu) of a Lie-Yamaguti algebra: rho[i] = rho(e_i) and
// mu.at(i,j) = mu(e_i, e_j), all module_dim x module_dim.
template <class S>
struct Representation {
    int algebra_dim = 0;
    int module_dim = 0;
    std::vector<Matrix<S>> rho;
    OpTable<S> mu;

    Representation() = default;
    Representation(int n, int m) : algebra_dim(n), module_dim(m), rho(n, Matrix<S>(m, m)), mu(n, m) {}

    Matrix<S> rho_of(const Vec<S>& x) const {
        Matrix<S> out(module_dim, module_dim);
        for (int i = 0; i < algebra_dim; ++i)
            if (!is_zero(x[i])) out += x[i] * rho[i];
        return out;
    }
    Matrix<S> mu_of(const Vec<S>& x, const Vec<S>& y) const { return mu.of(x, y); }
    friend bool operator==(const Representation& a, const Representation& b) {
        return a.algebra_dim == b.algebra_dim && a.module_dim == b.module_dim && a.rho == b.rho && a.mu == b.mu;
    }
};

template <class S>
struct LieYRepPair {
    Algebra<S> algebra;
    Representation<S> rep;
};

template <class S>
void require_compatible(const Algebra<S>& A, const Representation<S>& R) {
    require_dims(R.algebra_dim == A.dim, "representation is for a different algebra dimension");
    require_dims(static_cast<int>(R.rho.size()) == A.dim && R.mu.n == A.dim &&
                     static_cast<int>(R.mu.m.size()) == A.dim * A.dim,
                 "representation tables have the wrong length");
    for (const auto& r : R.rho) require_dims(r.rows() == R.module_dim && r.cols() == R.module_dim, "rho matrix shape");
    for (const auto& r : R.mu.m) require_dims(r.rows() == R.module_dim && r.cols() == R.module_dim, "mu matrix shape");
}

// D(x,y) = mu(y,x) - mu(x,y) + [rho(x),rho(y)] - rho([x,y]).
template <class S>
OpTable<S> derived_D(const Algebra<S>& A, const Representation<S>& R) {
    require_compatible(A, R);
    const int n = A.dim;
    OpTable<S> D(n, R.module_dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            D.at(i, j) = R.mu.at(j, i) - R.mu.at(i, j) + commutator(R.rho[i], R.rho[j]) -
                         R.rho_of(bracket(A, unit_vec<S>(n, i), unit_vec<S>(n, j)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (D.at(i, j) != -D.at(j, i))
                fail(ErrorKind::ConsequenceViolated, "derived D is not skew-symmetric");
    return D;
}

template <class S>
Report check_representation(const Algebra<S>& A, const Representation<S>& R) {
    require_compatible(A, R);
    const int n = A.dim;
    OpTable<S> D = derived_D(A, R);
    auto E = [&](int i) { return unit_vec<S>(n, i); };
    auto rho = [&](const Vec<S>& x) { return R.rho_of(x); };
    auto mu = [&](const Vec<S>& x, const Vec<S>& y) { return R.mu_of(x, y); };
    auto Dm = [&](const Vec<S>& x, const Vec<S>& y) { return D.of(x, y); };
    auto br = [&](const Vec<S>& x, const Vec<S>& y) { return bracket(A, x, y); };
    auto tr = [&](const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) { return triple(A, x, y, z); };

    Report rep;
    rep.subject = "representation conditions";
    rep.add(scan_tuples<S>("rep-bracket-left", "mu([x,y],z) = mu(x,z)rho(y) - mu(y,z)rho(x)", {n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]);
                               return flat(mu(br(x, y), z) - mu(x, z) * rho(y) + mu(y, z) * rho(x));
                           }));
    rep.add(scan_tuples<S>("rep-bracket-right", "mu(x,[y,z]) = rho(y)mu(x,z) - rho(z)mu(x,y)", {n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]);
                               return flat(mu(x, br(y, z)) - rho(y) * mu(x, z) + rho(z) * mu(x, y));
                           }));
    rep.add(scan_tuples<S>("rep-rho-triple", "rho(<<x,y,z>>) = [D(x,y),rho(z)]", {n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]);
                               return flat(rho(tr(x, y, z)) - commutator(Dm(x, y), rho(z)));
                           }));
    rep.add(scan_tuples<S>("rep-mu-product",
                           "mu(z,w)mu(x,y) - mu(y,w)mu(x,z) - mu(x,<<y,z,w>>) + D(y,z)mu(x,w) = 0", {n, n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]), w = E(t[3]);
                               return flat(mu(z, w) * mu(x, y) - mu(y, w) * mu(x, z) - mu(x, tr(y, z, w)) +
                                           Dm(y, z) * mu(x, w));
                           }));
    rep.add(scan_tuples<S>("rep-mu-triple", "mu(<<x,y,z>>,w) + mu(z,<<x,y,w>>) = [D(x,y),mu(z,w)]", {n, n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]), w = E(t[3]);
                               return flat(mu(tr(x, y, z), w) + mu(z, tr(x, y, w)) - commutator(Dm(x, y), mu(z, w)));
                           }));
    return rep;
}

template <class S>
bool is_representation(const Algebra<S>& A, const Representation<S>& R) {
    return check_representation(A, R).ok();
}

// Identities that every representation satisfies as a consequence of the axioms.
template <class S>
Report check_derived_identities(const Algebra<S>& A, const Representation<S>& R) {
    require_compatible(A, R);
    const int n = A.dim;
    OpTable<S> D = derived_D(A, R);
    auto E = [&](int i) { return unit_vec<S>(n, i); };
    auto mu = [&](const Vec<S>& x, const Vec<S>& y) { return R.mu_of(x, y); };
    auto Dm = [&](const Vec<S>& x, const Vec<S>& y) { return D.of(x, y); };
    auto br = [&](const Vec<S>& x, const Vec<S>& y) { return bracket(A, x, y); };
    auto tr = [&](const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) { return triple(A, x, y, z); };

    Report rep;
    rep.subject = "derived representation identities";
    rep.add(scan_tuples<S>("D-cyclic", "D([x,y],z) + D([y,z],x) + D([z,x],y) = 0", {n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]);
                               return flat(Dm(br(x, y), z) + Dm(br(y, z), x) + Dm(br(z, x), y));
                           }));
    rep.add(scan_tuples<S>("D-triple", "D(<<x,y,z>>,w) + D(z,<<x,y,w>>) = [D(x,y),D(z,w)]", {n, n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]), w = E(t[3]);
                               return flat(Dm(tr(x, y, z), w) + Dm(z, tr(x, y, w)) - commutator(Dm(x, y), Dm(z, w)));
                           }));
    rep.add(scan_tuples<S>("mu-triple-expansion", "mu(<<x,y,z>>,w) = mu(x,w)mu(z,y) - mu(y,w)mu(z,x) - mu(z,w)D(x,y)",
                           {n, n, n, n}, [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]), w = E(t[3]);
                               return flat(mu(tr(x, y, z), w) - mu(x, w) * mu(z, y) + mu(y, w) * mu(z, x) +
                                           mu(z, w) * Dm(x, y));
                           }));
    return rep;
}

// rho = ad, mu(x,y) = (z -> <<z,x,y>>).
template <class S>
Representation<S> adjoint_rep(const Algebra<S>& A) {
    const int n = A.dim;
    Representation<S> R(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) R.rho[i](l, k) = A.binary(i, k, l);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) R.mu.at(i, j)(l, k) = A.ternary(k, i, j, l);
    return R;
}

// Dual representation on V* in the dual basis: rho*(x) = -rho(x)^T and
// mu*(x,y) = mu(y,x)^T, which gives D*(x,y) = -D(x,y)^T.
template <class S>
Representation<S> dual_rep(const Representation<S>& R) {
    Representation<S> out(R.algebra_dim, R.module_dim);
    for (int i = 0; i < R.algebra_dim; ++i) out.rho[i] = -R.rho[i].transpose();
    for (int i = 0; i < R.algebra_dim; ++i)
        for (int j = 0; j < R.algebra_dim; ++j) out.mu.at(i, j) = R.mu.at(j, i).transpose();
    return out;
}

template <class S>
Representation<S> coadjoint_rep(const Algebra<S>& A) {
    return dual_rep(adjoint_rep(A));
}

// Semidirect product g + V; basis is g first, then V.
template <class S>
Algebra<S> semidirect(const Algebra<S>& A, const Representation<S>& R, bool validate = true) {
    require_compatible(A, R);
    if (validate && !is_representation(A, R)) fail(ErrorKind::InvalidRep, "input is not a representation");
    const int d = A.dim, m = R.module_dim, N = d + m;
    OpTable<S> D = derived_D(A, R);
    Algebra<S> out(N);
    for (int i = 0; i < d; ++i) out.basis[i] = A.basis.size() == static_cast<size_t>(d) ? A.basis[i] : out.basis[i];
    for (int b = 0; b < m; ++b) out.basis[d + b] = "v" + std::to_string(b + 1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) out.binary(i, j, k) = A.binary(i, j, k);
    for (int i = 0; i < d; ++i)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                out.binary(i, d + b, d + c) = R.rho[i](c, b);
                out.binary(d + b, i, d + c) = -R.rho[i](c, b);
            }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) out.ternary(i, j, k, l) = A.ternary(i, j, k, l);
            for (int c = 0; c < m; ++c)
                for (int g = 0; g < m; ++g) {
                    out.ternary(i, j, d + c, d + g) = D.at(i, j)(g, c);      // D(x,y)w
                    out.ternary(d + c, j, i, d + g) = R.mu.at(j, i)(g, c);   // mu(y,z)u
                    out.ternary(j, d + c, i, d + g) = -R.mu.at(j, i)(g, c);  // -mu(x,z)v
                }
        }
    return out;
}

template <class S>
Report pair_homomorphism_report(const Matrix<S>& phi, const Matrix<S>& psi, const LieYRepPair<S>& P,
                                const LieYRepPair<S>& Q) {
    const int n = P.algebra.dim;
    require_dims(phi.rows() == Q.algebra.dim && phi.cols() == n, "phi shape");
    require_dims(psi.rows() == Q.rep.module_dim && psi.cols() == P.rep.module_dim, "psi shape");
    Report rep = homomorphism_report(phi, P.algebra, Q.algebra);
    rep.subject = "LieYRep pair homomorphism";
    OpTable<S> DP = derived_D(P.algebra, P.rep), DQ = derived_D(Q.algebra, Q.rep);
    auto E = [&](int i) { return unit_vec<S>(n, i); };
    rep.add(scan_tuples<S>("hom-rho", "psi rho(x) = rho'(phi x) psi", {n}, [&](const std::vector<int>& t) {
        return flat(psi * P.rep.rho[t[0]] - Q.rep.rho_of(phi.apply(E(t[0]))) * psi);
    }));
    rep.add(scan_tuples<S>("hom-mu", "psi mu(x,y) = mu'(phi x, phi y) psi", {n, n}, [&](const std::vector<int>& t) {
        return flat(psi * P.rep.mu.at(t[0], t[1]) - Q.rep.mu_of(phi.apply(E(t[0])), phi.apply(E(t[1]))) * psi);
    }));
    rep.add(scan_tuples<S>("hom-D", "psi D(x,y) = D'(phi x, phi y) psi", {n, n}, [&](const std::vector<int>& t) {
        return flat(psi * DP.at(t[0], t[1]) - DQ.of(phi.apply(E(t[0])), phi.apply(E(t[1]))) * psi);
    }));
    return rep;
}

template <class S>
bool is_pair_homomorphism(const Matrix<S>& phi, const Matrix<S>& psi, const LieYRepPair<S>& P,
                          const LieYRepPair<S>& Q) {
    return pair_homomorphism_report(phi, psi, P, Q).ok();
}

template <class S>
Report check_pair(const LieYRepPair<S>& P) {
    Report rep;
    rep.subject = "LieYRep pair";
    rep.absorb(check_axioms(P.algebra));
    rep.absorb(check_representation(P.algebra, P.rep));
    return rep;
}

inline Representation<Poly> to_poly(const Representation<Rational>& R) {
    Representation<Poly> P(R.algebra_dim, R.module_dim);
    for (int i = 0; i < R.algebra_dim; ++i) P.rho[i] = to_poly(R.rho[i]);
    for (size_t k = 0; k < R.mu.m.size(); ++k) P.mu.m[k] = to_poly(R.mu.m[k]);
    return P;
}

inline OpTable<Poly> to_poly(const OpTable<Rational>& T) {
    OpTable<Poly> P;
    P.n = T.n;
    for (const auto& m : T.m) P.m.push_back(to_poly(m));
    return P;
}

}  // namespace lya
