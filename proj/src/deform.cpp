#include "lya/deform.hpp"

namespace lya {

namespace {

using RM = Matrix<Rational>;
using RV = Vec<Rational>;

RV E(int n, int i) { return unit_vec<Rational>(n, i); }

// Coefficient of t^k of every structure constant.
Algebra<Rational> t_coefficient(const Algebra<Poly>& A, int k) {
    Algebra<Rational> out(A.dim);
    out.basis = A.basis;
    for (size_t i = 0; i < A.binary.size(); ++i) out.binary.data()[i] = A.binary.data()[i].coeff(k);
    for (size_t i = 0; i < A.ternary.size(); ++i) out.ternary.data()[i] = A.ternary.data()[i].coeff(k);
    return out;
}

RM op_of(const std::vector<RM>& table, int m, const RV& x) {
    RM out(m, m);
    for (size_t i = 0; i < table.size(); ++i)
        if (!x[i].is_zero()) out += x[i] * table[i];
    return out;
}

RV apply_phi(const DeformationData& dd, const RV& x, const RV& y) {
    RV out(dd.d);
    for (int i = 0; i < dd.d; ++i)
        for (int j = 0; j < dd.d; ++j)
            for (int k = 0; k < dd.d; ++k) out[k] += x[i] * y[j] * dd.phi(i, j, k);
    return out;
}

void check_shapes(const LieYRepPair<Rational>& P, const Matrix<Rational>& N, const Matrix<Rational>& S) {
    const int d = P.algebra.dim, m = P.rep.module_dim;
    require_compatible(P.algebra, P.rep);
    require_dims(N.rows() == d && N.cols() == d, "N must be a dim(g) x dim(g) matrix");
    require_dims(S.rows() == m && S.cols() == m, "S must be a dim(V) x dim(V) matrix");
}

// varrho and varpi1, varpi2 of the trivial deformation; also used for the
// structure conditions.
struct NSTerms {
    std::vector<RM> varrho;
    OpTable<Rational> varpi1, varpi2;
};

NSTerms ns_terms(const LieYRepPair<Rational>& P, const RM& N, const RM& S) {
    const int d = P.algebra.dim, m = P.rep.module_dim;
    const Representation<Rational>& R = P.rep;
    NSTerms t{std::vector<RM>(d, RM(m, m)), OpTable<Rational>(d, m), OpTable<Rational>(d, m)};
    for (int i = 0; i < d; ++i) {
        RV x = E(d, i), Nx = N.apply(x);
        t.varrho[i] = R.rho_of(Nx) + R.rho[i] * S - S * R.rho[i];
        for (int j = 0; j < d; ++j) {
            RV y = E(d, j), Ny = N.apply(y);
            RM mNxy = R.mu_of(Nx, y), mxNy = R.mu_of(x, Ny), mxy = R.mu.at(i, j);
            RM w1 = mNxy + mxNy + mxy * S - S * mxy;
            t.varpi1.at(i, j) = w1;
            t.varpi2.at(i, j) = mNxy * S + mxNy * S + R.mu_of(Nx, Ny) - S * w1;
        }
    }
    return t;
}

}  // namespace

DeformationData deformation_zero(int d, int m) {
    DeformationData dd;
    dd.d = d;
    dd.m = m;
    dd.phi = Tensor<Rational>({d, d, d});
    dd.phi1 = Tensor<Rational>({d, d, d, d});
    dd.phi2 = Tensor<Rational>({d, d, d, d});
    dd.varrho.assign(d, RM(m, m));
    dd.varpi1 = OpTable<Rational>(d, m);
    dd.varpi2 = OpTable<Rational>(d, m);
    return dd;
}

bool is_zero(const DeformationData& dd) {
    if (!dd.phi.is_zero() || !dd.phi1.is_zero() || !dd.phi2.is_zero()) return false;
    for (const auto& r : dd.varrho)
        if (!r.is_zero()) return false;
    for (const auto* t : {&dd.varpi1, &dd.varpi2})
        for (const auto& r : t->m)
            if (!r.is_zero()) return false;
    return true;
}

void require_compatible(const LieYRepPair<Rational>& P, const DeformationData& dd) {
    const int d = P.algebra.dim, m = P.rep.module_dim;
    require_compatible(P.algebra, P.rep);
    require_dims(dd.d == d && dd.m == m, "deformation data is for different dimensions");
    require_dims(dd.phi.shape() == std::vector<int>{d, d, d}, "phi shape");
    require_dims(dd.phi1.shape() == std::vector<int>{d, d, d, d}, "phi1 shape");
    require_dims(dd.phi2.shape() == std::vector<int>{d, d, d, d}, "phi2 shape");
    require_dims(static_cast<int>(dd.varrho.size()) == d, "varrho length");
    for (const auto& r : dd.varrho) require_dims(r.rows() == m && r.cols() == m, "varrho matrix shape");
    for (const auto* t : {&dd.varpi1, &dd.varpi2}) {
        require_dims(t->n == d && static_cast<int>(t->m.size()) == d * d, "varpi table length");
        for (const auto& r : t->m) require_dims(r.rows() == m && r.cols() == m, "varpi matrix shape");
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                if (dd.phi(i, j, k) != -dd.phi(j, i, k)) fail(ErrorKind::NotSkew, "phi is not antisymmetric");
                for (int l = 0; l < d; ++l)
                    if (dd.phi1(i, j, k, l) != -dd.phi1(j, i, k, l) || dd.phi2(i, j, k, l) != -dd.phi2(j, i, k, l))
                        fail(ErrorKind::NotSkew, "phi1/phi2 are not antisymmetric in their first two slots");
            }
}

LieYRepPair<Rational> top_order_pair(const DeformationData& dd) {
    LieYRepPair<Rational> Q{Algebra<Rational>(dd.d), Representation<Rational>(dd.d, dd.m)};
    Q.algebra.binary = dd.phi;
    Q.algebra.ternary = dd.phi2;
    Q.rep.rho = dd.varrho;
    Q.rep.mu = dd.varpi2;
    return Q;
}

LieYRepPair<Poly> deformed_pair(const LieYRepPair<Rational>& P, const DeformationData& dd) {
    require_compatible(P, dd);
    const int d = P.algebra.dim, m = P.rep.module_dim;
    const Poly t = Poly::t(), t2 = t * t;
    LieYRepPair<Poly> Q{to_poly(P.algebra), to_poly(P.rep)};
    for (size_t i = 0; i < dd.phi.size(); ++i) Q.algebra.binary.data()[i] += t * Poly(dd.phi.data()[i]);
    for (size_t i = 0; i < dd.phi1.size(); ++i)
        Q.algebra.ternary.data()[i] += t * Poly(dd.phi1.data()[i]) + t2 * Poly(dd.phi2.data()[i]);
    for (int i = 0; i < d; ++i) Q.rep.rho[i] += t * to_poly(dd.varrho[i]);
    for (int k = 0; k < d * d; ++k)
        Q.rep.mu.m[k] += t * to_poly(dd.varpi1.m[k]) + t2 * to_poly(dd.varpi2.m[k]);
    (void)m;
    return Q;
}

OpTable<Rational> deformation_D1(const LieYRepPair<Rational>& P, const DeformationData& dd) {
    require_compatible(P, dd);
    const int d = P.algebra.dim, m = P.rep.module_dim;
    OpTable<Rational> out(d, m);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out.at(i, j) = dd.varpi1.at(j, i) - dd.varpi1.at(i, j) + commutator(P.rep.rho[i], dd.varrho[j]) +
                           commutator(dd.varrho[i], P.rep.rho[j]) -
                           op_of(dd.varrho, m, bracket(P.algebra, E(d, i), E(d, j))) -
                           op_of(P.rep.rho, m, apply_phi(dd, E(d, i), E(d, j)));
    return out;
}

Report linear_deformation_report(const LieYRepPair<Rational>& P, const DeformationData& dd) {
    LieYRepPair<Poly> Q = deformed_pair(P, dd);
    Report rep;
    rep.subject = "linear deformation (all coefficients of t)";
    rep.absorb(check_axioms(Q.algebra));
    rep.absorb(check_representation(Q.algebra, Q.rep));
    return rep;
}

bool is_linear_deformation(const LieYRepPair<Rational>& P, const DeformationData& dd) {
    return linear_deformation_report(P, dd).ok();
}

PairCochain deformation_cocycle(const LieYRepPair<Rational>& P, const DeformationData& dd) {
    LieYRepPair<Poly> Q = deformed_pair(P, dd);
    Algebra<Rational> lin = t_coefficient(semidirect(Q.algebra, Q.rep, false), 1);
    const int N = lin.dim;
    WedgeBasis wb(N);
    YamagutiCochain y = ycochain_zero(N, N, 2);
    for (int w = 0; w < wb.size(); ++w) {
        auto [a, b] = wb.pairs[w];
        for (int o = 0; o < N; ++o) y.f[static_cast<size_t>(w) * N + o] = lin.binary(a, b, o);
        for (int c = 0; c < N; ++c)
            for (int o = 0; o < N; ++o)
                y.g[(static_cast<size_t>(w) * N + c) * N + o] = lin.ternary(a, b, c, o);
    }
    PairComplex cx(P);
    PairCochain out = cx.project(y);
    if (!is_linear_deformation(P, dd)) return out;
    if (!cx.delta_lifted(out).is_zero())
        fail(ErrorKind::ConsequenceViolated, "cocycle of a linear deformation is not Delta-closed");
    return out;
}

Report deformation_pair_report(const DeformationData& dd) {
    LieYRepPair<Rational> Q = top_order_pair(dd);
    Report rep;
    rep.subject = "top-order pair (phi, phi2; varrho, varpi2)";
    rep.absorb(check_axioms(Q.algebra));
    // The representation conditions presuppose an antisymmetric bracket.
    if (rep.ok()) rep.absorb(check_representation(Q.algebra, Q.rep));
    return rep;
}

bool is_deformation_of_pair(const LieYRepPair<Rational>& P, const DeformationData& dd) {
    require_compatible(P, dd);
    return deformation_pair_report(dd).ok();
}

OpTable<Rational> hat_D_closed_form(const LieYRepPair<Rational>& P, const Matrix<Rational>& N,
                                    const Matrix<Rational>& S) {
    check_shapes(P, N, S);
    const int d = P.algebra.dim, m = P.rep.module_dim;
    OpTable<Rational> D = derived_D(P.algebra, P.rep);
    OpTable<Rational> out(d, m);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            RV x = E(d, i), y = E(d, j), Nx = N.apply(x), Ny = N.apply(y);
            RM a = D.of(Nx, y), b = D.of(x, Ny), c = D.at(i, j);
            out.at(i, j) = a * S + b * S + D.of(Nx, Ny) - S * (a + b + c * S) + S * S * c;
        }
    return out;
}

Report nijenhuis_structure_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& N,
                                  const Matrix<Rational>& S) {
    check_shapes(P, N, S);
    const int d = P.algebra.dim, m = P.rep.module_dim;
    Report rep;
    rep.subject = "Nijenhuis structure";
    rep.absorb(nijenhuis_report(P.algebra, N));
    NSTerms t = ns_terms(P, N, S);
    rep.add(scan_tuples<Rational>("nijenhuis-rho", "rho(Nx) S = S (rho(Nx) + rho(x) S - S rho(x))", {d},
                                  [&](const std::vector<int>& q) {
                                      return flat(P.rep.rho_of(N.apply(E(d, q[0]))) * S - S * t.varrho[q[0]]);
                                  }));
    rep.add(scan_tuples<Rational>(
        "nijenhuis-mu",
        "mu(Nx,Ny) S = S (mu(Nx,y)S + mu(x,Ny)S + mu(Nx,Ny)) - S^2 (mu(Nx,y) + mu(x,Ny) + mu(x,y)S) + S^3 mu(x,y)",
        {d, d}, [&](const std::vector<int>& q) {
            RV Nx = N.apply(E(d, q[0])), Ny = N.apply(E(d, q[1]));
            return flat(P.rep.mu_of(Nx, Ny) * S - S * t.varpi2.at(q[0], q[1]));
        }));
    if (rep.ok()) {
        // Consequence: the same identity for D.
        OpTable<Rational> D = derived_D(P.algebra, P.rep);
        OpTable<Rational> Dhat = hat_D_closed_form(P, N, S);
        Check c = scan_tuples<Rational>(
            "nijenhuis-D",
            "D(Nx,Ny) S = S (D(Nx,y)S + D(x,Ny)S + D(Nx,Ny)) - S^2 (D(Nx,y) + D(x,Ny) + D(x,y)S) + S^3 D(x,y)",
            {d, d}, [&](const std::vector<int>& q) {
                RV Nx = N.apply(E(d, q[0])), Ny = N.apply(E(d, q[1]));
                return flat(D.of(Nx, Ny) * S - S * Dhat.at(q[0], q[1]));
            });
        if (!c.passed())
            fail(ErrorKind::ConsequenceViolated,
                 "the D-identity of a Nijenhuis structure fails although its defining conditions hold");
        rep.add(c);
    }
    (void)m;
    return rep;
}

bool is_nijenhuis_structure(const LieYRepPair<Rational>& P, const Matrix<Rational>& N, const Matrix<Rational>& S) {
    return nijenhuis_structure_report(P, N, S).ok();
}

NijenhuisStructure NijenhuisStructure::make(const LieYRepPair<Rational>& P, const Matrix<Rational>& N,
                                            const Matrix<Rational>& S) {
    Report r = nijenhuis_structure_report(P, N, S);
    if (!r.ok()) fail(ErrorKind::NotNijenhuis, "(N, S) is not a Nijenhuis structure:\n" + r.text());
    return NijenhuisStructure(N, S);
}

namespace {

void require_belongs(const LieYRepPair<Rational>& P, const NijenhuisStructure& ns) {
    if (ns.n_map().rows() != P.algebra.dim || ns.s_map().rows() != P.rep.module_dim ||
        !is_nijenhuis_structure(P, ns.n_map(), ns.s_map()))
        fail(ErrorKind::NotNijenhuis, "the Nijenhuis structure was validated for a different pair");
}

}  // namespace

DeformationData trivial_deformation_from(const LieYRepPair<Rational>& P, const NijenhuisStructure& ns) {
    require_belongs(P, ns);
    const RM& N = ns.n_map();
    const RM& S = ns.s_map();
    const Algebra<Rational>& A = P.algebra;
    const int d = A.dim, m = P.rep.module_dim;
    DeformationData dd = deformation_zero(d, m);
    auto M = [&](const RV& x) { return N.apply(x); };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            RV x = E(d, i), y = E(d, j);
            RV p = bracket(A, M(x), y) + bracket(A, x, M(y)) - M(bracket(A, x, y));
            for (int k = 0; k < d; ++k) dd.phi(i, j, k) = p[k];
            for (int k = 0; k < d; ++k) {
                RV z = E(d, k);
                RV p1 = triple(A, M(x), y, z) + triple(A, x, M(y), z) + triple(A, x, y, M(z)) - M(triple(A, x, y, z));
                RV p2 = triple(A, M(x), M(y), z) + triple(A, x, M(y), M(z)) + triple(A, M(x), y, M(z)) - M(p1);
                for (int l = 0; l < d; ++l) {
                    dd.phi1(i, j, k, l) = p1[l];
                    dd.phi2(i, j, k, l) = p2[l];
                }
            }
        }
    NSTerms t = ns_terms(P, N, S);
    dd.varrho = t.varrho;
    dd.varpi1 = t.varpi1;
    dd.varpi2 = t.varpi2;
    return dd;
}

Matrix<Rational> semidirect_nijenhuis(const LieYRepPair<Rational>& P, const NijenhuisStructure& ns) {
    require_belongs(P, ns);
    const int d = P.algebra.dim, m = P.rep.module_dim;
    RM out(d + m, d + m);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = ns.n_map()(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out(d + i, d + j) = ns.s_map()(i, j);
    if (!is_nijenhuis(semidirect(P.algebra, P.rep), out))
        fail(ErrorKind::ConsequenceViolated, "N + S is not Nijenhuis on the semidirect product");
    return out;
}

Representation<Rational> hat_rep(const LieYRepPair<Rational>& P, const NijenhuisStructure& ns) {
    require_belongs(P, ns);
    const int d = P.algebra.dim, m = P.rep.module_dim;
    NSTerms t = ns_terms(P, ns.n_map(), ns.s_map());
    Representation<Rational> out(d, m);
    out.rho = t.varrho;
    out.mu = t.varpi2;
    if (derived_D(deformed_algebra(P.algebra, ns.n_map()), out) != hat_D_closed_form(P, ns.n_map(), ns.s_map()))
        fail(ErrorKind::ConsequenceViolated, "derived D of the hat representation disagrees with its closed form");
    return out;
}

Report equivalence_report(const LieYRepPair<Rational>& P, const DeformationData& from, const DeformationData& to,
                          const Matrix<Rational>& N, const Matrix<Rational>& S) {
    check_shapes(P, N, S);
    const int d = P.algebra.dim, m = P.rep.module_dim;
    LieYRepPair<Poly> F = deformed_pair(P, from), T = deformed_pair(P, to);
    const Poly t = Poly::t();
    Matrix<Poly> TN = Matrix<Poly>::identity(d) + t * to_poly(N);
    Matrix<Poly> TS = Matrix<Poly>::identity(m) + t * to_poly(S);
    OpTable<Poly> DF = derived_D(F.algebra, F.rep), DT = derived_D(T.algebra, T.rep);
    auto Ep = [&](int i) { return unit_vec<Poly>(d, i); };
    auto X = [&](int i) { return TN.apply(Ep(i)); };

    Report rep;
    rep.subject = "equivalence of deformations via (Id + tN, Id + tS)";
    rep.add(scan_tuples<Poly>("equiv-bracket", "(Id+tN)[x,y]_t = [(Id+tN)x,(Id+tN)y]'_t", {d, d},
                              [&](const std::vector<int>& q) {
                                  return TN.apply(bracket(F.algebra, Ep(q[0]), Ep(q[1]))) -
                                         bracket(T.algebra, X(q[0]), X(q[1]));
                              }));
    rep.add(scan_tuples<Poly>("equiv-triple", "(Id+tN)<<x,y,z>>_t = <<(Id+tN)x,(Id+tN)y,(Id+tN)z>>'_t", {d, d, d},
                              [&](const std::vector<int>& q) {
                                  return TN.apply(triple(F.algebra, Ep(q[0]), Ep(q[1]), Ep(q[2]))) -
                                         triple(T.algebra, X(q[0]), X(q[1]), X(q[2]));
                              }));
    rep.add(scan_tuples<Poly>("equiv-rho", "(Id+tS) rho_t(x) = rho'_t((Id+tN)x) (Id+tS)", {d},
                              [&](const std::vector<int>& q) {
                                  return flat(TS * F.rep.rho[q[0]] - T.rep.rho_of(X(q[0])) * TS);
                              }));
    rep.add(scan_tuples<Poly>("equiv-mu", "(Id+tS) mu_t(x,y) = mu'_t((Id+tN)x,(Id+tN)y) (Id+tS)", {d, d},
                              [&](const std::vector<int>& q) {
                                  return flat(TS * F.rep.mu.at(q[0], q[1]) - T.rep.mu_of(X(q[0]), X(q[1])) * TS);
                              }));
    rep.add(scan_tuples<Poly>("equiv-D", "(Id+tS) D_t(x,y) = D'_t((Id+tN)x,(Id+tN)y) (Id+tS)", {d, d},
                              [&](const std::vector<int>& q) {
                                  return flat(TS * DF.at(q[0], q[1]) - DT.of(X(q[0]), X(q[1])) * TS);
                              }));
    return rep;
}

bool are_equivalent_deformations(const LieYRepPair<Rational>& P, const DeformationData& from,
                                 const DeformationData& to, const Matrix<Rational>& N, const Matrix<Rational>& S) {
    return equivalence_report(P, from, to, N, S).ok();
}

PairCochain pair_cochain_of(const Matrix<Rational>& N, const Matrix<Rational>& S) {
    require_dims(N.is_square() && S.is_square(), "N and S must be square");
    const int d = N.rows(), m = S.rows();
    PairCochain c = pair_cochain_zero(d, m, 1);
    for (int a = 0; a < d; ++a)
        for (int o = 0; o < d; ++o) c.at("f1", {a}, o) = N(o, a);
    for (int b = 0; b < m; ++b)
        for (int o = 0; o < m; ++o) c.at("f2", {b}, o) = S(o, b);
    return c;
}

}  // namespace lya
