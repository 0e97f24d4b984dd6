#include "lya/quadratic.hpp"

#include "lya/linalg.hpp"

namespace lya {

namespace {

using RM = Matrix<Rational>;
using RV = Vec<Rational>;

RV E(int n, int i) { return unit_vec<Rational>(n, i); }

// ad_x, R(x,y) : z -> <<z,x,y>> and L(x,y) : z -> <<x,y,z>> on basis elements.
RM ad(const Algebra<Rational>& A, int x) {
    const int n = A.dim;
    RM m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m(l, k) = A.binary(x, k, l);
    return m;
}
RM right_mult(const Algebra<Rational>& A, int x, int y) {
    const int n = A.dim;
    RM m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m(l, k) = A.ternary(k, x, y, l);
    return m;
}
RM left_mult(const Algebra<Rational>& A, int x, int y) {
    const int n = A.dim;
    RM m(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m(l, k) = A.ternary(x, y, k, l);
    return m;
}

Rational dot(const RV& x, const RV& y) {
    Rational s;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

bool is_symmetric(const RM& b) { return b.is_square() && b == b.transpose(); }
bool is_skew(const RM& m) { return m.is_square() && m == -m.transpose(); }

void require_square(const RM& m, int n, const std::string& what) {
    require_dims(m.rows() == n && m.cols() == n, what + " must be a dim(g) x dim(g) matrix");
}

LieYRepPair<Rational> adjoint_pair(const Algebra<Rational>& A) { return {A, adjoint_rep(A)}; }
LieYRepPair<Rational> coadjoint_pair(const Algebra<Rational>& A) { return {A, coadjoint_rep(A)}; }

}  // namespace

Report invariant_form_report(const Algebra<Rational>& A, const Matrix<Rational>& b) {
    const int n = A.dim;
    require_square(b, n, "the form");
    if (!is_symmetric(b)) fail(ErrorKind::NotSymmetric, "the bilinear form is not symmetric");
    auto B = [&](const RV& x, const RV& y) { return RV{dot(x, b.apply(y))}; };
    Report rep;
    rep.subject = "invariant form";
    rep.add(scan_tuples<Rational>("invariance-bracket", "B([x,y],z) = -B(y,[x,z])", {n, n, n},
                                  [&](const std::vector<int>& t) {
                                      RV x = E(n, t[0]), y = E(n, t[1]), z = E(n, t[2]);
                                      return B(bracket(A, x, y), z) + B(y, bracket(A, x, z));
                                  }));
    rep.add(scan_tuples<Rational>("invariance-triple", "B(<<x,y,z>>,w) = B(x,<<w,z,y>>)", {n, n, n, n},
                                  [&](const std::vector<int>& t) {
                                      RV x = E(n, t[0]), y = E(n, t[1]), z = E(n, t[2]), w = E(n, t[3]);
                                      return B(triple(A, x, y, z), w) - B(x, triple(A, w, z, y));
                                  }));
    const int r = rank(b);
    if (r == n)
        rep.add(passing("nondegenerate", "rank b = dim g"));
    else
        rep.add(failing("nondegenerate", "rank b = dim g", Witness{{}, {std::to_string(r)}, std::nullopt},
                        "rank " + std::to_string(r) + " < " + std::to_string(n)));
    return rep;
}

bool is_invariant_form(const Algebra<Rational>& A, const Matrix<Rational>& b) {
    return invariant_form_report(A, b).ok();
}

QuadraticForm QuadraticForm::make(const Algebra<Rational>& A, const Matrix<Rational>& b) {
    Report r = invariant_form_report(A, b);
    if (!r.at("nondegenerate").passed()) fail(ErrorKind::Singular, "the form is degenerate");
    if (!r.ok()) fail(ErrorKind::PreconditionFailed, "the form is not invariant:\n" + r.text());
    return QuadraticForm(A, b, invert(b));
}

Report transport_report(const Algebra<Rational>& A, const Matrix<Rational>& b) {
    // B^# X = Y B^#  <=>  X b = b Y, which needs no inverse.
    const int n = A.dim;
    require_square(b, n, "the form");
    Report rep;
    rep.subject = "transport identities (form b)";
    rep.add(scan_tuples<Rational>("transport-ad", "B^#(ad*_x a) = ad_x(B^# a)", {n}, [&](const std::vector<int>& t) {
        RM adx = ad(A, t[0]);
        return flat(RM(-adx.transpose()) * b - b * adx);
    }));
    rep.add(scan_tuples<Rational>("transport-R", "-B^#(R*(y,x) a) = R(x,y)(B^# a)", {n, n},
                                  [&](const std::vector<int>& t) {
                                      RM Rs = -right_mult(A, t[1], t[0]).transpose();
                                      return flat(RM(-Rs) * b - b * right_mult(A, t[0], t[1]));
                                  }));
    rep.add(scan_tuples<Rational>("transport-L", "B^#(L*(x,y) a) = L(x,y)(B^# a)", {n, n},
                                  [&](const std::vector<int>& t) {
                                      RM Ls = -left_mult(A, t[0], t[1]).transpose();
                                      return flat(Ls * b - b * left_mult(A, t[0], t[1]));
                                  }));
    return rep;
}

Report invariance_transport(const QuadraticForm& qf) {
    const Algebra<Rational>& A = qf.algebra();
    const RM& Bs = qf.b_sharp();
    const int n = A.dim;
    Report rep;
    rep.subject = "transport identities";
    rep.add(scan_tuples<Rational>("transport-ad", "B^#(ad*_x a) = ad_x(B^# a)", {n}, [&](const std::vector<int>& t) {
        RM adx = ad(A, t[0]);
        return flat(Bs * RM(-adx.transpose()) - adx * Bs);
    }));
    rep.add(scan_tuples<Rational>("transport-R", "-B^#(R*(y,x) a) = R(x,y)(B^# a)", {n, n},
                                  [&](const std::vector<int>& t) {
                                      RM Rs = -right_mult(A, t[1], t[0]).transpose();
                                      return flat(RM(-(Bs * Rs)) - right_mult(A, t[0], t[1]) * Bs);
                                  }));
    rep.add(scan_tuples<Rational>("transport-L", "B^#(L*(x,y) a) = L(x,y)(B^# a)", {n, n},
                                  [&](const std::vector<int>& t) {
                                      RM Ls = -left_mult(A, t[0], t[1]).transpose();
                                      return flat(Bs * Ls - left_mult(A, t[0], t[1]) * Bs);
                                  }));
    if (!rep.ok()) fail(ErrorKind::ConsequenceViolated, rep.text());
    return rep;
}

Matrix<Rational> pi_sharp(const Matrix<Rational>& pi) {
    if (!is_skew(pi)) fail(ErrorKind::NotSkew, "pi is not skew-symmetric");
    return pi.transpose();
}

bool is_r_matrix(const Algebra<Rational>& A, const Matrix<Rational>& pi) {
    require_square(pi, A.dim, "pi");
    return is_relative_rb(coadjoint_pair(A), pi_sharp(pi));
}

ClassicalRMatrix ClassicalRMatrix::make(const Algebra<Rational>& A, const Matrix<Rational>& pi) {
    require_square(pi, A.dim, "pi");
    RM ps = lya::pi_sharp(pi);
    Report r = relative_rb_report(coadjoint_pair(A), ps);
    if (!r.ok()) fail(ErrorKind::PreconditionFailed, "pi is not an r-matrix:\n" + r.text());
    return ClassicalRMatrix(pi, ps);
}

namespace {

// First entry where lhs and rhs differ, as a located check.
Check entrywise(const std::string& name, const std::string& rule, const RM& lhs, const RM& rhs) {
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j)
            if (lhs(i, j) != rhs(i, j))
                return failing(name, rule, Witness{{i, j}, {(lhs(i, j) - rhs(i, j)).str()}, std::nullopt});
    return passing(name, rule);
}

}  // namespace

Report skew_endomorphism_report(const QuadraticForm& qf, const Matrix<Rational>& R) {
    require_square(R, qf.algebra().dim, "R");
    RM rb = R * qf.b_sharp();
    Report rep;
    rep.subject = "skew-symmetric endomorphism";
    rep.add(entrywise("skew", "(R B^#)_ij = -(R B^#)_ji", rb, -rb.transpose()));
    return rep;
}

bool is_skew_endomorphism(const QuadraticForm& qf, const Matrix<Rational>& R) {
    return skew_endomorphism_report(qf, R).ok();
}

Report form_compatibility_report(const QuadraticForm& qf, const Matrix<Rational>& N) {
    require_square(N, qf.algebra().dim, "N");
    Report rep;
    rep.subject = "compatibility of B and N";
    rep.add(entrywise("B-N compatible", "B^# N* = N B^#", qf.b_sharp() * N.transpose(), N * qf.b_sharp()));
    return rep;
}

bool form_compatible(const QuadraticForm& qf, const Matrix<Rational>& N) {
    return form_compatibility_report(qf, N).ok();
}

Report rb_nijenhuis_report(const Algebra<Rational>& A, const Matrix<Rational>& R, const Matrix<Rational>& N) {
    Report rep = rbn_report(adjoint_pair(A), R, N, N);
    rep.subject = "Rota-Baxter-Nijenhuis structure";
    return rep;
}

bool is_rb_nijenhuis(const Algebra<Rational>& A, const Matrix<Rational>& R, const Matrix<Rational>& N) {
    return rb_nijenhuis_report(A, R, N).ok();
}

Report rmatrix_nijenhuis_report(const Algebra<Rational>& A, const Matrix<Rational>& pi, const Matrix<Rational>& N) {
    require_square(pi, A.dim, "pi");
    require_square(N, A.dim, "N");
    RM ps = pi_sharp(pi);
    LieYRepPair<Rational> co = coadjoint_pair(A);
    Report rep;
    rep.subject = "r-matrix-Nijenhuis structure";
    rep.absorb(relative_rb_report(co, ps), "pi^# ");
    rep.absorb(nijenhuis_report(A, N), "N ");
    rep.absorb(on_conditions_report(co, ps, N.transpose(), N));
    return rep;
}

bool is_rmatrix_nijenhuis(const Algebra<Rational>& A, const Matrix<Rational>& pi, const Matrix<Rational>& N) {
    return rmatrix_nijenhuis_report(A, pi, N).ok();
}

Report dual_nijenhuis_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& N, const Matrix<Rational>& S) {
    const Algebra<Rational>& A = P.algebra;
    const Representation<Rational>& R = P.rep;
    require_compatible(A, R);
    const int n = A.dim, m = R.module_dim;
    require_square(N, n, "N");
    require_dims(S.rows() == m && S.cols() == m, "S must be a dim(V) x dim(V) matrix");
    Report rep;
    rep.subject = "dual Nijenhuis structure";
    LieYRepPair<Rational> dual{A, dual_rep(R)};
    rep.absorb(nijenhuis_structure_report(dual, N, S.transpose()), "dual pair: ");

    rep.absorb(nijenhuis_report(A, N), "direct: ");
    const RM S2 = S * S, S3 = S2 * S;
    auto Nx = [&](int i) { return N.apply(E(n, i)); };
    rep.add(scan_tuples<Rational>("direct: dual-rho", "rho(Nx)S = S(rho(Nx) - rho(x)S) + rho(x)S^2", {n},
                                  [&](const std::vector<int>& t) {
                                      RM rN = R.rho_of(Nx(t[0]));
                                      const RM& r = R.rho[t[0]];
                                      return flat(rN * S - S * (rN - r * S) - r * S2);
                                  }));
    rep.add(scan_tuples<Rational>(
        "direct: dual-mu",
        "mu(Nx,Ny)S = S(mu(Nx,Ny) - mu(Nx,y)S - mu(x,Ny)S + mu(x,y)S^2) + mu(Nx,y)S^2 + mu(x,Ny)S^2 - mu(x,y)S^3",
        {n, n}, [&](const std::vector<int>& t) {
            RV x = E(n, t[0]), y = E(n, t[1]);
            RM mNN = R.mu_of(Nx(t[0]), Nx(t[1]));
            RM mNy = R.mu_of(Nx(t[0]), y);
            RM mxN = R.mu_of(x, Nx(t[1]));
            const RM& mxy = R.mu.at(t[0], t[1]);
            return flat(mNN * S - S * (mNN - mNy * S - mxN * S + mxy * S2) - mNy * S2 - mxN * S2 + mxy * S3);
        }));
    return rep;
}

bool is_dual_nijenhuis(const LieYRepPair<Rational>& P, const Matrix<Rational>& N, const Matrix<Rational>& S) {
    Report r = dual_nijenhuis_report(P, N, S);
    bool dual_route = true, direct_route = true;
    for (const Check& c : r.checks) {
        if (c.name.rfind("dual pair: ", 0) == 0) dual_route = dual_route && c.passed();
        if (c.name.rfind("direct: ", 0) == 0) direct_route = direct_route && c.passed();
    }
    if (dual_route != direct_route)
        fail(ErrorKind::DualRouteDisagreement,
             std::string("dual-pair route says ") + (dual_route ? "true" : "false") + ", direct route says " +
                 (direct_route ? "true" : "false") + ":\n" + r.text());
    return dual_route;
}

Report rb_dual_nijenhuis_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                                const Matrix<Rational>& N) {
    Report on = on_conditions_report(P, T, S, N);
    Report rep;
    rep.subject = "relative Rota-Baxter-dual-Nijenhuis structure";
    rep.absorb(relative_rb_report(P, T), "T ");
    rep.absorb(dual_nijenhuis_report(P, N, S), "(N,S) ");
    rep.absorb(on);
    return rep;
}

bool is_rb_dual_nijenhuis(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                          const Matrix<Rational>& N) {
    // Route agreement is enforced by is_dual_nijenhuis.
    return is_relative_rb(P, T) && is_dual_nijenhuis(P, N, S) && on_conditions_report(P, T, S, N).ok();
}

ClassicalRMatrix rbn_to_rmn(const QuadraticForm& qf, const Matrix<Rational>& R, const Matrix<Rational>& N) {
    const Algebra<Rational>& A = qf.algebra();
    require_square(R, A.dim, "R");
    require_square(N, A.dim, "N");
    Report rbn = rb_nijenhuis_report(A, R, N);
    if (!rbn.ok())
        fail(ErrorKind::PreconditionFailed, "(R, N) is not a Rota-Baxter-Nijenhuis structure:\n" + rbn.text());
    if (!is_skew_endomorphism(qf, R))
        fail(ErrorKind::PreconditionFailed, "R is not a skew-symmetric endomorphism of (g, B)");
    if (!form_compatible(qf, N)) fail(ErrorKind::PreconditionFailed, "B and N are not compatible: B^# N* != N B^#");
    RM ps = R * qf.b_sharp();
    RM pi = ps.transpose();
    Report rmn = rmatrix_nijenhuis_report(A, pi, N);
    if (!rmn.ok())
        fail(ErrorKind::ConsequenceViolated, "R B^# does not give an r-matrix-Nijenhuis structure:\n" + rmn.text());
    return ClassicalRMatrix::make(A, pi);
}

Matrix<Rational> rmn_to_rbn(const QuadraticForm& qf, const Matrix<Rational>& pi, const Matrix<Rational>& N) {
    const Algebra<Rational>& A = qf.algebra();
    require_square(pi, A.dim, "pi");
    require_square(N, A.dim, "N");
    Report rmn = rmatrix_nijenhuis_report(A, pi, N);
    if (!rmn.ok())
        fail(ErrorKind::PreconditionFailed, "(pi, N) is not an r-matrix-Nijenhuis structure:\n" + rmn.text());
    if (!form_compatible(qf, N)) fail(ErrorKind::PreconditionFailed, "B and N are not compatible: B^# N* != N B^#");
    // (B^#)^{-1} = b.
    RM R = pi_sharp(pi) * qf.b();
    Report rbn = rb_nijenhuis_report(A, R, N);
    if (!rbn.ok())
        fail(ErrorKind::ConsequenceViolated, "pi^# (B^#)^{-1} is not Rota-Baxter-Nijenhuis:\n" + rbn.text());
    if (rbn_to_rmn(qf, R, N).pi() != pi) fail(ErrorKind::ConsequenceViolated, "round trip does not return pi");
    return R;
}

}  // namespace lya
