#include "lya/rota_baxter.hpp"

#include "lya/linalg.hpp"

namespace lya {

namespace {

using RM = Matrix<Rational>;
using RV = Vec<Rational>;

RV E(int n, int i) { return unit_vec<Rational>(n, i); }

void check_t_shape(const LieYRepPair<Rational>& P, const RM& T) {
    require_compatible(P.algebra, P.rep);
    require_dims(T.rows() == P.algebra.dim && T.cols() == P.rep.module_dim,
                 "T must be a dim(g) x dim(V) matrix");
}

// Evaluates rho, mu, D of a pair on g-vectors.
struct RepEval {
    const LieYRepPair<Rational>& P;
    OpTable<Rational> D;
    explicit RepEval(const LieYRepPair<Rational>& p) : P(p), D(derived_D(p.algebra, p.rep)) {}
    RM rho(const RV& x) const { return P.rep.rho_of(x); }
    RM mu(const RV& x, const RV& y) const { return P.rep.mu_of(x, y); }
    RM d(const RV& x, const RV& y) const { return D.of(x, y); }
};

bool same_pair(const LieYRepPair<Rational>& a, const LieYRepPair<Rational>& b) {
    return a.algebra.dim == b.algebra.dim && a.algebra.binary == b.algebra.binary &&
           a.algebra.ternary == b.algebra.ternary && a.rep == b.rep;
}

Check tensor_agreement(const std::string& name, const std::string& rule, const Algebra<Rational>& A,
                       const Algebra<Rational>& B) {
    const int n = A.dim;
    return scan_tuples<Rational>(name, rule, {n, n}, [&](const std::vector<int>& t) {
        RV r(n);
        for (int l = 0; l < n; ++l) r[l] = A.binary(t[0], t[1], l) - B.binary(t[0], t[1], l);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) r.push_back(A.ternary(t[0], t[1], k, l) - B.ternary(t[0], t[1], k, l));
        return r;
    });
}

}  // namespace

Report relative_rb_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T) {
    check_t_shape(P, T);
    const int m = P.rep.module_dim;
    const Algebra<Rational>& A = P.algebra;
    RepEval R(P);
    auto Tm = [&](const RV& u) { return T.apply(u); };
    Report rep;
    rep.subject = "relative Rota-Baxter operator";
    rep.add(scan_tuples<Rational>("rb-bracket", "[Tu,Tv] = T(rho(Tu)v - rho(Tv)u)", {m, m},
                                  [&](const std::vector<int>& t) {
                                      RV u = E(m, t[0]), v = E(m, t[1]);
                                      return bracket(A, Tm(u), Tm(v)) -
                                             Tm(R.rho(Tm(u)).apply(v) - R.rho(Tm(v)).apply(u));
                                  }));
    rep.add(scan_tuples<Rational>(
        "rb-triple", "<<Tu,Tv,Tw>> = T(D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v)", {m, m, m},
        [&](const std::vector<int>& t) {
            RV u = E(m, t[0]), v = E(m, t[1]), w = E(m, t[2]);
            RV Tu = Tm(u), Tv = Tm(v), Tw = Tm(w);
            return triple(A, Tu, Tv, Tw) -
                   Tm(R.d(Tu, Tv).apply(w) + R.mu(Tv, Tw).apply(u) - R.mu(Tu, Tw).apply(v));
        }));
    return rep;
}

bool is_relative_rb(const LieYRepPair<Rational>& P, const Matrix<Rational>& T) {
    return relative_rb_report(P, T).ok();
}

Algebra<Rational> induced_brackets(const LieYRepPair<Rational>& P, const Matrix<Rational>& T) {
    check_t_shape(P, T);
    const int m = P.rep.module_dim;
    RepEval R(P);
    std::vector<RV> Te(m);
    for (int i = 0; i < m; ++i) Te[i] = T.col(i);
    Algebra<Rational> out(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            RV u = E(m, i), v = E(m, j);
            RV b = R.rho(Te[i]).apply(v) - R.rho(Te[j]).apply(u);
            for (int l = 0; l < m; ++l) out.binary(i, j, l) = b[l];
            RM Dij = R.d(Te[i], Te[j]);
            for (int k = 0; k < m; ++k) {
                RV w = E(m, k);
                RV c = Dij.apply(w) + R.mu(Te[j], Te[k]).apply(u) - R.mu(Te[i], Te[k]).apply(v);
                for (int l = 0; l < m; ++l) out.ternary(i, j, k, l) = c[l];
            }
        }
    return out;
}

RelativeRBOperator RelativeRBOperator::make(const LieYRepPair<Rational>& P, const Matrix<Rational>& T) {
    Report r = relative_rb_report(P, T);
    if (!r.ok()) fail(ErrorKind::PreconditionFailed, "T is not a relative Rota-Baxter operator:\n" + r.text());
    return RelativeRBOperator(P, T);
}

Algebra<Rational> subadjacent(const RelativeRBOperator& T) {
    Algebra<Rational> VT = induced_brackets(T.pair(), T.t_map());
    Report ax = check_axioms(VT);
    if (!ax.ok()) fail(ErrorKind::ConsequenceViolated, "sub-adjacent brackets are not Lie-Yamaguti:\n" + ax.text());
    Report hom = homomorphism_report(T.t_map(), VT, T.pair().algebra);
    if (!hom.ok())
        fail(ErrorKind::ConsequenceViolated, "T is not a homomorphism from the sub-adjacent algebra:\n" + hom.text());
    return VT;
}

PreLYProducts pre_ly_products(const RelativeRBOperator& T) {
    const LieYRepPair<Rational>& P = T.pair();
    const int m = P.rep.module_dim;
    std::vector<RV> Te(m);
    for (int i = 0; i < m; ++i) Te[i] = T.t_map().col(i);
    PreLYProducts out{Tensor<Rational>({m, m, m}), Tensor<Rational>({m, m, m, m})};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            RM rho = P.rep.rho_of(Te[i]);
            for (int l = 0; l < m; ++l) out.star(i, j, l) = rho(l, j);
            for (int k = 0; k < m; ++k) {
                // {e_i, e_j, e_k} = mu(T e_j, T e_k) e_i
                RM mu = P.rep.mu_of(Te[j], Te[k]);
                for (int l = 0; l < m; ++l) out.brace(i, j, k, l) = mu(l, i);
            }
        }

    auto star = [&](const RV& u, const RV& v) {
        RV r(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (u[i].is_zero() || v[j].is_zero()) continue;
                for (int l = 0; l < m; ++l) r[l] += u[i] * v[j] * out.star(i, j, l);
            }
        return r;
    };
    auto brace = [&](int a, int b, int c) {
        RV r(m);
        for (int l = 0; l < m; ++l) r[l] = out.brace(a, b, c, l);
        return r;
    };
    Algebra<Rational> VT = subadjacent(T);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            RV u = E(m, a), v = E(m, b);
            RV uv = star(u, v), vu = star(v, u);
            if (!vec_is_zero(bracket(VT, u, v) - (uv - vu)))
                fail(ErrorKind::ConsequenceViolated, "[u,v]^T differs from u*v - v*u");
            for (int c = 0; c < m; ++c) {
                RV w = E(m, c);
                RV rhs = brace(c, b, a) - brace(c, a, b) + star(u, star(v, w)) - star(v, star(u, w)) -
                         star(uv - vu, w) + brace(a, b, c) - brace(b, a, c);
                if (!vec_is_zero(triple(VT, u, v, w) - rhs))
                    fail(ErrorKind::ConsequenceViolated, "<<u,v,w>>^T differs from its pre-Lie-Yamaguti expansion");
            }
        }
    return out;
}

Algebra<Rational> s_deformed_brackets(const RelativeRBOperator& T, const Matrix<Rational>& S) {
    return deformed_algebra(induced_brackets(T.pair(), T.t_map()), S);
}

Algebra<Rational> hat_deformed_brackets(const RelativeRBOperator& T, const NijenhuisStructure& ns) {
    const LieYRepPair<Rational>& P = T.pair();
    LieYRepPair<Rational> hat{deformed_algebra(P.algebra, ns.n_map()), hat_rep(P, ns)};
    return induced_brackets(hat, T.t_map());
}

Report on_conditions_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                            const Matrix<Rational>& N) {
    check_t_shape(P, T);
    const int d = P.algebra.dim, m = P.rep.module_dim;
    require_dims(N.rows() == d && N.cols() == d, "N must be a dim(g) x dim(g) matrix");
    require_dims(S.rows() == m && S.cols() == m, "S must be a dim(V) x dim(V) matrix");
    Report rep;
    rep.subject = "conditions ON1-ON3";
    RM NT = N * T;
    rep.add(scan_tuples<Rational>("ON1", "N T u = T S u", {m}, [&](const std::vector<int>& t) {
        RV u = E(m, t[0]);
        return NT.apply(u) - T.apply(S.apply(u));
    }));
    Algebra<Rational> TS = deformed_algebra(induced_brackets(P, T), S);
    Algebra<Rational> BNT = induced_brackets(P, NT);
    rep.add(scan_tuples<Rational>("ON2", "[u,v]^T_S = [u,v]^{NT}", {m, m}, [&](const std::vector<int>& t) {
        RV u = E(m, t[0]), v = E(m, t[1]);
        return bracket(TS, u, v) - bracket(BNT, u, v);
    }));
    rep.add(scan_tuples<Rational>("ON3", "<<u,v,w>>^T_S = <<u,v,w>>^{NT}", {m, m, m},
                                  [&](const std::vector<int>& t) {
                                      RV u = E(m, t[0]), v = E(m, t[1]), w = E(m, t[2]);
                                      return triple(TS, u, v, w) - triple(BNT, u, v, w);
                                  }));
    return rep;
}

Report rbn_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                  const Matrix<Rational>& N) {
    Report on = on_conditions_report(P, T, S, N);
    Report rep;
    rep.subject = "relative Rota-Baxter-Nijenhuis structure";
    rep.absorb(relative_rb_report(P, T), "T ");
    rep.absorb(nijenhuis_structure_report(P, N, S), "(N,S) ");
    rep.absorb(on);
    return rep;
}

bool is_rbn(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
            const Matrix<Rational>& N) {
    return rbn_report(P, T, S, N).ok();
}

RBNTriple RBNTriple::make(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                          const Matrix<Rational>& N) {
    Report r = rbn_report(P, T, S, N);
    if (!r.ok())
        fail(ErrorKind::PreconditionFailed, "not a relative Rota-Baxter-Nijenhuis structure:\n" + r.text());
    return RBNTriple(RelativeRBOperator::make(P, T), NijenhuisStructure::make(P, N, S));
}

Report rbn_consequences(const RBNTriple& tr) {
    const LieYRepPair<Rational>& P = tr.pair();
    const RM& T = tr.t().t_map();
    const RM& S = tr.s_map();
    const RM& N = tr.n_map();
    Algebra<Rational> VT = subadjacent(tr.t());
    Algebra<Rational> VTS = s_deformed_brackets(tr.t(), S);
    Algebra<Rational> hat = hat_deformed_brackets(tr.t(), tr.ns());
    Algebra<Rational> gN = deformed_algebra(P.algebra, N);
    LieYRepPair<Rational> hat_pair{gN, hat_rep(P, tr.ns())};

    Report rep;
    rep.subject = "consequences of a relative Rota-Baxter-Nijenhuis structure";
    rep.absorb(nijenhuis_report(VT, S), "S on V^T ");
    rep.add(tensor_agreement("S-deformed = hat-deformed", "[,]^T_S = [,]^T_hat and <<>>^T_S = <<>>^T_hat", VTS, hat));
    rep.absorb(check_axioms(VTS), "V^T_S ");
    rep.absorb(relative_rb_report(hat_pair, T), "T on g_N ");
    rep.absorb(relative_rb_report(P, N * T), "NT on g ");
    rep.absorb(homomorphism_report(T, VTS, gN), "T: V^T_S -> g_N ");
    rep.absorb(homomorphism_report(S, VTS, VT), "S: V^T_S -> V^T ");
    rep.absorb(homomorphism_report(RM(N * T), VTS, P.algebra), "NT: V^T_S -> g ");
    rep.absorb(homomorphism_report(N, gN, P.algebra), "N: g_N -> g ");
    rep.absorb(homomorphism_report(T, VT, P.algebra), "T: V^T -> g ");
    if (!rep.ok()) fail(ErrorKind::ConsequenceViolated, rep.text());
    return rep;
}

Report strong_condition_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T,
                               const Matrix<Rational>& S) {
    check_t_shape(P, T);
    const int m = P.rep.module_dim;
    require_dims(S.rows() == m && S.cols() == m, "S must be a dim(V) x dim(V) matrix");
    RepEval R(P);
    Algebra<Rational> VT = induced_brackets(P, T);
    Report rep;
    rep.subject = "strong condition";
    rep.add(scan_tuples<Rational>(
        "strong", "D(Tu,Tv)Sw + mu(Tv,Tw)Su - mu(Tu,Tw)Sv = S<<u,v,w>>^T", {m, m, m},
        [&](const std::vector<int>& t) {
            RV u = E(m, t[0]), v = E(m, t[1]), w = E(m, t[2]);
            RV Tu = T.apply(u), Tv = T.apply(v), Tw = T.apply(w);
            return R.d(Tu, Tv).apply(S.apply(w)) + R.mu(Tv, Tw).apply(S.apply(u)) -
                   R.mu(Tu, Tw).apply(S.apply(v)) - S.apply(triple(VT, u, v, w));
        }));
    return rep;
}

bool strong_condition(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S) {
    return strong_condition_report(P, T, S).ok();
}

Report compatibility_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T1,
                            const Matrix<Rational>& T2) {
    check_t_shape(P, T1);
    check_t_shape(P, T2);
    const int m = P.rep.module_dim;
    const Algebra<Rational>& A = P.algebra;
    RepEval R(P);
    // rb_bracket(Ta, Tb)(u,v) = Ta(rho(Tb u)v - rho(Tb v)u)
    auto inner_bracket = [&](const RM& Ta, const RM& Tb, const RV& u, const RV& v) {
        return Ta.apply(R.rho(Tb.apply(u)).apply(v) - R.rho(Tb.apply(v)).apply(u));
    };
    // D(Ta u, Tb v)w + mu(Ta v, Tb w)u - mu(Ta u, Tb w)v
    auto inner_triple = [&](const RM& Ta, const RM& Tb, const RV& u, const RV& v, const RV& w) {
        return R.d(Ta.apply(u), Tb.apply(v)).apply(w) + R.mu(Ta.apply(v), Tb.apply(w)).apply(u) -
               R.mu(Ta.apply(u), Tb.apply(w)).apply(v);
    };
    Report rep;
    rep.subject = "compatibility of relative Rota-Baxter operators";
    rep.add(scan_tuples<Rational>(
        "compat-bracket",
        "[T1u,T2v] + [T2u,T1v] = T1(rho(T2u)v - rho(T2v)u) + T2(rho(T1u)v - rho(T1v)u)", {m, m},
        [&](const std::vector<int>& t) {
            RV u = E(m, t[0]), v = E(m, t[1]);
            return bracket(A, T1.apply(u), T2.apply(v)) + bracket(A, T2.apply(u), T1.apply(v)) -
                   inner_bracket(T1, T2, u, v) - inner_bracket(T2, T1, u, v);
        }));
    auto mixed_triple = [&](const RM& Ti, const RM& Tj) {
        return [&, Ti, Tj](const std::vector<int>& t) {
            RV u = E(m, t[0]), v = E(m, t[1]), w = E(m, t[2]);
            RV lhs = triple(A, Ti.apply(u), Ti.apply(v), Tj.apply(w)) +
                     triple(A, Ti.apply(u), Tj.apply(v), Ti.apply(w)) +
                     triple(A, Tj.apply(u), Ti.apply(v), Ti.apply(w));
            RV rhs = Ti.apply(inner_triple(Ti, Tj, u, v, w) + inner_triple(Tj, Ti, u, v, w)) +
                     Tj.apply(inner_triple(Ti, Ti, u, v, w));
            return lhs - rhs;
        };
    };
    const std::string rule =
        "<<Tiu,Tiv,Tjw>> + <<Tiu,Tjv,Tiw>> + <<Tju,Tiv,Tiw>> = Ti(D(Tiu,Tjv)w + mu(Tiv,Tjw)u - mu(Tiu,Tjw)v + "
        "D(Tju,Tiv)w + mu(Tjv,Tiw)u - mu(Tju,Tiw)v) + Tj(D(Tiu,Tiv)w + mu(Tiv,Tiw)u - mu(Tiu,Tiw)v)";
    rep.add(scan_tuples<Rational>("compat-triple-(1,2)", rule, {m, m, m}, mixed_triple(T1, T2)));
    rep.add(scan_tuples<Rational>("compat-triple-(2,1)", rule, {m, m, m}, mixed_triple(T2, T1)));
    return rep;
}

bool is_compatible_pair(const RelativeRBOperator& T1, const RelativeRBOperator& T2) {
    if (!same_pair(T1.pair(), T2.pair()))
        fail(ErrorKind::PreconditionFailed, "the operators belong to different pairs");
    const LieYRepPair<Rational>& P = T1.pair();
    bool closed = compatibility_report(P, T1.t_map(), T2.t_map()).ok();
    bool sampled = true;
    const int ks[3][2] = {{1, 1}, {1, -1}, {2, 3}};
    for (const auto& k : ks)
        sampled = sampled && is_relative_rb(P, Rational(k[0]) * T1.t_map() + Rational(k[1]) * T2.t_map());
    if (closed != sampled)
        fail(ErrorKind::IncompatibleCrossCheck,
             std::string("mixed identities say ") + (closed ? "compatible" : "incompatible") +
                 " but sampled combinations say " + (sampled ? "compatible" : "incompatible"));
    return closed;
}

bool is_compatible_pair(const LieYRepPair<Rational>& P, const Matrix<Rational>& T1, const Matrix<Rational>& T2) {
    return is_compatible_pair(RelativeRBOperator::make(P, T1), RelativeRBOperator::make(P, T2));
}

Matrix<Rational> nijenhuis_from_pair(const LieYRepPair<Rational>& P, const Matrix<Rational>& T1,
                                     const Matrix<Rational>& T2) {
    check_t_shape(P, T1);
    check_t_shape(P, T2);
    if (!is_relative_rb(P, T1) || !is_relative_rb(P, T2))
        fail(ErrorKind::NotCompatible, "both maps must be relative Rota-Baxter operators");
    if (!is_compatible_pair(P, T1, T2)) fail(ErrorKind::NotCompatible, "T1 and T2 are not compatible");
    if (!T2.is_square()) fail(ErrorKind::Singular, "T2 is not square, hence not invertible");
    RM N = T1 * invert(T2);
    Report r = nijenhuis_report(P.algebra, N);
    if (!r.ok()) fail(ErrorKind::ConsequenceViolated, "T1 T2^{-1} is not Nijenhuis:\n" + r.text());
    return N;
}

}  // namespace lya
