#pragma once

#include "lya/deform.hpp"

namespace lya {

// Residuals of the two identities
//   [Tu,Tv]       = T(rho(Tu)v - rho(Tv)u)
//   <<Tu,Tv,Tw>>  = T(D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v)
// on all basis tuples of V. T maps V-coordinates to g-coordinates.
Report relative_rb_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T);
bool is_relative_rb(const LieYRepPair<Rational>& P, const Matrix<Rational>& T);

// The brackets [u,v]^T = rho(Tu)v - rho(Tv)u and
// <<u,v,w>>^T = D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v on V, for any linear T.
Algebra<Rational> induced_brackets(const LieYRepPair<Rational>& P, const Matrix<Rational>& T);

// A validated relative Rota-Baxter operator together with its pair.
class RelativeRBOperator {
public:
    // PreconditionFailed if T is not a relative Rota-Baxter operator.
    static RelativeRBOperator make(const LieYRepPair<Rational>& P, const Matrix<Rational>& T);
    const Matrix<Rational>& t_map() const { return t_; }
    const LieYRepPair<Rational>& pair() const { return pair_; }

private:
    RelativeRBOperator(LieYRepPair<Rational> P, Matrix<Rational> T) : pair_(std::move(P)), t_(std::move(T)) {}
    LieYRepPair<Rational> pair_;
    Matrix<Rational> t_;
};

// The sub-adjacent Lie-Yamaguti algebra V^T. Its axioms and the homomorphism
// property of T : V^T -> g are asserted (ConsequenceViolated).
Algebra<Rational> subadjacent(const RelativeRBOperator& T);

// u *^T v = rho(Tu)v as star(u,v,k); {u,v,w}^T = mu(Tv,Tw)u as brace(u,v,w,k).
// Asserts that the brackets of V^T are recovered:
//   [u,v]^T      = u*v - v*u
//   <<u,v,w>>^T  = {w,v,u} - {w,u,v} + u*(v*w) - v*(u*w) - (u*v - v*u)*w + {u,v,w} - {v,u,w}.
struct PreLYProducts {
    Tensor<Rational> star;
    Tensor<Rational> brace;
};
PreLYProducts pre_ly_products(const RelativeRBOperator& T);

// The S-deformed brackets of V^T (the Nijenhuis deformation formulas with S).
Algebra<Rational> s_deformed_brackets(const RelativeRBOperator& T, const Matrix<Rational>& S);
// [u,v] = rho^(Tu)v - rho^(Tv)u, <<u,v,w>> = D^(Tu,Tv)w + mu^(Tv,Tw)u - mu^(Tu,Tw)v.
Algebra<Rational> hat_deformed_brackets(const RelativeRBOperator& T, const NijenhuisStructure& ns);

// The three conditions ON1-ON3 alone, for arbitrary linear T, S, N:
//   N T = T S,   [,]^T_S = [,]^{NT},   <<>>^T_S = <<>>^{NT}.
Report on_conditions_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                            const Matrix<Rational>& N);

// (T, S, N): T relative Rota-Baxter, (N, S) a Nijenhuis structure, and ON1-ON3.
Report rbn_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                  const Matrix<Rational>& N);
bool is_rbn(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
            const Matrix<Rational>& N);

class RBNTriple {
public:
    // PreconditionFailed unless is_rbn holds.
    static RBNTriple make(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                          const Matrix<Rational>& N);
    const RelativeRBOperator& t() const { return t_; }
    const NijenhuisStructure& ns() const { return ns_; }
    const Matrix<Rational>& s_map() const { return ns_.s_map(); }
    const Matrix<Rational>& n_map() const { return ns_.n_map(); }
    const LieYRepPair<Rational>& pair() const { return t_.pair(); }

private:
    RBNTriple(RelativeRBOperator t, NijenhuisStructure ns) : t_(std::move(t)), ns_(std::move(ns)) {}
    RelativeRBOperator t_;
    NijenhuisStructure ns_;
};

// The conclusions that follow from a relative Rota-Baxter-Nijenhuis structure:
//   S is Nijenhuis on V^T; the S-deformed and hat-deformed brackets agree and
//   are Lie-Yamaguti; T is relative Rota-Baxter on (g, [,]_N, <<>>_N) w.r.t.
//   (V; rho^, mu^); NT is relative Rota-Baxter on g w.r.t. (V; rho, mu); and
//   T, S, NT, N are homomorphisms between the deformed and undeformed algebras.
// Throws ConsequenceViolated (carrying the report text) if any of them fails.
Report rbn_consequences(const RBNTriple& tr);

// D(Tu,Tv)Sw + mu(Tv,Tw)Su - mu(Tu,Tw)Sv = S<<u,v,w>>^T on all basis triples.
Report strong_condition_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S);
bool strong_condition(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S);

// The mixed identities characterizing compatibility of two relative
// Rota-Baxter operators (every k1 T1 + k2 T2 is relative Rota-Baxter).
Report compatibility_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T1, const Matrix<Rational>& T2);
// Cross-checked against k1 T1 + k2 T2 for (k1,k2) in {(1,1),(1,-1),(2,3)};
// IncompatibleCrossCheck if the two verdicts differ.
bool is_compatible_pair(const RelativeRBOperator& T1, const RelativeRBOperator& T2);
// Validates both operators first (PreconditionFailed).
bool is_compatible_pair(const LieYRepPair<Rational>& P, const Matrix<Rational>& T1, const Matrix<Rational>& T2);

// N = T1 T2^{-1} for compatible T1, T2 with T2 invertible; asserted Nijenhuis.
// Errors: NotCompatible, Singular, ConsequenceViolated.
Matrix<Rational> nijenhuis_from_pair(const LieYRepPair<Rational>& P, const Matrix<Rational>& T1,
                                     const Matrix<Rational>& T2);

}  // namespace lya
