#pragma once

#include "lya/rota_baxter.hpp"

namespace lya {

// Dual-space bookkeeping uses the standard pairing <e_i*, e_j> = delta_ij, so
// the pullback N* of a map N is its transpose.
//
// B^# : g* -> g is defined by B(x,y) = <(B^#)^{-1} x, y>; with b the Gram
// matrix of B this gives (B^#)^{-1} = b and B^# = b^{-1}.
//
// pi(i,j) = pi(e_i*, e_j*); pi^# is defined by <pi^# alpha, beta> = pi(alpha, beta),
// so pi^# = pi^T.

// Invariance identities of a symmetric form b:
//   B([x,y],z) = -B(y,[x,z])   and   B(<<x,y,z>>,w) = B(x,<<w,z,y>>),
// plus nondegeneracy. NotSymmetric if b is not symmetric.
Report invariant_form_report(const Algebra<Rational>& A, const Matrix<Rational>& b);
bool is_invariant_form(const Algebra<Rational>& A, const Matrix<Rational>& b);

// A validated quadratic Lie-Yamaguti algebra (A, B).
class QuadraticForm {
public:
    // NotSymmetric, Singular, or PreconditionFailed (invariance).
    static QuadraticForm make(const Algebra<Rational>& A, const Matrix<Rational>& b);
    const Matrix<Rational>& b() const { return b_; }
    const Matrix<Rational>& b_sharp() const { return b_sharp_; }
    const Algebra<Rational>& algebra() const { return algebra_; }

private:
    QuadraticForm(Algebra<Rational> A, Matrix<Rational> b, Matrix<Rational> bs)
        : algebra_(std::move(A)), b_(std::move(b)), b_sharp_(std::move(bs)) {}
    Algebra<Rational> algebra_;
    Matrix<Rational> b_, b_sharp_;
};

// The transport identities, with ad* and R*, L* dual to -ad, -R, -L:
//   B^#(ad*_x alpha)         = ad_x(B^# alpha)
//   -B^#(R*(y,x) alpha)      = R(x,y)(B^# alpha)
//   B^#(L*(x,y) alpha)       = L(x,y)(B^# alpha)
// where R(x,y)z = <<z,x,y>> and L(x,y)z = <<x,y,z>>. Checked on basis
// elements; ConsequenceViolated if any fails.
Report invariance_transport(const QuadraticForm& qf);
// The same identities for an arbitrary form, without throwing.
Report transport_report(const Algebra<Rational>& A, const Matrix<Rational>& b);

// pi^# = pi^T; NotSkew unless pi is skew-symmetric.
Matrix<Rational> pi_sharp(const Matrix<Rational>& pi);
// pi^# is a relative Rota-Baxter operator for the coadjoint representation.
bool is_r_matrix(const Algebra<Rational>& A, const Matrix<Rational>& pi);

// A validated r-matrix.
class ClassicalRMatrix {
public:
    // NotSkew, or PreconditionFailed if pi^# is not relative Rota-Baxter.
    static ClassicalRMatrix make(const Algebra<Rational>& A, const Matrix<Rational>& pi);
    const Matrix<Rational>& pi() const { return pi_; }
    const Matrix<Rational>& pi_sharp() const { return pi_sharp_; }

private:
    ClassicalRMatrix(Matrix<Rational> pi, Matrix<Rational> ps) : pi_(std::move(pi)), pi_sharp_(std::move(ps)) {}
    Matrix<Rational> pi_, pi_sharp_;
};

// R B^# is skew: <alpha, R B^# beta> + <beta, R B^# alpha> = 0. A failure is
// located at the first (i,j) with (R B^#)_ij + (R B^#)_ji != 0.
Report skew_endomorphism_report(const QuadraticForm& qf, const Matrix<Rational>& R);
bool is_skew_endomorphism(const QuadraticForm& qf, const Matrix<Rational>& R);

// B and N compatible: B^# N* = N B^#, located at the first differing entry.
Report form_compatibility_report(const QuadraticForm& qf, const Matrix<Rational>& N);
bool form_compatible(const QuadraticForm& qf, const Matrix<Rational>& N);

// R relative Rota-Baxter for the adjoint representation, N Nijenhuis,
// N R = R N, [x,y]^{NR} = [x,y]^R_N, <<x,y,z>>^{NR} = <<x,y,z>>^R_N; i.e. the
// relative conditions on the adjoint pair with (T, S, N) = (R, N, N).
Report rb_nijenhuis_report(const Algebra<Rational>& A, const Matrix<Rational>& R, const Matrix<Rational>& N);
bool is_rb_nijenhuis(const Algebra<Rational>& A, const Matrix<Rational>& R, const Matrix<Rational>& N);

// pi an r-matrix, N Nijenhuis, and on the coadjoint pair
//   N pi^# = pi^# N*,  [a,b]^{N pi^#} = [a,b]^{pi^#}_{N*},  <<a,b,c>>^{N pi^#} = <<a,b,c>>^{pi^#}_{N*}.
Report rmatrix_nijenhuis_report(const Algebra<Rational>& A, const Matrix<Rational>& pi, const Matrix<Rational>& N);
bool is_rmatrix_nijenhuis(const Algebra<Rational>& A, const Matrix<Rational>& pi, const Matrix<Rational>& N);

// (N, S) is dual Nijenhuis iff (N, S*) is a Nijenhuis structure on the dual
// pair (V*; rho*, -mu* tau). Also evaluated directly: N Nijenhuis and
//   rho(Nx)S    = S(rho(Nx) - rho(x)S) + rho(x)S^2
//   mu(Nx,Ny)S  = S(mu(Nx,Ny) - mu(Nx,y)S - mu(x,Ny)S + mu(x,y)S^2)
//                 + mu(Nx,y)S^2 + mu(x,Ny)S^2 - mu(x,y)S^3.
// The report holds both routes; is_dual_nijenhuis throws
// DualRouteDisagreement if their verdicts differ.
Report dual_nijenhuis_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& N, const Matrix<Rational>& S);
bool is_dual_nijenhuis(const LieYRepPair<Rational>& P, const Matrix<Rational>& N, const Matrix<Rational>& S);

// T relative Rota-Baxter, (N, S) dual Nijenhuis, and ON1-ON3.
Report rb_dual_nijenhuis_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                                const Matrix<Rational>& N);
bool is_rb_dual_nijenhuis(const LieYRepPair<Rational>& P, const Matrix<Rational>& T, const Matrix<Rational>& S,
                          const Matrix<Rational>& N);

// From a Rota-Baxter-Nijenhuis structure (R, N) with R a skew endomorphism
// and B, N compatible: pi^# = R B^#. The result is asserted to be an
// r-matrix-Nijenhuis structure with N.
// Errors: DimMismatch; PreconditionFailed naming the failed premise;
// ConsequenceViolated.
ClassicalRMatrix rbn_to_rmn(const QuadraticForm& qf, const Matrix<Rational>& R, const Matrix<Rational>& N);

// From an r-matrix-Nijenhuis structure (pi, N) with B, N compatible:
// R = pi^# (B^#)^{-1}. The result is asserted to be Rota-Baxter-Nijenhuis with
// N and to map back to pi under rbn_to_rmn.
// Errors: DimMismatch; NotSkew; PreconditionFailed; ConsequenceViolated.
Matrix<Rational> rmn_to_rbn(const QuadraticForm& qf, const Matrix<Rational>& pi, const Matrix<Rational>& N);

}  // namespace lya
