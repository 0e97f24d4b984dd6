#pragma once

#include "lya/pair.hpp"
#include "lya/rep.hpp"

namespace lya {

// Data (phi, phi1, phi2; varrho, varpi1, varpi2) of the one-parameter family
//   [x,y]_t      = [x,y] + t phi(x,y)
//   <<x,y,z>>_t  = <<x,y,z>> + t phi1(x,y,z) + t^2 phi2(x,y,z)
//   rho_t(x)     = rho(x) + t varrho(x)
//   mu_t(x,y)    = mu(x,y) + t varpi1(x,y) + t^2 varpi2(x,y)
// phi, phi1, phi2 use the structure-constant layout of Algebra; varrho[i] is
// varrho(e_i), varpi*.at(i,j) is varpi*(e_i,e_j).
struct DeformationData {
    int d = 0;
    int m = 0;
    Tensor<Rational> phi;
    Tensor<Rational> phi1;
    Tensor<Rational> phi2;
    std::vector<Matrix<Rational>> varrho;
    OpTable<Rational> varpi1;
    OpTable<Rational> varpi2;

    friend bool operator==(const DeformationData& a, const DeformationData& b) {
        return a.d == b.d && a.m == b.m && a.phi == b.phi && a.phi1 == b.phi1 && a.phi2 == b.phi2 &&
               a.varrho == b.varrho && a.varpi1 == b.varpi1 && a.varpi2 == b.varpi2;
    }
};

DeformationData deformation_zero(int d, int m);
bool is_zero(const DeformationData& dd);
// DimMismatch unless the data fits the pair.
void require_compatible(const LieYRepPair<Rational>& P, const DeformationData& dd);

// The pair (g, phi, phi2; V, varrho, varpi2) made of the top-order terms.
LieYRepPair<Rational> top_order_pair(const DeformationData& dd);

// The deformed pair with scalars in Q[t].
LieYRepPair<Poly> deformed_pair(const LieYRepPair<Rational>& P, const DeformationData& dd);

// The t-coefficient of D_t = D_{rho_t, mu_t} taken over the deformed bracket:
// D_1(x,y) = varpi1(y,x) - varpi1(x,y) + [rho(x),varrho(y)] + [varrho(x),rho(y)]
//            - varrho([x,y]) - rho(phi(x,y)).
OpTable<Rational> deformation_D1(const LieYRepPair<Rational>& P, const DeformationData& dd);

// Axioms and representation conditions of the deformed pair, decided by the
// vanishing of every t-coefficient. Failing witnesses record the lowest
// nonzero power of t.
Report linear_deformation_report(const LieYRepPair<Rational>& P, const DeformationData& dd);
bool is_linear_deformation(const LieYRepPair<Rational>& P, const DeformationData& dd);

// ((phi, phi1), (varrho, D_1), third component) in C^2: the t-linear part of
// the deformed semidirect product, projected into the pair complex. For a
// linear deformation the result is verified to be a Delta-cocycle
// (ConsequenceViolated otherwise).
PairCochain deformation_cocycle(const LieYRepPair<Rational>& P, const DeformationData& dd);

// (g, phi, phi2) is a Lie-Yamaguti algebra and (V; varrho, varpi2) a
// representation of it.
Report deformation_pair_report(const DeformationData& dd);
bool is_deformation_of_pair(const LieYRepPair<Rational>& P, const DeformationData& dd);

// (N, S) conditions: N is Nijenhuis on g, and
//   rho(Nx) S      = S varrho(x),    varrho(x) = rho(Nx) + rho(x) S - S rho(x)
//   mu(Nx,Ny) S    = S varpi2(x,y),  varpi2 as in trivial_deformation_from.
// The D-analogue is a consequence; if it fails while the rest passes the
// function throws ConsequenceViolated.
Report nijenhuis_structure_report(const LieYRepPair<Rational>& P, const Matrix<Rational>& N,
                                  const Matrix<Rational>& S);
bool is_nijenhuis_structure(const LieYRepPair<Rational>& P, const Matrix<Rational>& N, const Matrix<Rational>& S);

// A validated Nijenhuis structure. Only `make` constructs one.
class NijenhuisStructure {
public:
    // NotNijenhuis if the conditions fail.
    static NijenhuisStructure make(const LieYRepPair<Rational>& P, const Matrix<Rational>& N,
                                   const Matrix<Rational>& S);
    const Matrix<Rational>& n_map() const { return n_; }
    const Matrix<Rational>& s_map() const { return s_; }

private:
    NijenhuisStructure(Matrix<Rational> n, Matrix<Rational> s) : n_(std::move(n)), s_(std::move(s)) {}
    Matrix<Rational> n_, s_;
};

// The deformation generated by a Nijenhuis structure:
//   phi(x,y)      = [Nx,y] + [x,Ny] - N[x,y]
//   phi1(x,y,z)   = <<Nx,y,z>> + <<x,Ny,z>> + <<x,y,Nz>> - N<<x,y,z>>
//   phi2(x,y,z)   = <<Nx,Ny,z>> + <<x,Ny,Nz>> + <<Nx,y,Nz>> - N phi1(x,y,z)
//   varrho(x)     = rho(Nx) + rho(x) S - S rho(x)
//   varpi1(x,y)   = mu(Nx,y) + mu(x,Ny) + mu(x,y) S - S mu(x,y)
//   varpi2(x,y)   = mu(Nx,y) S + mu(x,Ny) S + mu(Nx,Ny) - S varpi1(x,y)
// Throws NotNijenhuis if the structure does not belong to this pair.
DeformationData trivial_deformation_from(const LieYRepPair<Rational>& P, const NijenhuisStructure& ns);

// N + S on the semidirect product (g first, then V); asserted Nijenhuis.
Matrix<Rational> semidirect_nijenhuis(const LieYRepPair<Rational>& P, const NijenhuisStructure& ns);

// (rho^, mu^) = (varrho, varpi2) of the trivial deformation: a representation
// of the N-deformed algebra. The derived D of the result is checked against
// the closed form below (ConsequenceViolated on disagreement).
Representation<Rational> hat_rep(const LieYRepPair<Rational>& P, const NijenhuisStructure& ns);
// D^(x,y) = D(Nx,y)S + D(x,Ny)S + D(Nx,Ny) - S(D(Nx,y) + D(x,Ny) + D(x,y)S) + S^2 D(x,y).
OpTable<Rational> hat_D_closed_form(const LieYRepPair<Rational>& P, const Matrix<Rational>& N,
                                    const Matrix<Rational>& S);

// (Id + tN, Id + tS) carries the deformation `from` to `to`:
//   (Id+tN)[x,y]_t          = [(Id+tN)x,(Id+tN)y]'_t
//   (Id+tN)<<x,y,z>>_t      = <<(Id+tN)x,(Id+tN)y,(Id+tN)z>>'_t
//   (Id+tS) rho_t(x)        = rho'_t((Id+tN)x) (Id+tS)
//   (Id+tS) mu_t(x,y)       = mu'_t((Id+tN)x,(Id+tN)y) (Id+tS)
//   (Id+tS) D_t(x,y)        = D'_t((Id+tN)x,(Id+tN)y) (Id+tS)
// where the primed structures belong to `to`. Checked as identities in Q[t].
Report equivalence_report(const LieYRepPair<Rational>& P, const DeformationData& from, const DeformationData& to,
                          const Matrix<Rational>& N, const Matrix<Rational>& S);
bool are_equivalent_deformations(const LieYRepPair<Rational>& P, const DeformationData& from,
                                 const DeformationData& to, const Matrix<Rational>& N, const Matrix<Rational>& S);

// The degree-1 pair cochain (N, S).
PairCochain pair_cochain_of(const Matrix<Rational>& N, const Matrix<Rational>& S);

}  // namespace lya
