#pragma once

#include "lya/rep.hpp"

#include <random>
#include <string>
#include <vector>

namespace lya {

using RAlgebra = Algebra<Rational>;
using RRep = Representation<Rational>;
using RPair = LieYRepPair<Rational>;
using RMatrix = Matrix<Rational>;

// The 2-dimensional algebra with [e1,e2] = e1 and <<e1,e2,e2>> = e1.
RAlgebra a2();
RAlgebra abelian(int n);
RRep zero_rep(int n, int m);

// Lie algebras (zero ternary bracket).
RAlgebra sl2();                // basis e, f, h: [h,e]=2e, [h,f]=-2f, [e,f]=h
RAlgebra heisenberg();         // [x,y] = z
RAlgebra nonabelian_lie2();    // [a,b] = b
// Lie-Yamaguti structure <<x,y,z>> = [[x,y],z] on a Lie algebra.
RAlgebra lie_induced(const RAlgebra& lie);
// Lie triple system: [x,y] = 0 and <<x,y,z>> = [[x,y],z].
RAlgebra lie_triple_system(const RAlgebra& lie);

// Transport along a basis change: column j of P is the new j-th basis vector.
RAlgebra change_basis(const RAlgebra& A, const RMatrix& P);
RRep change_basis(const RRep& R, const RMatrix& P, const RMatrix& Q);

RMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows);

// Random data, deterministic for a given engine state.
Rational random_rational(std::mt19937_64& rng, int range = 3, int max_den = 2);
RMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range = 3, int max_den = 2,
                      double density = 1.0);
RMatrix random_invertible(std::mt19937_64& rng, int n);
Vec<Rational> random_vec(std::mt19937_64& rng, int n);

struct NamedPair {
    std::string name;
    RPair pair;
};

// A valid LieYRep pair with algebra dimension 1..max_dim and module dimension
// 1..max_dim, built from a catalogue of base cases and a random basis change.
// Instances are re-verified before being returned.
NamedPair random_valid_pair(std::mt19937_64& rng, int max_dim = 3);

// The standard fixed corpus: (A2, adjoint), (A2, coadjoint) and the
// 4-dimensional semidirect product of A2 with its adjoint representation.
std::vector<NamedPair> standard_pairs();

}  // namespace lya
