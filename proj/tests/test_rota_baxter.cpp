#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lya/fixtures.hpp"
#include "lya/linalg.hpp"
#include "lya/rota_baxter.hpp"
#include "oracles.hpp"
#include "rb_oracles.hpp"

#include <random>

using namespace lya;
using oracle::add;
using oracle::QVec;
using namespace rb_oracle;

namespace {

RPair a2_adjoint() { return {a2(), adjoint_rep(a2())}; }
RPair a2_coadjoint() { return {a2(), coadjoint_rep(a2())}; }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no lya::Error thrown");
    return ErrorKind::ParseError;
}

// Compatibility straight from its definition: the defining identities of
// k1 T1 + k2 T2 are homogeneous cubics in (k1,k2), so vanishing at five
// distinct ratios decides every combination.
bool oracle_compatible(const RPair& P, const RMatrix& T1, const RMatrix& T2, std::mt19937_64& rng) {
    const int ks[5][2] = {{1, 0}, {0, 1}, {1, 2}, {3, -1}, {2, 5}};
    for (const auto& k : ks)
        if (!oracle_relative_rb(P, Rational(k[0]) * T1 + Rational(k[1]) * T2, rng)) return false;
    return true;
}

// Test utility: every dim(g) x dim(V) matrix with entries in {-2,...,2}.
std::vector<RMatrix> grid_search_rb(const RPair& P) {
    const int r = P.algebra.dim, c = P.rep.module_dim, cells = r * c;
    std::vector<RMatrix> found;
    std::vector<int> e(cells, -2);
    while (true) {
        RMatrix T(r, c);
        for (int i = 0; i < cells; ++i) T(i / c, i % c) = Rational(e[i]);
        if (is_relative_rb(P, T)) found.push_back(T);
        int k = cells - 1;
        while (k >= 0 && ++e[k] > 2) e[k--] = -2;
        if (k < 0) break;
    }
    return found;
}

const RMatrix R0 = mat({{0, 1}, {0, 0}});
const RMatrix N0 = mat({{0, 2}, {0, 0}});

}  // namespace

TEST_CASE("relative Rota-Baxter examples") {
    RPair P = a2_adjoint();
    CHECK(is_relative_rb(P, RMatrix(2, 2)));
    CHECK(is_relative_rb(P, R0));
    Report r = relative_rb_report(P, RMatrix::identity(2));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.at("rb-bracket").passed());
    // [e1,e2] = e1 while T(rho(e1)e2 - rho(e2)e1) = 2 e1.
    CHECK(r.at("rb-bracket").witness->residual == std::vector<std::string>{"-1", "0"});
    CHECK(kind_of([&] { relative_rb_report(P, RMatrix(2, 3)); }) == ErrorKind::DimMismatch);
    CHECK(kind_of([&] { RelativeRBOperator::make(P, RMatrix::identity(2)); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("relative Rota-Baxter verdicts agree with the naive oracle on the grid") {
    std::mt19937_64 rng(11);
    for (const RPair& P : {a2_adjoint(), a2_coadjoint()}) {
        int found = 0;
        for (const RMatrix& T : grid_search_rb(P)) {
            CHECK(oracle_relative_rb(P, T, rng));
            ++found;
        }
        CHECK(found > 1);
    }
    // Non-members: random matrices.
    for (int k = 0; k < 60; ++k) {
        RPair P = k % 2 ? a2_adjoint() : a2_coadjoint();
        RMatrix T = random_matrix(rng, 2, 2, 2, 2, 0.7);
        CHECK(is_relative_rb(P, T) == oracle_relative_rb(P, T, rng));
    }
}

TEST_CASE("homogeneity: scalar multiples of relative Rota-Baxter operators") {
    std::mt19937_64 rng(5);
    for (const RPair& P : {a2_adjoint(), a2_coadjoint()})
        for (const RMatrix& T : grid_search_rb(P))
            for (int k = 0; k < 2; ++k) CHECK(is_relative_rb(P, random_rational(rng, 4, 3) * T));
}

TEST_CASE("sub-adjacent algebra") {
    std::mt19937_64 rng(7);
    SUBCASE("T = 0 gives the abelian structure") {
        RAlgebra VT = subadjacent(RelativeRBOperator::make(a2_adjoint(), RMatrix(2, 2)));
        CHECK(VT.binary == abelian(2).binary);
        CHECK(VT.ternary == abelian(2).ternary);
    }
    SUBCASE("every grid operator gives a Lie-Yamaguti algebra matching the naive brackets") {
        for (const RPair& P : {a2_adjoint(), a2_coadjoint()})
            for (const RMatrix& T : grid_search_rb(P)) {
                RAlgebra VT = subadjacent(RelativeRBOperator::make(P, T));
                CHECK(check_axioms(VT).ok());
                CHECK(oracle::naive_axioms_hold(VT, rng, 3));
                CHECK(agrees_with_induced(VT, NaiveInduced(P, T), 2, rng));
            }
    }
    SUBCASE("adjoint example") {
        RAlgebra VT = subadjacent(RelativeRBOperator::make(a2_adjoint(), R0));
        // T e2 = e1: [e2,e1]^T = rho(e1)e1 - rho(0)e2 = 0 and [e2,e2]^T = 0; rho(e1) kills e1.
        CHECK(VT.binary == abelian(2).binary);
        // <<e2,e2,e1>>^T = D(e1,e1)e1 + mu(e1,0)e2 - mu(e1,0)e2 = 0; mu(e1,e1) = 0 on A2.
        CHECK(check_axioms(VT).ok());
    }
}

TEST_CASE("pre-Lie-Yamaguti products") {
    SUBCASE("T = 0") {
        PreLYProducts p = pre_ly_products(RelativeRBOperator::make(a2_adjoint(), RMatrix(2, 2)));
        CHECK(p.star == Tensor<Rational>({2, 2, 2}));
        CHECK(p.brace == Tensor<Rational>({2, 2, 2, 2}));
    }
    SUBCASE("grid operators: products match their definitions") {
        for (const RPair& P : {a2_adjoint(), a2_coadjoint()})
            for (const RMatrix& T : grid_search_rb(P)) {
                PreLYProducts p = pre_ly_products(RelativeRBOperator::make(P, T));
                NaiveInduced I(P, T);
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) {
                        QVec u = oracle::to_q(unit_vec<Rational>(2, a)), v = oracle::to_q(unit_vec<Rational>(2, b));
                        QVec star = I.R.rho_v(I.t_(u), v);
                        for (int l = 0; l < 2; ++l) CHECK(p.star(a, b, l).to_mpq() == star[l]);
                        for (int c = 0; c < 2; ++c) {
                            QVec w = oracle::to_q(unit_vec<Rational>(2, c));
                            QVec br = I.R.mu_v(I.t_(v), I.t_(w), u);
                            for (int l = 0; l < 2; ++l) CHECK(p.brace(a, b, c, l).to_mpq() == br[l]);
                        }
                    }
            }
    }
}

TEST_CASE("S-deformed and hat-deformed brackets: trivial collapses") {
    RelativeRBOperator T = RelativeRBOperator::make(a2_adjoint(), R0);
    RAlgebra VT = subadjacent(T);
    RAlgebra id = s_deformed_brackets(T, RMatrix::identity(2));
    CHECK(id.binary == VT.binary);
    CHECK(id.ternary == VT.ternary);
    RAlgebra zero = s_deformed_brackets(T, RMatrix(2, 2));
    CHECK(zero.binary == Tensor<Rational>({2, 2, 2}));
    CHECK(zero.ternary == Tensor<Rational>({2, 2, 2, 2}));

    std::mt19937_64 rng(3);
    for (const RPair& P : {a2_adjoint(), a2_coadjoint()})
        for (const RMatrix& t : grid_search_rb(P)) {
            RelativeRBOperator op = RelativeRBOperator::make(P, t);
            RAlgebra base = subadjacent(op);
            RAlgebra h1 = hat_deformed_brackets(op, NijenhuisStructure::make(P, RMatrix::identity(2),
                                                                              RMatrix::identity(2)));
            CHECK(h1.binary == base.binary);
            CHECK(h1.ternary == base.ternary);
            RAlgebra h0 = hat_deformed_brackets(op, NijenhuisStructure::make(P, RMatrix(2, 2), RMatrix(2, 2)));
            CHECK(h0.binary == Tensor<Rational>({2, 2, 2}));
            CHECK(h0.ternary == Tensor<Rational>({2, 2, 2, 2}));
        }
    // A structure validated on another pair is rejected.
    NijenhuisStructure foreign = NijenhuisStructure::make(a2_coadjoint(), RMatrix::identity(2), RMatrix(2, 2));
    if (!is_nijenhuis_structure(a2_adjoint(), RMatrix::identity(2), RMatrix(2, 2)))
        CHECK(kind_of([&] { hat_deformed_brackets(T, foreign); }) == ErrorKind::NotNijenhuis);
}

TEST_CASE("relative Rota-Baxter-Nijenhuis examples") {
    RPair P = a2_adjoint();
    std::mt19937_64 rng(13);
    CHECK(is_rbn(P, R0, N0, N0));
    CHECK(oracle_rbn_conditions(P, R0, N0, N0, rng));
    CHECK(is_rbn(P, RMatrix(2, 2), RMatrix(2, 2), RMatrix(2, 2)));
    Report r = rbn_report(P, R0, RMatrix(2, 2), RMatrix::identity(2));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.at("ON1").passed());
    CHECK(kind_of([&] { RBNTriple::make(P, R0, RMatrix(2, 2), RMatrix::identity(2)); }) ==
          ErrorKind::PreconditionFailed);

    RBNTriple tr = RBNTriple::make(P, R0, N0, N0);
    RAlgebra s = s_deformed_brackets(tr.t(), N0);
    RAlgebra nt = induced_brackets(P, N0 * R0);
    CHECK(s.binary == nt.binary);
    CHECK(s.ternary == nt.ternary);
    Report c = rbn_consequences(tr);
    CHECK(c.ok());
    CHECK(c.find("S-deformed = hat-deformed") != nullptr);

    CHECK(rbn_consequences(RBNTriple::make(P, RMatrix(2, 2), RMatrix(2, 2), RMatrix(2, 2))).ok());
}

TEST_CASE("RBN search: library verdicts match the oracle and every triple satisfies the consequences") {
    std::mt19937_64 rng(17);
    int triples = 0, strong = 0, nondegenerate = 0;
    for (const RPair& P : {a2_adjoint(), a2_coadjoint()}) {
        std::vector<RMatrix> Ts = grid_search_rb(P);
        for (int k = 0; k < 400; ++k) {
            const RMatrix& T = Ts[static_cast<size_t>(k) % Ts.size()];
            RMatrix N = random_matrix(rng, 2, 2, 2, 1, 0.6);
            RMatrix S = random_matrix(rng, 2, 2, 2, 1, 0.6);
            if (k % 5 == 0) S = N;  // frequent in the adjoint case
            if (!is_nijenhuis_structure(P, N, S)) continue;
            bool lib = is_rbn(P, T, S, N);
            CHECK(lib == oracle_rbn_conditions(P, T, S, N, rng));
            if (!lib) continue;
            ++triples;
            if (!(N * T).is_zero()) ++nondegenerate;
            RBNTriple tr = RBNTriple::make(P, T, S, N);
            CHECK(rbn_consequences(tr).ok());
            RAlgebra sd = s_deformed_brackets(tr.t(), S);
            CHECK(oracle::naive_axioms_hold(sd, rng, 2));
            if (strong_condition(P, T, S)) {
                ++strong;
                CHECK(is_compatible_pair(P, T, T * S));
            }
        }
    }
    MESSAGE("RBN triples: " << triples << ", strong: " << strong << ", N T != 0: " << nondegenerate);
    CHECK(triples > 10);
    CHECK(strong > 0);
    CHECK(nondegenerate > 0);
}

TEST_CASE("strong condition") {
    RPair P = a2_adjoint();
    CHECK(strong_condition(P, R0, RMatrix(2, 2)));
    // Evaluated against a direct expansion on basis triples.
    std::mt19937_64 rng(19);
    for (const RPair& Q : {a2_adjoint(), a2_coadjoint()})
        for (const RMatrix& T : grid_search_rb(Q))
            for (int k = 0; k < 3; ++k) {
                RMatrix S = k == 0 ? RMatrix::identity(2) : random_matrix(rng, 2, 2, 2, 1, 0.6);
                NaiveInduced I(Q, T);
                auto Sq = oracle::to_q(S);
                auto s = [&](const QVec& u) { return oracle::apply(Sq, u); };
                bool expect = true;
                for (const auto& a : oracle::sample_args(2, 3, rng)) {
                    const QVec &u = a[0], &v = a[1], &w = a[2];
                    QVec lhs = add(add(I.R.D_v(I.t_(u), I.t_(v), s(w)), I.R.mu_v(I.t_(v), I.t_(w), s(u))),
                                   I.R.mu_v(I.t_(u), I.t_(w), s(v)), -1);
                    expect = expect && lhs == s(I.tr(u, v, w));
                }
                CHECK(strong_condition(Q, T, S) == expect);
            }
}

TEST_CASE("compatibility of relative Rota-Baxter operators") {
    std::mt19937_64 rng(23);
    SUBCASE("T with itself and with multiples") {
        for (const RPair& P : {a2_adjoint(), a2_coadjoint()})
            for (const RMatrix& T : grid_search_rb(P)) {
                CHECK(is_compatible_pair(P, T, T));
                CHECK(is_compatible_pair(P, T, Rational(-3) * T));
            }
    }
    SUBCASE("abelian algebra with zero representation") {
        RPair P{abelian(2), zero_rep(2, 3)};
        for (int k = 0; k < 5; ++k)
            CHECK(is_compatible_pair(P, random_matrix(rng, 2, 3), random_matrix(rng, 2, 3)));
    }
    SUBCASE("all grid pairs agree with the definition") {
        int yes = 0, no = 0;
        for (const RPair& P : {a2_adjoint(), a2_coadjoint()}) {
            std::vector<RMatrix> Ts = grid_search_rb(P);
            for (size_t i = 0; i < Ts.size(); ++i)
                for (size_t j = i; j < Ts.size(); ++j) {
                    bool lib = is_compatible_pair(P, Ts[i], Ts[j]);
                    CHECK(lib == oracle_compatible(P, Ts[i], Ts[j], rng));
                    (lib ? yes : no)++;
                }
        }
        MESSAGE("compatible grid pairs: " << yes << ", incompatible: " << no);
        CHECK(yes > 0);
        CHECK(no > 0);
    }
    SUBCASE("unvalidated operators are rejected") {
        CHECK(kind_of([&] { is_compatible_pair(a2_adjoint(), R0, RMatrix::identity(2)); }) ==
              ErrorKind::PreconditionFailed);
    }
}

TEST_CASE("Nijenhuis operators from compatible pairs") {
    SUBCASE("scalar cases") {
        for (const RPair& Q : {a2_adjoint(), a2_coadjoint()})
            for (const RMatrix& T : grid_search_rb(Q))
                if (rank(T) == 2) {
                    CHECK(nijenhuis_from_pair(Q, T, T) == RMatrix::identity(2));
                    CHECK(nijenhuis_from_pair(Q, Rational(2) * T, T) == RMatrix::scalar(2, Rational(2)));
                }
    }
    SUBCASE("nondegenerate instance from the grid") {
        int found = 0;
        for (const RPair& Q : {a2_adjoint(), a2_coadjoint()}) {
            std::vector<RMatrix> G = grid_search_rb(Q);
            for (const RMatrix& T2 : G) {
                if (rank(T2) < 2) continue;
                for (const RMatrix& T1 : G) {
                    if (!is_compatible_pair(Q, T1, T2)) continue;
                    RMatrix N = nijenhuis_from_pair(Q, T1, T2);
                    CHECK(is_nijenhuis(Q.algebra, N));
                    CHECK(N * T2 == T1);
                    bool scalar = N(0, 1).is_zero() && N(1, 0).is_zero() && N(0, 0) == N(1, 1);
                    if (!scalar) ++found;
                }
            }
        }
        MESSAGE("non-scalar Nijenhuis operators from compatible pairs: " << found);
        CHECK(found > 0);
    }
    SUBCASE("errors") {
        RPair A = a2_adjoint();
        CHECK(kind_of([&] { nijenhuis_from_pair(A, R0, R0); }) == ErrorKind::Singular);
        CHECK(kind_of([&] { nijenhuis_from_pair(A, RMatrix::identity(2), R0); }) == ErrorKind::NotCompatible);
    }
}
