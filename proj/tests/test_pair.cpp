#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lya/fixtures.hpp"
#include "lya/linalg.hpp"
#include "lya/pair.hpp"
#include "yamaguti_oracle.hpp"

#include <random>

using namespace lya;

namespace {

PairCochain random_pair_cochain(std::mt19937_64& rng, int d, int m, int p) {
    PairCochain c = pair_cochain_zero(d, m, p);
    for (auto& x : c.data) x = random_rational(rng);
    return c;
}

std::vector<NamedPair> corpus(std::mt19937_64& rng, int extra) {
    std::vector<NamedPair> cases = standard_pairs();
    for (int i = 0; i < extra; ++i) cases.push_back(random_valid_pair(rng));
    return cases;
}

// Naive evaluation of a pair-cochain block on per-slot coordinate vectors
// (plain GMP arithmetic; shares only the layout with the library).
oracle::QVec eval_block(const PairLayout& L, const oracle::QVec& data, const PairBlock& b,
                        const std::vector<oracle::QVec>& coords) {
    const size_t outs = L.extent_out(b);
    oracle::QVec out(outs, 0);
    size_t total = 1;
    for (SlotKind k : b.slots) total *= L.extent(k);
    for (size_t idx = 0; idx < total; ++idx) {
        oracle::Q coef = 1;
        size_t rest = idx;
        for (int s = static_cast<int>(b.slots.size()) - 1; s >= 0; --s) {
            int e = L.extent(b.slots[s]);
            coef *= coords[s][rest % e];
            rest /= e;
        }
        if (coef == 0) continue;
        for (size_t o = 0; o < outs; ++o) out[o] += coef * data[b.offset + idx * outs + o];
    }
    return out;
}

oracle::QVec wedge_q(int d, const oracle::QVec& x, const oracle::QVec& y) {
    oracle::QVec c;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) c.push_back(x[a] * y[b] - x[b] * y[a]);
    return c;
}

oracle::QVec mixed_q(const oracle::QVec& x, const oracle::QVec& v) {
    oracle::QVec c;
    for (const auto& a : x)
        for (const auto& b : v) c.push_back(a * b);
    return c;
}

oracle::QVec head(const oracle::QVec& s, int d) { return oracle::QVec(s.begin(), s.begin() + d); }
oracle::QVec tail(const oracle::QVec& s, int d) { return oracle::QVec(s.begin() + d, s.end()); }
oracle::QVec cat(oracle::QVec a, const oracle::QVec& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// The lift defined by its evaluation formulas on semidirect arguments
// (x_k,u_k)^(y_k,v_k) and (z,w); returns (f-hat value, g-hat value).
std::pair<oracle::QVec, oracle::QVec> lift_by_formula(const PairCochain& c, const oracle::QVec& data,
                                                      const std::vector<oracle::Wedge>& X, const oracle::QVec& zw) {
    const int d = c.d, m = c.m, n = c.degree - 1;
    PairLayout L = c.layout();
    using oracle::add;
    std::vector<oracle::QVec> x, u, y, v;
    for (const auto& w : X) {
        x.push_back(head(w.first, d));
        u.push_back(tail(w.first, d));
        y.push_back(head(w.second, d));
        v.push_back(tail(w.second, d));
    }
    oracle::QVec z = head(zw, d), w = tail(zw, d);
    auto wedges = [&](int skip) {
        std::vector<oracle::QVec> co;
        for (int k = 0; k < n; ++k) co.push_back(k == skip ? oracle::QVec{} : wedge_q(d, x[k], y[k]));
        return co;
    };
    // f-hat
    oracle::QVec fg = eval_block(L, data, L.block("f1"), wedges(-1));
    oracle::QVec fv(m, 0);
    auto mixed_term = [&](const std::string& name, int i, bool with_z) {
        auto co1 = wedges(i), co2 = wedges(i);
        co1[i] = mixed_q(x[i], v[i]);
        co2[i] = mixed_q(y[i], u[i]);
        if (with_z) {
            co1.push_back(z);
            co2.push_back(z);
        }
        return add(eval_block(L, data, L.block(name), co1), eval_block(L, data, L.block(name), co2), -1);
    };
    for (int i = 0; i < n - 1; ++i) fv = add(fv, mixed_term("f3_" + std::to_string(i + 1), i, false));
    fv = add(fv, mixed_term("f2", n - 1, false));
    // g-hat
    auto co = wedges(-1);
    co.push_back(z);
    oracle::QVec gg = eval_block(L, data, L.block("g1"), co);
    co.back() = w;
    oracle::QVec gv = eval_block(L, data, L.block("g2"), co);
    auto co_a = wedges(-1), co_b = wedges(-1);
    co_a[n - 1] = wedge_q(d, z, y[n - 1]);
    co_a.push_back(u[n - 1]);
    co_b[n - 1] = wedge_q(d, z, x[n - 1]);
    co_b.push_back(v[n - 1]);
    gv = add(gv, eval_block(L, data, L.block("g2"), co_a), -1);
    gv = add(gv, eval_block(L, data, L.block("g2"), co_b));
    for (int j = 0; j < n; ++j) gv = add(gv, mixed_term("g3_" + std::to_string(j + 1), j, true));
    return {cat(fg, fv), cat(gg, gv)};
}

}  // namespace

TEST_CASE("pair cochain layout") {
    PairLayout L1(2, 3, 1);
    CHECK(L1.size() == 2 * 2 + 3 * 3);
    PairLayout L2(2, 2, 2);
    // degree 2: no f3 block and exactly one g3 block
    int f3 = 0, g3 = 0;
    for (const auto& b : L2.blocks) {
        if (b.name.rfind("f3_", 0) == 0) ++f3;
        if (b.name.rfind("g3_", 0) == 0) ++g3;
    }
    CHECK(f3 == 0);
    CHECK(g3 == 1);
    // W = 1, d = m = 2: f1 2, g1 4, f2 8, g2 4, g3 16
    CHECK(L2.size() == 34);
    PairLayout L3(3, 2, 3);
    CHECK(L3.block("f3_1").slots == std::vector<SlotKind>{SlotKind::Mixed, SlotKind::Wedge});
    CHECK(L3.block("g3_2").slots ==
          std::vector<SlotKind>{SlotKind::Wedge, SlotKind::Mixed, SlotKind::G});
    CHECK_THROWS_AS(L3.block("f3_2"), Error);
}

TEST_CASE("lift examples") {
    RAlgebra A = a2();
    RPair P{A, adjoint_rep(A)};
    PairComplex cx(P);
    for (int p = 1; p <= 3; ++p) CHECK(cx.lift(pair_cochain_zero(2, 2, p)).is_zero());
    PairCochain id = pair_cochain_zero(2, 2, 1);
    id.at("f1", {0}, 0) = id.at("f1", {1}, 1) = 1;
    id.at("f2", {0}, 0) = id.at("f2", {1}, 1) = 1;
    YamagutiCochain l = cx.lift(id);
    YamagutiCochain expect = ycochain_zero(4, 4, 1);
    for (int a = 0; a < 4; ++a) expect.f[a * 4 + a] = 1;
    CHECK(l == expect);
}

TEST_CASE("lift agrees with its evaluation formulas") {
    std::mt19937_64 rng(41);
    auto cases = corpus(rng, 4);
    for (const auto& np : cases) {
        INFO(np.name);
        const int d = np.pair.algebra.dim, m = np.pair.rep.module_dim, N = d + m;
        PairComplex cx(np.pair);
        oracle::NaiveLY SL(cx.semidirect_algebra());
        oracle::NaiveRep SR(SL, adjoint_rep(cx.semidirect_algebra()));
        oracle::NaiveYamaguti Y(SL, SR);
        for (int p = 1; p <= (d >= 4 ? 2 : 3); ++p) {
            PairCochain c = random_pair_cochain(rng, d, m, p);
            oracle::QVec data = oracle::to_q(c.data);
            oracle::QVec lifted = oracle::to_q(flatten(cx.lift(c)));
            for (int s = 0; s < 3; ++s) {
                if (p == 1) {
                    auto xu = oracle::random_qvec(rng, N);
                    oracle::QVec want = cat(eval_block(c.layout(), data, c.layout().block("f1"), {head(xu, d)}),
                                            eval_block(c.layout(), data, c.layout().block("f2"), {tail(xu, d)}));
                    CHECK(Y.eval1(lifted, xu) == want);
                    continue;
                }
                std::vector<oracle::Wedge> X;
                for (int k = 0; k < p - 1; ++k) X.push_back({oracle::random_qvec(rng, N), oracle::random_qvec(rng, N)});
                auto zw = oracle::random_qvec(rng, N);
                auto [fw, gw] = lift_by_formula(c, data, X, zw);
                CHECK(Y.evalF(lifted, X) == fw);
                CHECK(Y.evalG(lifted, X, zw) == gw);
            }
        }
    }
}

TEST_CASE("project is a left inverse of lift and rejects non-lifts") {
    std::mt19937_64 rng(42);
    auto cases = corpus(rng, 3);
    for (const auto& np : cases) {
        INFO(np.name);
        const int d = np.pair.algebra.dim, m = np.pair.rep.module_dim;
        PairComplex cx(np.pair);
        for (int p = 1; p <= (d >= 4 ? 2 : 3); ++p) {
            PairCochain c = random_pair_cochain(rng, d, m, p);
            CHECK(cx.project(cx.lift(c)) == c);
            CHECK(cx.project(ycochain_zero(d + m, d + m, p)).is_zero());
            // projection composed with lift is the identity matrix
            SparseMatrix I = cx.project_matrix(p) * cx.lift_matrix(p);
            CHECK(I.dense() == RMatrix::identity(static_cast<int>(cx.dim(p))));
        }
    }
    // a g-valued output on a pure-V argument is not a lift
    RAlgebra A = a2();
    RPair P{A, adjoint_rep(A)};
    YamagutiCochain bad = ycochain_zero(4, 4, 1);
    bad.f[2 * 4 + 0] = 1;  // f(v1) has an e1 component
    try {
        project(P, bad);
        FAIL("expected NotInSubcomplex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInSubcomplex);
    }
    YamagutiCochain bad2 = ycochain_zero(4, 4, 2);
    // f(v1 ^ v2) with a V-valued output
    WedgeBasis wb(4);
    bad2.f[wb.lookup(2, 3).first * 4 + 3] = 1;
    CHECK_THROWS_AS(project(P, bad2), Error);
}

TEST_CASE("degree-1 coboundary examples") {
    RAlgebra A = a2();
    RPair P{A, adjoint_rep(A)};
    CHECK(pair_delta_direct(P, pair_cochain_zero(2, 2, 1)).is_zero());
    CHECK(pair_delta_lifted(P, pair_cochain_zero(2, 2, 1)).is_zero());
    PairCochain id = pair_cochain_zero(2, 2, 1);
    id.at("f1", {0}, 0) = id.at("f1", {1}, 1) = 1;
    id.at("f2", {0}, 0) = id.at("f2", {1}, 1) = 1;
    PairCochain out = pair_delta_direct(P, id);
    // f2-component: rho(x)v + rho(x)v - rho(x)v = rho(x)v
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Vec<Rational> rv = P.rep.rho[a].col(b);
            for (int o = 0; o < 2; ++o) CHECK(out.at("f2", {a * 2 + b}, o) == rv[o]);
        }
    // f1-component: [x,y] + [x,y] - [x,y] = [x,y]
    CHECK(out.at("f1", {0}, 0) == 1);
    CHECK(out.at("f1", {0}, 1) == 0);
    CHECK(out == pair_delta_lifted(P, id));
}

TEST_CASE("direct formulas agree with the lifted coboundary") {
    std::mt19937_64 rng(43);
    auto cases = corpus(rng, 10);
    for (const auto& np : cases) {
        INFO(np.name);
        const int d = np.pair.algebra.dim, m = np.pair.rep.module_dim;
        PairComplex cx(np.pair);
        for (int p = 1; p <= 2; ++p)
            for (int s = 0; s < 2; ++s) {
                PairCochain c = random_pair_cochain(rng, d, m, p);
                CHECK(pair_delta_direct(np.pair, c) == cx.delta_lifted(c));
            }
        // column by column on elementary cochains, degree 1
        for (size_t k = 0; k < cx.dim(1); ++k) {
            PairCochain e = pair_cochain_zero(d, m, 1);
            e.data[k] = 1;
            CHECK(pair_delta_direct(np.pair, e).data == cx.delta_sparse(1).dense().col(static_cast<int>(k)));
        }
    }
}

TEST_CASE("Delta squares to zero") {
    std::mt19937_64 rng(44);
    auto cases = corpus(rng, 8);
    for (const auto& np : cases) {
        INFO(np.name);
        const int d = np.pair.algebra.dim, m = np.pair.rep.module_dim;
        PairComplex cx(np.pair);
        CHECK((cx.delta_sparse(2) * cx.delta_sparse(1)).is_zero());
        PairCochain c = random_pair_cochain(rng, d, m, 1);
        CHECK(pair_delta_direct(np.pair, pair_delta_direct(np.pair, c)).is_zero());
        if (d + m <= 5) {
            PairComplex big(np.pair, 4);
            CHECK((big.delta_sparse(3) * big.delta_sparse(2)).is_zero());
            PairCochain c2 = random_pair_cochain(rng, d, m, 2);
            CHECK(big.delta_lifted(pair_delta_direct(np.pair, c2)).is_zero());
        }
    }
}

TEST_CASE("degree limits") {
    RAlgebra A = a2();
    RPair P{A, adjoint_rep(A)};
    try {
        pair_delta_direct(P, pair_cochain_zero(2, 2, 3));
        FAIL("expected UnsupportedDegree");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedDegree);
    }
    PairComplex cx(P);
    try {
        cx.delta_sparse(3);
        FAIL("expected DegreeCapExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeCapExceeded);
    }
    RRep bad = adjoint_rep(A);
    bad.rho[0](0, 0) = 1;
    CHECK_THROWS_AS(PairComplex(RPair{A, bad}), Error);
}

TEST_CASE("pair cohomology dimensions") {
    // abelian algebra with the zero representation: Delta = 0
    RPair Z{abelian(2), zero_rep(2, 3)};
    CHECK(pair_cohomology_dim(Z, 1) == 2 * 2 + 3 * 3);
    std::mt19937_64 rng(45);
    auto cases = corpus(rng, 4);
    for (const auto& np : cases) {
        INFO(np.name);
        PairComplex cx(np.pair);
        RMatrix D1 = cx.delta_matrix(1), D2 = cx.delta_matrix(2);
        CHECK((D2 * D1).is_zero());
        int h1 = cx.cohomology_dim(1), h2 = cx.cohomology_dim(2);
        CHECK(h1 == static_cast<int>(oracle::kernel_basis(D1).size()));
        CHECK(h2 == static_cast<int>(oracle::kernel_basis(D2).size()) - oracle::bareiss_rank(D1));
        CHECK(h1 >= 0);
        CHECK(h2 >= 0);
    }
}

TEST_CASE("degree-1 coboundary matches the displayed component formulas") {
    // Displayed: Delta_I(f)_2(x,v) = rho(x)f2(v) + rho(f1 x)v - f2(rho(x)v),
    // Delta_II(f)_2(x,y,v) = D(x,y)f2(v) + D(f1 x,y)v + D(x,f1 y)v - f2(D(x,y)v),
    // Delta_II(f)_3(v,x,y) = mu(x,y)f2(v) + mu(f1 x,y)v + mu(x,f1 y)v - f2(mu(x,y)v).
    // The last one is the full lifted value on (v ^ x, y); the stored
    // g3-component excludes the g2 part that lift rule (b) places there:
    //   g3((x,v), y) = -Delta_II(f)_3(v,x,y) - Delta_II(f)_2(y,x,v).
    std::mt19937_64 rng(46);
    auto cases = corpus(rng, 5);
    for (const auto& np : cases) {
        INFO(np.name);
        const RAlgebra& A = np.pair.algebra;
        const RRep& R = np.pair.rep;
        const int d = A.dim, m = R.module_dim;
        OpTable<Rational> D = derived_D(A, R);
        PairCochain c = random_pair_cochain(rng, d, m, 1);
        RMatrix F1(d, d), F2(m, m);
        for (int a = 0; a < d; ++a)
            for (int o = 0; o < d; ++o) F1(o, a) = c.at("f1", {a}, o);
        for (int a = 0; a < m; ++a)
            for (int o = 0; o < m; ++o) F2(o, a) = c.at("f2", {a}, o);
        PairCochain out = pair_delta_direct(np.pair, c);
        CHECK(out == pair_delta_lifted(np.pair, c));
        WedgeBasis wb(d);
        for (int a = 0; a < d; ++a) {
            auto x = unit_vec<Rational>(d, a);
            for (int b = 0; b < m; ++b) {
                auto v = unit_vec<Rational>(m, b);
                Vec<Rational> f2x = R.rho_of(x).apply(F2.apply(v)) + R.rho_of(F1.apply(x)).apply(v) -
                                    F2.apply(R.rho_of(x).apply(v));
                for (int o = 0; o < m; ++o) CHECK(out.at("f2", {a * m + b}, o) == f2x[o]);
                for (int cc = 0; cc < d; ++cc) {
                    auto y = unit_vec<Rational>(d, cc);
                    Vec<Rational> d3 = R.mu_of(x, y).apply(F2.apply(v)) + R.mu_of(F1.apply(x), y).apply(v) +
                                       R.mu_of(x, F1.apply(y)).apply(v) - F2.apply(R.mu_of(x, y).apply(v));
                    Vec<Rational> d2 = D.of(y, x).apply(F2.apply(v)) + D.of(F1.apply(y), x).apply(v) +
                                       D.of(y, F1.apply(x)).apply(v) - F2.apply(D.of(y, x).apply(v));
                    Vec<Rational> want = scaled(Rational(-1), d3) - d2;
                    for (int o = 0; o < m; ++o) CHECK(out.at("g3_1", {a * m + b, cc}, o) == want[o]);
                }
            }
        }
        for (int w = 0; w < wb.size(); ++w) {
            auto [p, q] = wb.pairs[w];
            auto x = unit_vec<Rational>(d, p), y = unit_vec<Rational>(d, q);
            for (int b = 0; b < m; ++b) {
                auto v = unit_vec<Rational>(m, b);
                Vec<Rational> g2 = D.of(x, y).apply(F2.apply(v)) + D.of(F1.apply(x), y).apply(v) +
                                   D.of(x, F1.apply(y)).apply(v) - F2.apply(D.of(x, y).apply(v));
                for (int o = 0; o < m; ++o) CHECK(out.at("g2", {w, b}, o) == g2[o]);
            }
        }
    }
}
