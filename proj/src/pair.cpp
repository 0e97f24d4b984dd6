#include "lya/pair.hpp"

#include "lya/linalg.hpp"

#include <functional>
#include <string>

namespace lya {

// ---------------------------------------------------------------------------
// Layout

PairLayout::PairLayout(int d_, int m_, int p) : d(d_), m(m_), degree(p) {
    require_dims(p >= 1, "pair cochain degree must be at least 1");
    size_t off = 0;
    auto add = [&](std::string name, std::vector<SlotKind> slots, bool g_valued) {
        PairBlock b{std::move(name), std::move(slots), g_valued, off, 0};
        size_t s = g_valued ? d : m;
        for (SlotKind k : b.slots) s *= static_cast<size_t>(extent(k));
        b.size = s;
        off += s;
        blocks.push_back(std::move(b));
    };
    if (p == 1) {
        add("f1", {SlotKind::G}, true);
        add("f2", {SlotKind::V}, false);
        return;
    }
    const int n = p - 1;
    std::vector<SlotKind> wn(n, SlotKind::Wedge);
    auto with = [](std::vector<SlotKind> s, SlotKind k) {
        s.push_back(k);
        return s;
    };
    add("f1", wn, true);
    add("g1", with(wn, SlotKind::G), true);
    {
        std::vector<SlotKind> s(n - 1, SlotKind::Wedge);
        add("f2", with(s, SlotKind::Mixed), false);
    }
    add("g2", with(wn, SlotKind::V), false);
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<SlotKind> s = wn;
        s[i - 1] = SlotKind::Mixed;
        add("f3_" + std::to_string(i), s, false);
    }
    for (int j = 1; j <= n; ++j) {
        std::vector<SlotKind> s = wn;
        s[j - 1] = SlotKind::Mixed;
        add("g3_" + std::to_string(j), with(s, SlotKind::G), false);
    }
}

size_t PairLayout::size() const { return blocks.empty() ? 0 : blocks.back().offset + blocks.back().size; }

int PairLayout::block_id(const std::string& name) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].name == name) return static_cast<int>(i);
    fail(ErrorKind::DimMismatch, "no block '" + name + "' in a degree-" + std::to_string(degree) + " pair cochain");
}

int PairLayout::extent(SlotKind k) const {
    switch (k) {
        case SlotKind::Wedge: return d * (d - 1) / 2;
        case SlotKind::Mixed: return d * m;
        case SlotKind::G: return d;
        case SlotKind::V: return m;
    }
    return 0;
}

size_t PairLayout::index(const PairBlock& b, const std::vector<int>& slots, int out) const {
    require_dims(slots.size() == b.slots.size(), "wrong number of slot indices for block " + b.name);
    size_t idx = 0;
    for (size_t s = 0; s < slots.size(); ++s) {
        int e = extent(b.slots[s]);
        require_dims(slots[s] >= 0 && slots[s] < e, "slot index out of range in block " + b.name);
        idx = idx * e + slots[s];
    }
    require_dims(out >= 0 && static_cast<size_t>(out) < extent_out(b), "output index out of range");
    return b.offset + idx * extent_out(b) + out;
}

size_t pair_cochain_size(int d, int m, int degree) { return PairLayout(d, m, degree).size(); }

PairCochain pair_cochain_zero(int d, int m, int degree) {
    PairCochain c;
    c.degree = degree;
    c.d = d;
    c.m = m;
    c.data.assign(pair_cochain_size(d, m, degree), Rational(0));
    return c;
}

Rational& PairCochain::at(const std::string& block, const std::vector<int>& slots, int out) {
    PairLayout L = layout();
    return data[L.index(L.block(block), slots, out)];
}

const Rational& PairCochain::at(const std::string& block, const std::vector<int>& slots, int out) const {
    PairLayout L = layout();
    return data[L.index(L.block(block), slots, out)];
}

namespace {

// Visits every slot-index tuple of a block (row-major), then every output.
void for_each_entry(const PairLayout& L, const PairBlock& b,
                    const std::function<void(const std::vector<int>&, int, size_t)>& fn) {
    std::vector<int> ext;
    for (SlotKind k : b.slots) ext.push_back(L.extent(k));
    for (int e : ext)
        if (e == 0) return;
    std::vector<int> idx(ext.size(), 0);
    const int outs = static_cast<int>(L.extent_out(b));
    size_t flat = b.offset;
    while (true) {
        for (int o = 0; o < outs; ++o) fn(idx, o, flat++);
        int k = static_cast<int>(idx.size()) - 1;
        while (k >= 0 && ++idx[k] == ext[k]) idx[k--] = 0;
        if (k < 0) break;
    }
}

// Index bookkeeping between pair cochains and semidirect Yamaguti cochains.
struct LiftIndex {
    int d, m, N, p;
    WedgeBasis wg, ws;  // wedge bases of g and of g + V

    LiftIndex(int d_, int m_, int p_) : d(d_), m(m_), N(d_ + m_), p(p_), wg(d_), ws(d_ + m_) {}

    int wedge(int w) const { return ws.lookup(wg.pairs[w].first, wg.pairs[w].second).first; }
    int mixed(int am) const { return ws.lookup(am / m, d + am % m).first; }
    int semi_slot(SlotKind k, int i) const {
        switch (k) {
            case SlotKind::Wedge: return wedge(i);
            case SlotKind::Mixed: return mixed(i);
            case SlotKind::G: return i;
            case SlotKind::V: return d + i;
        }
        return -1;
    }
    // Semidirect flat index for a list of semidirect wedge indices, optional
    // plain last argument (-1 if none) and semidirect output coordinate.
    size_t semi_index(const std::vector<int>& wsi, int plain, int out) const {
        if (p == 1) return static_cast<size_t>(plain) * N + out;
        size_t idx = 0;
        for (int w : wsi) idx = idx * ws.size() + w;
        if (plain < 0) return idx * N + out;
        return ycochain_f_size(N, N, p) + (idx * N + plain) * N + out;
    }
    // The primary semidirect position of a pair-cochain entry.
    size_t primary(const PairBlock& b, const std::vector<int>& slots, int out) const {
        std::vector<int> wsi;
        int plain = -1;
        for (size_t s = 0; s < slots.size(); ++s) {
            SlotKind k = b.slots[s];
            if (k == SlotKind::G || k == SlotKind::V)
                plain = semi_slot(k, slots[s]);
            else
                wsi.push_back(semi_slot(k, slots[s]));
        }
        return semi_index(wsi, plain, b.g_valued ? out : d + out);
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// The complex

PairComplex::PairComplex(const LieYRepPair<Rational>& P, int cap)
    : pair_(P), d_(P.algebra.dim), m_(P.rep.module_dim), cap_(cap), semi_(semidirect(P.algebra, P.rep)) {
    ycx_ = std::make_unique<YamagutiComplex>(semi_, adjoint_rep(semi_), cap_);
}

SparseMatrix PairComplex::build_lift(int p) const {
    PairLayout L(d_, m_, p);
    LiftIndex ix(d_, m_, p);
    const int N = d_ + m_;
    SparseMatrix S(static_cast<int>(ycochain_size(N, N, p)), static_cast<int>(L.size()));
    for (const auto& b : L.blocks) {
        const bool is_g2 = p >= 2 && b.name == "g2";
        for_each_entry(L, b, [&](const std::vector<int>& slots, int out, size_t col) {
            S.row[ix.primary(b, slots, out)].emplace_back(static_cast<int>(col), Rational(1));
            if (!is_g2) return;
            // g2(.., x_n ^ y_n, w) also feeds the mixed last-slot entries:
            // ghat(.., e_a ^ v_beta, e_c) picks up g2(.., e_c ^ e_a, v_beta).
            const int n = p - 1;
            auto [pp, qq] = ix.wg.pairs[slots[n - 1]];
            const int beta = slots[n];
            std::vector<int> wsi;
            for (int s = 0; s < n - 1; ++s) wsi.push_back(ix.wedge(slots[s]));
            auto emit = [&](int a, int c, int sign) {
                std::vector<int> w = wsi;
                w.push_back(ix.mixed(a * m_ + beta));
                S.row[ix.semi_index(w, c, d_ + out)].emplace_back(static_cast<int>(col), Rational(sign));
            };
            emit(qq, pp, 1);
            emit(pp, qq, -1);
        });
    }
    for (auto& r : S.row) r = SparseMatrix::normalize(std::move(r));
    return S;
}

SparseMatrix PairComplex::build_project(int p) const {
    PairLayout L(d_, m_, p);
    LiftIndex ix(d_, m_, p);
    const int N = d_ + m_;
    SparseMatrix S(static_cast<int>(L.size()), static_cast<int>(ycochain_size(N, N, p)));
    const std::string last_g3 = "g3_" + std::to_string(p - 1);
    for (const auto& b : L.blocks) {
        const bool correct = p >= 2 && b.name == last_g3;
        for_each_entry(L, b, [&](const std::vector<int>& slots, int out, size_t row) {
            SparseMatrix::Row r{{static_cast<int>(ix.primary(b, slots, out)), Rational(1)}};
            if (correct) {
                // subtract the g2 contribution carried by the same entry
                const int n = p - 1;
                const int a = slots[n - 1] / m_, beta = slots[n - 1] % m_, c = slots[n];
                auto [w, s] = ix.wg.lookup(c, a);
                if (s != 0) {
                    std::vector<int> wsi;
                    for (int k = 0; k < n - 1; ++k) wsi.push_back(ix.wedge(slots[k]));
                    wsi.push_back(ix.wedge(w));
                    r.emplace_back(static_cast<int>(ix.semi_index(wsi, d_ + beta, d_ + out)), Rational(-s));
                }
            }
            S.row[row] = SparseMatrix::normalize(std::move(r));
        });
    }
    return S;
}

const SparseMatrix& PairComplex::lift_matrix(int p) {
    auto it = lift_.find(p);
    if (it != lift_.end()) return it->second;
    return lift_.emplace(p, build_lift(p)).first->second;
}

const SparseMatrix& PairComplex::project_matrix(int p) {
    auto it = proj_.find(p);
    if (it != proj_.end()) return it->second;
    return proj_.emplace(p, build_project(p)).first->second;
}

YamagutiCochain PairComplex::lift(const PairCochain& c) {
    require_dims(c.d == d_ && c.m == m_ && c.data.size() == dim(c.degree), "cochain does not match the pair");
    const int N = d_ + m_;
    return unflatten_ycochain(N, N, c.degree, lift_matrix(c.degree).apply(c.data));
}

PairCochain PairComplex::project(const YamagutiCochain& c) {
    const int N = d_ + m_;
    require_dims(c.d == N && c.m == N, "cochain is not on the semidirect product");
    Vec<Rational> v = flatten(c);
    PairCochain out = pair_cochain_zero(d_, m_, c.degree);
    out.data = project_matrix(c.degree).apply(v);
    if (lift_matrix(c.degree).apply(out.data) != v)
        fail(ErrorKind::NotInSubcomplex, "cochain is not the lift of a pair cochain");
    return out;
}

const SparseMatrix& PairComplex::delta_sparse(int p) {
    if (p < 1) fail(ErrorKind::DimMismatch, "cochain degree must be at least 1");
    if (p + 1 > cap_)
        fail(ErrorKind::DegreeCapExceeded,
             "degree " + std::to_string(p + 1) + " exceeds the pair-complex cap " + std::to_string(cap_));
    auto it = delta_.find(p);
    if (it != delta_.end()) return it->second;
    SparseMatrix M = ycx_->delta_sparse(p) * lift_matrix(p);
    SparseMatrix D = project_matrix(p + 1) * M;
    if (!(lift_matrix(p + 1) * D == M))
        fail(ErrorKind::NotInSubcomplex,
             "the semidirect coboundary leaves the lifted subspace in degree " + std::to_string(p + 1));
    return delta_.emplace(p, std::move(D)).first->second;
}

PairCochain PairComplex::delta_lifted(const PairCochain& c) {
    require_dims(c.d == d_ && c.m == m_ && c.data.size() == dim(c.degree), "cochain does not match the pair");
    PairCochain out = pair_cochain_zero(d_, m_, c.degree + 1);
    out.data = delta_sparse(c.degree).apply(c.data);
    return out;
}

int PairComplex::cohomology_dim(int p) {
    int nullity = nullspace_dim(delta_matrix(p));
    if (p == 1) return nullity;
    return nullity - rank(delta_matrix(p - 1));
}

// ---------------------------------------------------------------------------
// Direct formulas

namespace {

using V = Vec<Rational>;

struct Ctx {
    const Algebra<Rational>& A;
    const Representation<Rational>& R;
    OpTable<Rational> Dt;
    int d, m;
    WedgeBasis wb;

    explicit Ctx(const LieYRepPair<Rational>& P)
        : A(P.algebra), R(P.rep), Dt(derived_D(P.algebra, P.rep)), d(P.algebra.dim), m(P.rep.module_dim),
          wb(P.algebra.dim) {}

    V br(const V& x, const V& y) const { return bracket(A, x, y); }
    V tr(const V& x, const V& y, const V& z) const { return triple(A, x, y, z); }
    V rho(const V& x, const V& v) const { return R.rho_of(x).apply(v); }
    V mu(const V& x, const V& y, const V& v) const { return R.mu_of(x, y).apply(v); }
    V D(const V& x, const V& y, const V& v) const { return Dt.of(x, y).apply(v); }

    V wedge_coords(const V& x, const V& y) const {
        V c(wb.size());
        for (int k = 0; k < wb.size(); ++k) {
            auto [a, b] = wb.pairs[k];
            c[k] = x[a] * y[b] - x[b] * y[a];
        }
        return c;
    }
    V mixed_coords(const V& x, const V& v) const {
        V c(static_cast<size_t>(d) * m);
        for (int a = 0; a < d; ++a)
            if (!x[a].is_zero())
                for (int b = 0; b < m; ++b) c[a * m + b] = x[a] * v[b];
        return c;
    }
};

// Evaluates a block multilinearly on per-slot coordinate vectors.
V eval_block(const PairLayout& L, const PairCochain& c, const PairBlock& b, const std::vector<V>& coords) {
    const size_t outs = L.extent_out(b);
    V out(outs);
    std::vector<int> ext;
    for (SlotKind k : b.slots) ext.push_back(L.extent(k));
    const int ns = static_cast<int>(ext.size());
    std::function<void(int, size_t, const Rational&)> rec = [&](int s, size_t idx, const Rational& coef) {
        if (s == ns) {
            size_t base = b.offset + idx * outs;
            for (size_t o = 0; o < outs; ++o)
                if (!c.data[base + o].is_zero()) out[o] += coef * c.data[base + o];
            return;
        }
        for (int i = 0; i < ext[s]; ++i) {
            if (coords[s][i].is_zero()) continue;
            rec(s + 1, idx * ext[s] + i, coef * coords[s][i]);
        }
    };
    rec(0, 0, Rational(1));
    return out;
}

// A basis argument: for wedges (x, y) = (e_a, e_b); for mixed (x, v) =
// (e_a, e_beta); for plain slots only `x` is used.
struct Arg {
    V x, y;
};

// Fills every entry of block `name` of `out` from a formula evaluated on basis
// arguments.
void fill(const Ctx& C, PairCochain& out, const std::string& name,
          const std::function<V(const std::vector<Arg>&)>& formula) {
    PairLayout L = out.layout();
    const PairBlock& b = L.block(name);
    std::vector<int> ext;
    for (SlotKind k : b.slots) ext.push_back(L.extent(k));
    for (int e : ext)
        if (e == 0) return;
    std::vector<int> idx(ext.size(), 0);
    const size_t outs = L.extent_out(b);
    size_t flat = b.offset;
    while (true) {
        std::vector<Arg> args;
        for (size_t s = 0; s < idx.size(); ++s) {
            switch (b.slots[s]) {
                case SlotKind::Wedge: {
                    auto [a, bb] = C.wb.pairs[idx[s]];
                    args.push_back({unit_vec<Rational>(C.d, a), unit_vec<Rational>(C.d, bb)});
                    break;
                }
                case SlotKind::Mixed:
                    args.push_back({unit_vec<Rational>(C.d, idx[s] / C.m), unit_vec<Rational>(C.m, idx[s] % C.m)});
                    break;
                case SlotKind::G: args.push_back({unit_vec<Rational>(C.d, idx[s]), {}}); break;
                case SlotKind::V: args.push_back({unit_vec<Rational>(C.m, idx[s]), {}}); break;
            }
        }
        V val = formula(args);
        for (size_t o = 0; o < outs; ++o) out.data[flat++] = val[o];
        int k = static_cast<int>(idx.size()) - 1;
        while (k >= 0 && ++idx[k] == ext[k]) idx[k--] = 0;
        if (k < 0) break;
    }
}

PairCochain direct_degree1(const Ctx& C, const PairCochain& c) {
    PairLayout L = c.layout();
    const PairBlock &bf1 = L.block("f1"), &bf2 = L.block("f2");
    auto F1 = [&](const V& x) { return eval_block(L, c, bf1, {x}); };
    auto F2 = [&](const V& v) { return eval_block(L, c, bf2, {v}); };
    PairCochain out = pair_cochain_zero(C.d, C.m, 2);
    // [x,F1 y] - [y,F1 x] - F1[x,y]
    fill(C, out, "f1", [&](const std::vector<Arg>& a) {
        const V &x = a[0].x, &y = a[0].y;
        return C.br(x, F1(y)) - C.br(y, F1(x)) - F1(C.br(x, y));
    });
    // <<x,y,F1 z>> + <<F1 x,y,z>> + <<x,F1 y,z>> - F1<<x,y,z>>
    fill(C, out, "g1", [&](const std::vector<Arg>& a) {
        const V &x = a[0].x, &y = a[0].y, &z = a[1].x;
        return C.tr(x, y, F1(z)) + C.tr(F1(x), y, z) + C.tr(x, F1(y), z) - F1(C.tr(x, y, z));
    });
    // rho(x)F2 v + rho(F1 x)v - F2 rho(x)v
    fill(C, out, "f2", [&](const std::vector<Arg>& a) {
        const V &x = a[0].x, &v = a[0].y;
        return C.rho(x, F2(v)) + C.rho(F1(x), v) - F2(C.rho(x, v));
    });
    auto g2 = [&](const V& x, const V& y, const V& v) {
        return C.D(x, y, F2(v)) + C.D(F1(x), y, v) + C.D(x, F1(y), v) - F2(C.D(x, y, v));
    };
    fill(C, out, "g2", [&](const std::vector<Arg>& a) { return g2(a[0].x, a[0].y, a[1].x); });
    // -mu(x,F1 z)v - mu(F1 x,z)v - mu(x,z)F2 v + F2 mu(x,z)v - g2(z^x, v)
    fill(C, out, "g3_1", [&](const std::vector<Arg>& a) {
        const V &x = a[0].x, &v = a[0].y, &z = a[1].x;
        return scaled(Rational(-1), C.mu(x, F1(z), v)) - C.mu(F1(x), z, v) - C.mu(x, z, F2(v)) + F2(C.mu(x, z, v)) -
               g2(z, x, v);
    });
    return out;
}

PairCochain direct_degree2(const Ctx& C, const PairCochain& c) {
    PairLayout L = c.layout();
    const PairBlock &bf1 = L.block("f1"), &bg1 = L.block("g1"), &bf2 = L.block("f2"), &bg2 = L.block("g2"),
                    &bg3 = L.block("g3_1");
    auto W = [&](const V& x, const V& y) { return C.wedge_coords(x, y); };
    auto F1 = [&](const V& x, const V& y) { return eval_block(L, c, bf1, {W(x, y)}); };
    auto G1 = [&](const V& x, const V& y, const V& z) { return eval_block(L, c, bg1, {W(x, y), z}); };
    auto F2 = [&](const V& x, const V& v) { return eval_block(L, c, bf2, {C.mixed_coords(x, v)}); };
    auto G2 = [&](const V& x, const V& y, const V& v) { return eval_block(L, c, bg2, {W(x, y), v}); };
    auto G3 = [&](const V& x, const V& v, const V& z) { return eval_block(L, c, bg3, {C.mixed_coords(x, v), z}); };
    // H_{x,v}(c) = G2(c^x, v) + G3((x,v), c)
    auto H = [&](const V& x, const V& v, const V& cc) { return G2(cc, x, v) + G3(x, v, cc); };
    // F1 and G1, G2 on X1 o X2 = <<x1,y1,x2>> ^ y2 + x2 ^ <<x1,y1,y2>>
    auto F1circ = [&](const V& x1, const V& y1, const V& x2, const V& y2) {
        return F1(C.tr(x1, y1, x2), y2) + F1(x2, C.tr(x1, y1, y2));
    };
    auto G1circ = [&](const V& x1, const V& y1, const V& x2, const V& y2, const V& z) {
        return G1(C.tr(x1, y1, x2), y2, z) + G1(x2, C.tr(x1, y1, y2), z);
    };
    auto G2circ = [&](const V& x1, const V& y1, const V& x2, const V& y2, const V& v) {
        return G2(C.tr(x1, y1, x2), y2, v) + G2(x2, C.tr(x1, y1, y2), v);
    };
    const Rational mone(-1);
    PairCochain out = pair_cochain_zero(C.d, C.m, 3);

    fill(C, out, "f1", [&](const std::vector<Arg>& a) {
        const V &x1 = a[0].x, &y1 = a[0].y, &x2 = a[1].x, &y2 = a[1].y;
        return scaled(mone, C.br(x2, G1(x1, y1, y2)) - C.br(y2, G1(x1, y1, x2)) - G1(x1, y1, C.br(x2, y2))) +
               C.tr(x1, y1, F1(x2, y2)) - F1circ(x1, y1, x2, y2);
    });
    fill(C, out, "g1", [&](const std::vector<Arg>& a) {
        const V &x1 = a[0].x, &y1 = a[0].y, &x2 = a[1].x, &y2 = a[1].y, &z = a[2].x;
        return scaled(mone, C.tr(G1(x1, y1, x2), y2, z)) + C.tr(G1(x1, y1, y2), x2, z) +
               C.tr(x1, y1, G1(x2, y2, z)) - C.tr(x2, y2, G1(x1, y1, z)) - G1circ(x1, y1, x2, y2, z) -
               G1(x2, y2, C.tr(x1, y1, z)) + G1(x1, y1, C.tr(x2, y2, z));
    });
    fill(C, out, "f2", [&](const std::vector<Arg>& a) {
        const V &x1 = a[0].x, &y1 = a[0].y, &x = a[1].x, &v = a[1].y;
        return scaled(mone, C.rho(x, G2(x1, y1, v))) - C.rho(G1(x1, y1, x), v) + G2(x1, y1, C.rho(x, v)) +
               C.D(x1, y1, F2(x, v)) - F2(C.tr(x1, y1, x), v) - F2(x, C.D(x1, y1, v));
    });
    auto g2 = [&](const V& x1, const V& y1, const V& x2, const V& y2, const V& v) {
        return scaled(mone, C.D(G1(x1, y1, x2), y2, v)) + C.D(G1(x1, y1, y2), x2, v) + C.D(x1, y1, G2(x2, y2, v)) -
               C.D(x2, y2, G2(x1, y1, v)) - G2circ(x1, y1, x2, y2, v) - G2(x2, y2, C.D(x1, y1, v)) +
               G2(x1, y1, C.D(x2, y2, v));
    };
    fill(C, out, "g2", [&](const std::vector<Arg>& a) { return g2(a[0].x, a[0].y, a[1].x, a[1].y, a[2].x); });
    fill(C, out, "f3_1", [&](const std::vector<Arg>& a) {
        const V &x = a[0].x, &v = a[0].y, &x2 = a[1].x, &y2 = a[1].y;
        return scaled(mone, C.rho(x2, H(x, v, y2))) + C.rho(y2, H(x, v, x2)) + H(x, v, C.br(x2, y2)) -
               C.mu(x, F1(x2, y2), v) + F2(x2, C.mu(x, y2, v)) - F2(y2, C.mu(x, x2, v));
    });
    fill(C, out, "g3_1", [&](const std::vector<Arg>& a) {
        const V &x = a[0].x, &v = a[0].y, &x2 = a[1].x, &y2 = a[1].y, &z = a[2].x;
        V u1 = C.mu(x, x2, v), u2 = C.mu(x, y2, v);
        return scaled(mone, C.mu(y2, z, H(x, v, x2))) + C.mu(x2, z, H(x, v, y2)) - C.mu(x, G1(x2, y2, z), v) -
               C.D(x2, y2, H(x, v, z)) - H(y2, u1, z) + H(x2, u2, z) + G2(x2, y2, C.mu(x, z, v)) +
               H(x, v, C.tr(x2, y2, z));
    });
    fill(C, out, "g3_2", [&](const std::vector<Arg>& a) {
        const V &x1 = a[0].x, &y1 = a[0].y, &x = a[1].x, &v = a[1].y, &z = a[2].x;
        return C.mu(G1(x1, y1, x), z, v) + C.mu(x, z, G2(x1, y1, v)) + C.D(x1, y1, H(x, v, z)) +
               C.mu(x, G1(x1, y1, z), v) - H(C.tr(x1, y1, x), v, z) - H(x, C.D(x1, y1, v), z) -
               H(x, v, C.tr(x1, y1, z)) - G2(x1, y1, C.mu(x, z, v)) - g2(x1, y1, z, x, v);
    });
    return out;
}

}  // namespace

PairCochain pair_delta_direct(const LieYRepPair<Rational>& P, const PairCochain& c) {
    require_compatible(P.algebra, P.rep);
    require_dims(c.d == P.algebra.dim && c.m == P.rep.module_dim &&
                     c.data.size() == pair_cochain_size(c.d, c.m, c.degree),
                 "cochain does not match the pair");
    Ctx C(P);
    if (c.degree == 1) return direct_degree1(C, c);
    if (c.degree == 2) return direct_degree2(C, c);
    fail(ErrorKind::UnsupportedDegree,
         "explicit formulas cover degrees 1 and 2; use the lifted coboundary for degree " +
             std::to_string(c.degree));
}

YamagutiCochain lift(const LieYRepPair<Rational>& P, const PairCochain& c) {
    PairComplex cx(P, c.degree + 1);
    return cx.lift(c);
}

PairCochain project(const LieYRepPair<Rational>& P, const YamagutiCochain& c) {
    PairComplex cx(P, c.degree + 1);
    return cx.project(c);
}

PairCochain pair_delta_lifted(const LieYRepPair<Rational>& P, const PairCochain& c, int cap) {
    PairComplex cx(P, cap);
    return cx.delta_lifted(c);
}

Matrix<Rational> pair_delta_matrix(const LieYRepPair<Rational>& P, int p, int cap) {
    PairComplex cx(P, cap);
    return cx.delta_matrix(p);
}

int pair_cohomology_dim(const LieYRepPair<Rational>& P, int p, int cap) {
    PairComplex cx(P, cap);
    return cx.cohomology_dim(p);
}

}  // namespace lya
