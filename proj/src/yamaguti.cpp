#include "lya/yamaguti.hpp"

#include "lya/linalg.hpp"

#include <string>

namespace lya {

WedgeBasis::WedgeBasis(int dim) : d(dim), index(static_cast<size_t>(dim) * dim, -1) {
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            index[a * d + b] = static_cast<int>(pairs.size());
            pairs.emplace_back(a, b);
        }
}

std::pair<int, int> WedgeBasis::lookup(int a, int b) const {
    if (a == b) return {0, 0};
    if (a < b) return {index[a * d + b], 1};
    return {index[b * d + a], -1};
}

bool YamagutiCochain::is_zero() const {
    for (const auto& x : f)
        if (!x.is_zero()) return false;
    for (const auto& x : g)
        if (!x.is_zero()) return false;
    return true;
}

namespace {
size_t ipow(size_t b, int e) {
    size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace

size_t ycochain_f_size(int d, int m, int p) {
    if (p == 1) return static_cast<size_t>(d) * m;
    size_t W = static_cast<size_t>(d) * (d - 1) / 2;
    return ipow(W, p - 1) * m;
}

size_t ycochain_g_size(int d, int m, int p) {
    if (p == 1) return 0;
    size_t W = static_cast<size_t>(d) * (d - 1) / 2;
    return ipow(W, p - 1) * d * m;
}

YamagutiCochain ycochain_zero(int d, int m, int p) {
    YamagutiCochain c;
    c.degree = p;
    c.d = d;
    c.m = m;
    c.f.assign(ycochain_f_size(d, m, p), Rational(0));
    c.g.assign(ycochain_g_size(d, m, p), Rational(0));
    return c;
}

Vec<Rational> flatten(const YamagutiCochain& c) {
    Vec<Rational> v = c.f;
    v.insert(v.end(), c.g.begin(), c.g.end());
    return v;
}

YamagutiCochain unflatten_ycochain(int d, int m, int p, const Vec<Rational>& v) {
    YamagutiCochain c = ycochain_zero(d, m, p);
    require_dims(v.size() == c.f.size() + c.g.size(), "flattened cochain has the wrong length");
    std::copy(v.begin(), v.begin() + static_cast<long>(c.f.size()), c.f.begin());
    std::copy(v.begin() + static_cast<long>(c.f.size()), v.end(), c.g.begin());
    return c;
}

YamagutiComplex::YamagutiComplex(const Algebra<Rational>& A, const Representation<Rational>& R, int cap)
    : d_(A.dim), m_(R.module_dim), cap_(cap), wb_(A.dim) {
    require_compatible(A, R);
    const int d = d_;
    br_.resize(static_cast<size_t>(d) * d);
    tr_.resize(static_cast<size_t>(d) * d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            for (int c = 0; c < d; ++c)
                if (!A.binary(a, b, c).is_zero()) br_[a * d + b].emplace_back(c, A.binary(a, b, c));
            for (int c = 0; c < d; ++c)
                for (int l = 0; l < d; ++l)
                    if (!A.ternary(a, b, c, l).is_zero()) tr_[(a * d + b) * d + c].emplace_back(l, A.ternary(a, b, c, l));
        }
    rho_ = R.rho;
    mu_ = R.mu.m;
    OpTable<Rational> D = derived_D(A, R);
    const int W = wb_.size();
    for (int w = 0; w < W; ++w) dw_.push_back(D.at(wb_.pairs[w].first, wb_.pairs[w].second));
    circ_.resize(static_cast<size_t>(W) * W);
    for (int w1 = 0; w1 < W; ++w1)
        for (int w2 = 0; w2 < W; ++w2) {
            auto [x1, y1] = wb_.pairs[w1];
            auto [x2, y2] = wb_.pairs[w2];
            Terms t;
            // <<x1,y1,x2>> ^ y2 + x2 ^ <<x1,y1,y2>>
            for (const auto& [l, c] : tr_[(x1 * d + y1) * d + x2]) {
                auto [w, s] = wb_.lookup(l, y2);
                if (s) t.emplace_back(w, s > 0 ? c : -c);
            }
            for (const auto& [l, c] : tr_[(x1 * d + y1) * d + y2]) {
                auto [w, s] = wb_.lookup(x2, l);
                if (s) t.emplace_back(w, s > 0 ? c : -c);
            }
            circ_[w1 * W + w2] = SparseMatrix::normalize(std::move(t));
        }
}

int YamagutiComplex::f_index(const int* ws, int n, int o) const {
    int idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * wb_.size() + ws[i];
    return idx * m_ + o;
}

int YamagutiComplex::g_index(const int* ws, int n, int c, int o, int p) const {
    int idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * wb_.size() + ws[i];
    return static_cast<int>(ycochain_f_size(d_, m_, p)) + (idx * d_ + c) * m_ + o;
}

const SparseMatrix& YamagutiComplex::delta_sparse(int p) {
    if (p < 1) fail(ErrorKind::DimMismatch, "cochain degree must be at least 1");
    if (p + 1 > cap_)
        fail(ErrorKind::DegreeCapExceeded,
             "degree " + std::to_string(p + 1) + " exceeds the cap " + std::to_string(cap_));
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(p, build(p)).first->second;
}

// Row-by-row construction of the coboundary C^p -> C^{p+1}. Every output
// entry is a linear combination of input entries; we emit those coefficients.
SparseMatrix YamagutiComplex::build(int p) const {
    const int d = d_, m = m_, W = wb_.size();
    const int rows = static_cast<int>(ycochain_size(d, m, p + 1));
    const int cols = static_cast<int>(ycochain_size(d, m, p));
    SparseMatrix S(rows, cols);
    Terms t;

    auto add_mat_col = [&](const Matrix<Rational>& M, int o, int sign, auto&& index_of_q) {
        for (int q = 0; q < m; ++q) {
            const Rational& v = M(o, q);
            if (v.is_zero()) continue;
            t.emplace_back(index_of_q(q), sign > 0 ? v : -v);
        }
    };

    if (p == 1) {
        // f'(x^y) = rho(x)f(y) - rho(y)f(x) - f([x,y])
        // g'(x^y,z) = D(x,y)f(z) + mu(y,z)f(x) - mu(x,z)f(y) - f(<<x,y,z>>)
        auto fidx = [&](int a, int q) { return a * m + q; };
        int row = 0;
        for (int w = 0; w < W; ++w) {
            auto [x, y] = wb_.pairs[w];
            for (int o = 0; o < m; ++o, ++row) {
                t.clear();
                add_mat_col(rho_[x], o, +1, [&](int q) { return fidx(y, q); });
                add_mat_col(rho_[y], o, -1, [&](int q) { return fidx(x, q); });
                for (const auto& [c, v] : br_[x * d + y]) t.emplace_back(fidx(c, o), -v);
                S.row[row] = SparseMatrix::normalize(t);
            }
        }
        for (int w = 0; w < W; ++w) {
            auto [x, y] = wb_.pairs[w];
            for (int z = 0; z < d; ++z)
                for (int o = 0; o < m; ++o, ++row) {
                    t.clear();
                    add_mat_col(dw_[w], o, +1, [&](int q) { return fidx(z, q); });
                    add_mat_col(mu_[y * d + z], o, +1, [&](int q) { return fidx(x, q); });
                    add_mat_col(mu_[x * d + z], o, -1, [&](int q) { return fidx(y, q); });
                    for (const auto& [c, v] : tr_[(x * d + y) * d + z]) t.emplace_back(fidx(c, o), -v);
                    S.row[row] = SparseMatrix::normalize(t);
                }
        }
        return S;
    }

    const int n = p - 1;      // input has n wedge slots
    const int N = n + 1;      // output has n+1 wedge slots
    const int sn = (n % 2 == 0) ? 1 : -1;  // (-1)^n
    std::vector<int> ws(N, 0), tmp(N);
    auto alt = [](int k) { return (k % 2 == 0) ? 1 : -1; };  // (-1)^k

    // Sequence with slot k (0-based) removed.
    auto without = [&](int k) {
        int j = 0;
        for (int i = 0; i < N; ++i)
            if (i != k) tmp[j++] = ws[i];
    };

    const size_t n_tuples = ipow(static_cast<size_t>(W), N);
    int row = 0;
    // delta_I rows
    for (size_t tup = 0; tup < n_tuples; ++tup) {
        size_t r = tup;
        for (int i = N - 1; i >= 0; --i) {
            ws[i] = static_cast<int>(r % W);
            r /= W;
        }
        auto [x, y] = wb_.pairs[ws[N - 1]];
        for (int o = 0; o < m; ++o, ++row) {
            t.clear();
            const int* pre = ws.data();
            add_mat_col(rho_[x], o, sn, [&](int q) { return g_index(pre, n, y, q, p); });
            add_mat_col(rho_[y], o, -sn, [&](int q) { return g_index(pre, n, x, q, p); });
            for (const auto& [c, v] : br_[x * d + y]) t.emplace_back(g_index(pre, n, c, o, p), sn > 0 ? -v : v);
            for (int k = 0; k < n; ++k) {  // 1-based index k+1 runs 1..n
                without(k);
                add_mat_col(dw_[ws[k]], o, alt(k), [&](int q) { return f_index(tmp.data(), n, q); });
            }
            for (int k = 0; k < N; ++k)
                for (int l = k + 1; l < N; ++l) {
                    const int sign = -alt(k);  // (-1)^{k+1} with 1-based k
                    for (const auto& [w, c] : circ_[ws[k] * W + ws[l]]) {
                        without(k);
                        tmp[l - 1] = w;
                        t.emplace_back(f_index(tmp.data(), n, o), sign > 0 ? c : -c);
                    }
                }
            S.row[row] = SparseMatrix::normalize(t);
        }
    }
    // delta_II rows
    for (size_t tup = 0; tup < n_tuples; ++tup) {
        size_t r = tup;
        for (int i = N - 1; i >= 0; --i) {
            ws[i] = static_cast<int>(r % W);
            r /= W;
        }
        auto [x, y] = wb_.pairs[ws[N - 1]];
        for (int z = 0; z < d; ++z)
            for (int o = 0; o < m; ++o, ++row) {
                t.clear();
                const int* pre = ws.data();
                add_mat_col(mu_[y * d + z], o, sn, [&](int q) { return g_index(pre, n, x, q, p); });
                add_mat_col(mu_[x * d + z], o, -sn, [&](int q) { return g_index(pre, n, y, q, p); });
                for (int k = 0; k < N; ++k) {
                    without(k);
                    add_mat_col(dw_[ws[k]], o, alt(k), [&](int q) { return g_index(tmp.data(), n, z, q, p); });
                }
                for (int k = 0; k < N; ++k)
                    for (int l = k + 1; l < N; ++l) {
                        const int sign = -alt(k);
                        for (const auto& [w, c] : circ_[ws[k] * W + ws[l]]) {
                            without(k);
                            tmp[l - 1] = w;
                            t.emplace_back(g_index(tmp.data(), n, z, o, p), sign > 0 ? c : -c);
                        }
                    }
                for (int k = 0; k < N; ++k) {
                    const int sign = -alt(k);  // (-1)^{k} with 1-based k
                    auto [xk, yk] = wb_.pairs[ws[k]];
                    without(k);
                    for (const auto& [c, v] : tr_[(xk * d + yk) * d + z])
                        t.emplace_back(g_index(tmp.data(), n, c, o, p), sign > 0 ? v : -v);
                }
                S.row[row] = SparseMatrix::normalize(t);
            }
    }
    return S;
}

YamagutiCochain YamagutiComplex::delta(const YamagutiCochain& c) {
    require_dims(c.d == d_ && c.m == m_, "cochain does not match the complex");
    const SparseMatrix& S = delta_sparse(c.degree);
    return unflatten_ycochain(d_, m_, c.degree + 1, S.apply(flatten(c)));
}

int YamagutiComplex::cohomology_dim(int p) {
    int nullity = nullspace_dim(delta_matrix(p));
    if (p == 1) return nullity;
    return nullity - rank(delta_matrix(p - 1));
}

YamagutiCochain delta(const Algebra<Rational>& A, const Representation<Rational>& R, const YamagutiCochain& c,
                      int cap) {
    YamagutiComplex cx(A, R, cap);
    return cx.delta(c);
}

Matrix<Rational> delta_matrix(const Algebra<Rational>& A, const Representation<Rational>& R, int p, int cap) {
    YamagutiComplex cx(A, R, cap);
    return cx.delta_matrix(p);
}

int cohomology_dim(const Algebra<Rational>& A, const Representation<Rational>& R, int p, int cap) {
    YamagutiComplex cx(A, R, cap);
    return cx.cohomology_dim(p);
}

}  // namespace lya
