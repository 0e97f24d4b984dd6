#pragma once

#include "lya/matrix.hpp"
#include "lya/report.hpp"

#include <string>
#include <vector>

namespace lya {

// Lie-Yamaguti algebra given by structure constants:
//   [e_i, e_j]      = sum_k binary(i,j,k) e_k
//   <<e_i,e_j,e_k>> = sum_l ternary(i,j,k,l) e_l
template <class S>
struct Algebra {
    int dim = 0;
    std::vector<std::string> basis;
    Tensor<S> binary;
    Tensor<S> ternary;

    Algebra() : binary({0, 0, 0}), ternary({0, 0, 0, 0}) {}
    explicit Algebra(int n) : dim(n), binary({n, n, n}), ternary({n, n, n, n}) {
        for (int i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
    }

    // Sets [e_i,e_j] = v and [e_j,e_i] = -v.
    void set_bracket(int i, int j, const Vec<S>& v) {
        for (int k = 0; k < dim; ++k) {
            binary(i, j, k) = v[k];
            binary(j, i, k) = -v[k];
        }
    }
    // Sets <<e_i,e_j,e_k>> = v and <<e_j,e_i,e_k>> = -v.
    void set_triple(int i, int j, int k, const Vec<S>& v) {
        for (int l = 0; l < dim; ++l) {
            ternary(i, j, k, l) = v[l];
            ternary(j, i, k, l) = -v[l];
        }
    }
};

template <class S>
Vec<S> bracket(const Algebra<S>& A, const Vec<S>& x, const Vec<S>& y) {
    const int n = A.dim;
    require_dims(static_cast<int>(x.size()) == n && static_cast<int>(y.size()) == n, "bracket arguments");
    Vec<S> out(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(y[j])) continue;
            S c = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                const S& b = A.binary(i, j, k);
                if (!is_zero(b)) out[k] += c * b;
            }
        }
    }
    return out;
}

template <class S>
Vec<S> triple(const Algebra<S>& A, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
    const int n = A.dim;
    require_dims(static_cast<int>(x.size()) == n && static_cast<int>(y.size()) == n &&
                     static_cast<int>(z.size()) == n,
                 "triple arguments");
    Vec<S> out(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(y[j])) continue;
            S c = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                if (is_zero(z[k])) continue;
                S cz = c * z[k];
                for (int l = 0; l < n; ++l) {
                    const S& t = A.ternary(i, j, k, l);
                    if (!is_zero(t)) out[l] += cz * t;
                }
            }
        }
    }
    return out;
}

// Antisymmetry of both tensors in their first two slots.
template <class S>
Check check_antisymmetry(const Algebra<S>& A) {
    const int n = A.dim;
    const std::string rule = "[x,y] = -[y,x], <<x,y,z>> = -<<y,x,z>>";
    Check c = scan_tuples<S>("antisymmetry", rule, {n, n, n}, [&](const std::vector<int>& t) {
        Vec<S> r(n);
        for (int k = 0; k < n; ++k) r[k] = A.binary(t[0], t[1], k) + A.binary(t[1], t[0], k);
        Vec<S> r2(n);
        for (int l = 0; l < n; ++l) r2[l] = A.ternary(t[0], t[1], t[2], l) + A.ternary(t[1], t[0], t[2], l);
        r.insert(r.end(), r2.begin(), r2.end());
        return r;
    });
    return c;
}

template <class S>
Report check_axioms(const Algebra<S>& A) {
    const int n = A.dim;
    Report rep;
    rep.subject = "Lie-Yamaguti axioms (dim " + std::to_string(n) + ")";
    rep.add(check_antisymmetry(A));
    auto E = [&](int i) { return unit_vec<S>(n, i); };
    auto br = [&](const Vec<S>& x, const Vec<S>& y) { return bracket(A, x, y); };
    auto tr = [&](const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) { return triple(A, x, y, z); };

    rep.add(scan_tuples<S>("LY1", "[[x,y],z] + [[y,z],x] + [[z,x],y] + <<x,y,z>> + <<y,z,x>> + <<z,x,y>> = 0",
                           {n, n, n}, [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]);
                               return br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y) + tr(x, y, z) +
                                      tr(y, z, x) + tr(z, x, y);
                           }));
    rep.add(scan_tuples<S>("LY2", "<<[x,y],z,w>> + <<[y,z],x,w>> + <<[z,x],y,w>> = 0", {n, n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]), w = E(t[3]);
                               return tr(br(x, y), z, w) + tr(br(y, z), x, w) + tr(br(z, x), y, w);
                           }));
    rep.add(scan_tuples<S>("LY3", "<<x,y,[z,w]>> = [<<x,y,z>>,w] + [z,<<x,y,w>>]", {n, n, n, n},
                           [&](const std::vector<int>& t) {
                               Vec<S> x = E(t[0]), y = E(t[1]), z = E(t[2]), w = E(t[3]);
                               return tr(x, y, br(z, w)) - br(tr(x, y, z), w) - br(z, tr(x, y, w));
                           }));
    // LY4 touches dim^5 tuples; cache the basis triples.
    std::vector<Vec<S>> T(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) T[(i * n + j) * n + k] = tr(E(i), E(j), E(k));
    auto Tb = [&](int i, int j, int k) -> const Vec<S>& { return T[(i * n + j) * n + k]; };
    rep.add(scan_tuples<S>(
        "LY4", "<<x,y,<<z,w,t>>>> = <<<<x,y,z>>,w,t>> + <<z,<<x,y,w>>,t>> + <<z,w,<<x,y,t>>>>", {n, n, n, n, n},
        [&](const std::vector<int>& q) {
            Vec<S> x = E(q[0]), y = E(q[1]), z = E(q[2]), w = E(q[3]), t = E(q[4]);
            return tr(x, y, Tb(q[2], q[3], q[4])) - tr(Tb(q[0], q[1], q[2]), w, t) - tr(z, Tb(q[0], q[1], q[3]), t) -
                   tr(z, w, Tb(q[0], q[1], q[4]));
        }));
    return rep;
}

template <class S>
Report homomorphism_report(const Matrix<S>& phi, const Algebra<S>& A, const Algebra<S>& B) {
    require_dims(phi.rows() == B.dim && phi.cols() == A.dim, "homomorphism shape");
    const int n = A.dim;
    Report rep;
    rep.subject = "algebra homomorphism";
    auto E = [&](int i) { return unit_vec<S>(n, i); };
    auto P = [&](const Vec<S>& x) { return phi.apply(x); };
    rep.add(scan_tuples<S>("hom-bracket", "phi[x,y] = [phi x, phi y]", {n, n}, [&](const std::vector<int>& t) {
        return P(bracket(A, E(t[0]), E(t[1]))) - bracket(B, P(E(t[0])), P(E(t[1])));
    }));
    rep.add(scan_tuples<S>("hom-triple", "phi<<x,y,z>> = <<phi x, phi y, phi z>>", {n, n, n},
                           [&](const std::vector<int>& t) {
                               return P(triple(A, E(t[0]), E(t[1]), E(t[2]))) -
                                      triple(B, P(E(t[0])), P(E(t[1])), P(E(t[2])));
                           }));
    return rep;
}

template <class S>
bool is_homomorphism(const Matrix<S>& phi, const Algebra<S>& A, const Algebra<S>& B) {
    return homomorphism_report(phi, A, B).ok();
}

// The N-deformed brackets [x,y]_N = [Nx,y] + [x,Ny] - N[x,y] and
// <<x,y,z>>_N = <<Nx,Ny,z>> + <<x,Ny,Nz>> + <<Nx,y,Nz>> - N phi1(x,y,z), where
// phi1(x,y,z) = <<Nx,y,z>> + <<x,Ny,z>> + <<x,y,Nz>> - N<<x,y,z>>.
template <class S>
Algebra<S> deformed_algebra(const Algebra<S>& A, const Matrix<S>& N) {
    const int n = A.dim;
    require_dims(N.rows() == n && N.cols() == n, "deforming map must be dim x dim");
    Algebra<S> out(n);
    out.basis = A.basis;
    auto E = [&](int i) { return unit_vec<S>(n, i); };
    auto M = [&](const Vec<S>& x) { return N.apply(x); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<S> x = E(i), y = E(j);
            Vec<S> b = bracket(A, M(x), y) + bracket(A, x, M(y)) - M(bracket(A, x, y));
            for (int k = 0; k < n; ++k) out.binary(i, j, k) = b[k];
            for (int k = 0; k < n; ++k) {
                Vec<S> z = E(k);
                Vec<S> phi1 = triple(A, M(x), y, z) + triple(A, x, M(y), z) + triple(A, x, y, M(z)) -
                              M(triple(A, x, y, z));
                Vec<S> phi2 = triple(A, M(x), M(y), z) + triple(A, x, M(y), M(z)) + triple(A, M(x), y, M(z)) - M(phi1);
                for (int l = 0; l < n; ++l) out.ternary(i, j, k, l) = phi2[l];
            }
        }
    return out;
}

template <class S>
Report nijenhuis_report(const Algebra<S>& A, const Matrix<S>& N) {
    const int n = A.dim;
    require_dims(N.rows() == n && N.cols() == n, "Nijenhuis candidate must be dim x dim");
    Algebra<S> D = deformed_algebra(A, N);
    Report rep;
    rep.subject = "Nijenhuis operator";
    auto E = [&](int i) { return unit_vec<S>(n, i); };
    auto M = [&](const Vec<S>& x) { return N.apply(x); };
    rep.add(scan_tuples<S>("nijenhuis-bracket", "N[x,y]_N = [Nx,Ny]", {n, n}, [&](const std::vector<int>& t) {
        return M(bracket(D, E(t[0]), E(t[1]))) - bracket(A, M(E(t[0])), M(E(t[1])));
    }));
    rep.add(scan_tuples<S>("nijenhuis-triple", "N<<x,y,z>>_N = <<Nx,Ny,Nz>>", {n, n, n},
                           [&](const std::vector<int>& t) {
                               return M(triple(D, E(t[0]), E(t[1]), E(t[2]))) -
                                      triple(A, M(E(t[0])), M(E(t[1])), M(E(t[2])));
                           }));
    return rep;
}

template <class S>
bool is_nijenhuis(const Algebra<S>& A, const Matrix<S>& N) {
    return nijenhuis_report(A, N).ok();
}

inline Algebra<Poly> to_poly(const Algebra<Rational>& A) {
    Algebra<Poly> P(A.dim);
    P.basis = A.basis;
    for (size_t i = 0; i < A.binary.size(); ++i) P.binary.data()[i] = Poly(A.binary.data()[i]);
    for (size_t i = 0; i < A.ternary.size(); ++i) P.ternary.data()[i] = Poly(A.ternary.data()[i]);
    return P;
}

}  // namespace lya
