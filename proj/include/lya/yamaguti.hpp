#pragma once

#include "lya/rep.hpp"
#include "lya/sparse.hpp"

#include <map>
#include <utility>
#include <vector>

namespace lya {

// Canonical basis {e_a ^ e_b : a < b} of the exterior square, lex order.
struct WedgeBasis {
    int d = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> index;  // d*d table, -1 on and below the diagonal

    WedgeBasis() = default;
    explicit WedgeBasis(int dim);
    int size() const { return static_cast<int>(pairs.size()); }
    // e_a ^ e_b = sign * (basis element w); sign is 0 when a == b.
    std::pair<int, int> lookup(int a, int b) const;
};

// A p-cochain of the Yamaguti complex with values in a d-dimensional algebra's
// m-dimensional representation. Degree 1: f only, indexed f[a*m + o].
// Degree n+1: f over n wedge slots, g over n wedge slots and one plain slot;
// indices are row-major with the output coordinate last.
struct YamagutiCochain {
    int degree = 1;
    int d = 0;
    int m = 0;
    std::vector<Rational> f;
    std::vector<Rational> g;

    bool is_zero() const;
    friend bool operator==(const YamagutiCochain& a, const YamagutiCochain& b) {
        return a.degree == b.degree && a.d == b.d && a.m == b.m && a.f == b.f && a.g == b.g;
    }
};

size_t ycochain_f_size(int d, int m, int p);
size_t ycochain_g_size(int d, int m, int p);
inline size_t ycochain_size(int d, int m, int p) { return ycochain_f_size(d, m, p) + ycochain_g_size(d, m, p); }
YamagutiCochain ycochain_zero(int d, int m, int p);
Vec<Rational> flatten(const YamagutiCochain& c);
YamagutiCochain unflatten_ycochain(int d, int m, int p, const Vec<Rational>& v);

constexpr int kDefaultYamagutiCap = 4;

// The Yamaguti complex of (A, R) with its coboundary operators cached as
// sparse matrices. Copies its inputs, so it can outlive them.
class YamagutiComplex {
public:
    YamagutiComplex(const Algebra<Rational>& A, const Representation<Rational>& R, int cap = kDefaultYamagutiCap);

    int cap() const { return cap_; }
    int algebra_dim() const { return d_; }
    int module_dim() const { return m_; }
    const WedgeBasis& wedges() const { return wb_; }
    size_t dim(int p) const { return ycochain_size(d_, m_, p); }

    // Coboundary C^p -> C^{p+1}; DegreeCapExceeded if p+1 > cap.
    const SparseMatrix& delta_sparse(int p);
    YamagutiCochain delta(const YamagutiCochain& c);
    Matrix<Rational> delta_matrix(int p) { return delta_sparse(p).dense(); }
    // dim H^p = nullity(delta_p) - rank(delta_{p-1}); for p = 1 just the nullity.
    int cohomology_dim(int p);

private:
    using Terms = std::vector<std::pair<int, Rational>>;
    SparseMatrix build(int p) const;
    int f_index(const int* ws, int n, int o) const;
    int g_index(const int* ws, int n, int c, int o, int p) const;

    int d_, m_, cap_;
    WedgeBasis wb_;
    std::vector<Terms> br_;                  // [a*d+b] -> sparse [e_a,e_b]
    std::vector<Terms> tr_;                  // [(a*d+b)*d+c] -> sparse <<e_a,e_b,e_c>>
    std::vector<Matrix<Rational>> rho_;      // rho(e_a)
    std::vector<Matrix<Rational>> mu_;       // [a*d+b] mu(e_a,e_b)
    std::vector<Matrix<Rational>> dw_;       // D on each wedge basis element
    std::vector<Terms> circ_;                // [w1*W+w2] -> wedge combination X_1 o X_2
    std::map<int, SparseMatrix> cache_;
};

// Free-function forms.
YamagutiCochain delta(const Algebra<Rational>& A, const Representation<Rational>& R, const YamagutiCochain& c,
                      int cap = kDefaultYamagutiCap);
Matrix<Rational> delta_matrix(const Algebra<Rational>& A, const Representation<Rational>& R, int p,
                              int cap = kDefaultYamagutiCap);
int cohomology_dim(const Algebra<Rational>& A, const Representation<Rational>& R, int p,
                   int cap = kDefaultYamagutiCap);

}  // namespace lya
