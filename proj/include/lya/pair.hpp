#pragma once

#include "lya/sparse.hpp"
#include "lya/yamaguti.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lya {

// Argument slot kinds of pair-complex cochains:
//   Wedge  a basis element e_a ^ e_b of wedge^2 g (a < b)
//   Mixed  an element (x, v) of g ^ V, coordinates x_a v_b at a*dim(V) + b
//   G, V   a plain argument in g or in V
enum class SlotKind { Wedge, Mixed, G, V };

// One named component of a pair cochain, stored row-major over its argument
// slots with the output coordinate last.
struct PairBlock {
    std::string name;
    std::vector<SlotKind> slots;
    bool g_valued = false;  // output in g (else in V)
    size_t offset = 0;
    size_t size = 0;
};

// Block structure of the degree-p cochain space C^p(g, rho, mu).
//   degree 1:   f1: g -> g,  f2: V -> V                 (slots [arg], out)
//   degree n+1: f1 (W^n -> g), g1 (W^n x g -> g),
//               f2 (W^{n-1} x Mixed -> V), g2 (W^n x V -> V),
//               f3_i (Mixed at slot i, i = 1..n-1) -> V,
//               g3_j (Mixed at slot j, j = 1..n, then g) -> V
struct PairLayout {
    int d = 0, m = 0, degree = 1;
    std::vector<PairBlock> blocks;

    PairLayout() = default;
    PairLayout(int d, int m, int degree);
    size_t size() const;
    int block_id(const std::string& name) const;  // DimMismatch if absent
    const PairBlock& block(const std::string& name) const { return blocks[block_id(name)]; }
    int extent(SlotKind k) const;
    size_t extent_out(const PairBlock& b) const { return b.g_valued ? d : m; }
    // Flat index of block entry: slot indices then output index.
    size_t index(const PairBlock& b, const std::vector<int>& slots, int out) const;
};

struct PairCochain {
    int degree = 1;
    int d = 0;
    int m = 0;
    Vec<Rational> data;

    bool is_zero() const { return vec_is_zero(data); }
    PairLayout layout() const { return PairLayout(d, m, degree); }
    // Entry access by block name, slot indices and output coordinate.
    Rational& at(const std::string& block, const std::vector<int>& slots, int out);
    const Rational& at(const std::string& block, const std::vector<int>& slots, int out) const;
    friend bool operator==(const PairCochain& a, const PairCochain& b) {
        return a.degree == b.degree && a.d == b.d && a.m == b.m && a.data == b.data;
    }
};

PairCochain pair_cochain_zero(int d, int m, int degree);
size_t pair_cochain_size(int d, int m, int degree);

constexpr int kDefaultPairCap = 3;

// The pair complex realized inside the Yamaguti complex of the semidirect
// product g + V with coefficients in its adjoint representation. Lift and
// projection are cached as sparse matrices; the coboundary is
// Delta_p = Pr_{p+1} delta Lift_p, after verifying that delta maps the lifted
// subspace into itself.
class PairComplex {
public:
    explicit PairComplex(const LieYRepPair<Rational>& P, int cap = kDefaultPairCap);

    int cap() const { return cap_; }
    int algebra_dim() const { return d_; }
    int module_dim() const { return m_; }
    size_t dim(int p) const { return pair_cochain_size(d_, m_, p); }
    const Algebra<Rational>& semidirect_algebra() const { return semi_; }
    const LieYRepPair<Rational>& pair() const { return pair_; }

    const SparseMatrix& lift_matrix(int p);
    const SparseMatrix& project_matrix(int p);
    YamagutiCochain lift(const PairCochain& c);
    // Left inverse of lift; NotInSubcomplex if the input is not a lift.
    PairCochain project(const YamagutiCochain& c);

    // Reference coboundary via the lift; DegreeCapExceeded if p+1 > cap.
    const SparseMatrix& delta_sparse(int p);
    PairCochain delta_lifted(const PairCochain& c);
    Matrix<Rational> delta_matrix(int p) { return delta_sparse(p).dense(); }
    // dim H^p = nullity(Delta_p) - rank(Delta_{p-1}); nullity alone for p = 1.
    int cohomology_dim(int p);

private:
    SparseMatrix build_lift(int p) const;
    SparseMatrix build_project(int p) const;

    LieYRepPair<Rational> pair_;
    int d_, m_, cap_;
    Algebra<Rational> semi_;
    std::unique_ptr<YamagutiComplex> ycx_;
    std::map<int, SparseMatrix> lift_, proj_, delta_;
};

// Coboundary from the explicit low-degree formulas (degrees 1 and 2 only;
// UnsupportedDegree otherwise). Independent of the lift.
PairCochain pair_delta_direct(const LieYRepPair<Rational>& P, const PairCochain& c);

// Free-function forms using a fresh complex.
YamagutiCochain lift(const LieYRepPair<Rational>& P, const PairCochain& c);
PairCochain project(const LieYRepPair<Rational>& P, const YamagutiCochain& c);
PairCochain pair_delta_lifted(const LieYRepPair<Rational>& P, const PairCochain& c, int cap = kDefaultPairCap);
Matrix<Rational> pair_delta_matrix(const LieYRepPair<Rational>& P, int p, int cap = kDefaultPairCap);
int pair_cohomology_dim(const LieYRepPair<Rational>& P, int p, int cap = kDefaultPairCap);

}  // namespace lya
