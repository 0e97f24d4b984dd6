#pragma once

#include "lya/matrix.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lya {

enum class Status { Pass, Fail, Error };

const char* status_name(Status s);

struct Witness {
    std::vector<int> tuple;             // basis indices (0-based) of the first violation
    std::vector<std::string> residual;  // LHS − RHS at that tuple
    std::optional<int> t_degree;        // lowest nonzero power of t (polynomial residuals only)
};

inline std::optional<int> lowest_t_degree(const Vec<Rational>&) { return std::nullopt; }
inline std::optional<int> lowest_t_degree(const Vec<Poly>& v) {
    std::optional<int> best;
    for (const auto& p : v) {
        const auto& c = p.coeffs();
        for (int k = 0; k < static_cast<int>(c.size()); ++k)
            if (!c[k].is_zero()) {
                if (!best || k < *best) best = k;
                break;
            }
    }
    return best;
}

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::optional<Witness> witness;  // present iff status == Fail
    std::string rule;                // the identity being checked, as a formula
    std::string note;                // free-form detail (errors, counts)

    bool passed() const { return status == Status::Pass; }
};

struct Report {
    std::string subject;
    std::vector<Check> checks;

    bool ok() const;
    bool has_error() const;
    const Check* find(const std::string& name) const;
    const Check& at(const std::string& name) const;  // throws std::out_of_range
    void add(Check c) { checks.push_back(std::move(c)); }
    // Appends the checks of another report, prefixing their names.
    void absorb(const Report& other, const std::string& prefix = "");
    std::string text() const;
};

Check passing(const std::string& name, const std::string& rule, const std::string& note = "");
Check failing(const std::string& name, const std::string& rule, Witness w, const std::string& note = "");

// Enumerates every tuple in [0,extents[0]) × ... and evaluates `residual` on
// it; the first tuple with a nonzero residual becomes the witness.
template <class S>
Check scan_tuples(const std::string& name, const std::string& rule, const std::vector<int>& extents,
                  const std::function<Vec<S>(const std::vector<int>&)>& residual) {
    std::vector<int> idx(extents.size(), 0);
    for (int e : extents)
        if (e == 0) return passing(name, rule);
    while (true) {
        Vec<S> r = residual(idx);
        if (!vec_is_zero(r)) return failing(name, rule, Witness{idx, vec_strings(r), lowest_t_degree(r)});
        int k = static_cast<int>(idx.size()) - 1;
        while (k >= 0 && ++idx[k] == extents[k]) idx[k--] = 0;
        if (k < 0) break;
    }
    return passing(name, rule);
}

// Flattens a matrix-valued residual for use with scan_tuples.
template <class S>
Vec<S> flat(const Matrix<S>& m) {
    return m.entries();
}

}  // namespace lya
