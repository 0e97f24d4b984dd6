#pragma once

#include "lya/deform.hpp"
#include "lya/report.hpp"

#include <json.hpp>

#include <string>

namespace lya {

// JSON files. Objects keep insertion order so output is canonical.
//
//   algebra:        {"dim": n, "basis": [names],
//                    "binary":  [{"i":0,"j":1,"value":{"0":"1"}}, ...],
//                    "ternary": [{"i":0,"j":1,"k":1,"value":{"0":"1"}}, ...]}
//   representation: {"algebra": path-or-inline, "module_dim": m,
//                    "rho": [n matrices], "mu": [[n x n matrices]]}
//   operator:       {"rows": r, "cols": c, "entries": [row-major rationals]}
//
// Indices are 0-based. Both products are antisymmetric in (i,j): an entry with
// i > j sets the (j,i) entry to its negative, and only i < j entries are
// needed. Rationals are strings "p/q" or "p" (integers are also accepted).
// Matrices inside a representation are arrays of rows.
//
// Errors: ParseError (malformed JSON, with line and column, or a schema
// violation, with its JSON path), ConflictingEntry (the same antisymmetric
// entry given twice with inconsistent values, or a nonzero diagonal entry),
// BadRational.
using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);
void write_json_file(const std::string& path, const Json& j);

Algebra<Rational> algebra_from_json(const Json& j);
// Canonical form: i < j entries only, nonzero components only, ascending
// index order, reduced rationals.
Json algebra_to_json(const Algebra<Rational>& A);
Algebra<Rational> load_algebra(const std::string& path);

// "algebra" may be an inline object or a path, resolved relative to base_dir.
LieYRepPair<Rational> pair_from_json(const Json& j, const std::string& base_dir = ".");
// The algebra is written inline.
Json pair_to_json(const LieYRepPair<Rational>& P);
LieYRepPair<Rational> load_pair(const std::string& path);

Matrix<Rational> operator_from_json(const Json& j);
Json operator_to_json(const Matrix<Rational>& M);
Matrix<Rational> load_operator(const std::string& path);

Json deformation_to_json(const DeformationData& dd);
Json cochain_to_json(const PairCochain& c);

// Machine-readable report. Every check carries its identity in "rule".
Json report_to_json(const Report& r);

}  // namespace lya
