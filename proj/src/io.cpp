#include "lya/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace lya {

namespace {

using RM = Matrix<Rational>;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    fail(ErrorKind::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) schema_error(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(where, "missing field \"" + key + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) schema_error(where, "expected an integer");
    return j.get<int>();
}

int as_index(const Json& j, int bound, const std::string& where) {
    int v = as_int(j, where);
    if (v < 0 || v >= bound) schema_error(where, "index " + std::to_string(v) + " out of range 0.." + std::to_string(bound - 1));
    return v;
}

Rational as_rational(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const Error& e) {
            fail(ErrorKind::BadRational, where + ": " + e.message());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    fail(ErrorKind::BadRational, where + ": expected a rational string, got " + j.dump());
}

// Line and column (1-based) of a byte offset.
std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// Records antisymmetric entries, rejecting inconsistent repeats.
class EntrySink {
public:
    explicit EntrySink(std::string what) : what_(std::move(what)) {}
    // key excludes the swapped pair; value already normalized to i<j order.
    void put(const std::vector<int>& key, const Rational& v, const std::string& where) {
        auto [it, fresh] = seen_.emplace(key, v);
        if (!fresh && it->second != v)
            fail(ErrorKind::ConflictingEntry, where + ": " + what_ + " entry conflicts with an earlier one (" +
                                                  it->second.str() + " vs " + v.str() + " after antisymmetrization)");
    }

private:
    std::string what_;
    std::map<std::vector<int>, Rational> seen_;
};

std::vector<RM> matrices_from_json(const Json& j, int count, int rows, int cols, const std::string& where);

RM rows_from_json(const Json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array()) schema_error(where, "expected an array of rows");
    // Row-major either nested ([[..],[..]]) or flat ([.., ..]).
    RM M(rows, cols);
    if (!j.empty() && j[0].is_array()) {
        if (static_cast<int>(j.size()) != rows) schema_error(where, "expected " + std::to_string(rows) + " rows");
        for (int r = 0; r < rows; ++r) {
            const Json& row = j[r];
            std::string w = where + "[" + std::to_string(r) + "]";
            if (!row.is_array() || static_cast<int>(row.size()) != cols)
                schema_error(w, "expected a row of " + std::to_string(cols) + " entries");
            for (int c = 0; c < cols; ++c) M(r, c) = as_rational(row[c], w + "[" + std::to_string(c) + "]");
        }
        return M;
    }
    if (static_cast<int>(j.size()) != rows * cols)
        schema_error(where, "expected " + std::to_string(rows * cols) + " entries");
    for (int i = 0; i < rows * cols; ++i) M(i / cols, i % cols) = as_rational(j[i], where + "[" + std::to_string(i) + "]");
    return M;
}

std::vector<RM> matrices_from_json(const Json& j, int count, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != count)
        schema_error(where, "expected an array of " + std::to_string(count) + " matrices");
    std::vector<RM> out;
    for (int i = 0; i < count; ++i) out.push_back(rows_from_json(j[i], rows, cols, where + "[" + std::to_string(i) + "]"));
    return out;
}

Json rows_to_json(const RM& M) {
    Json rows = Json::array();
    for (int r = 0; r < M.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

Json value_map(const std::vector<Rational>& v) {
    Json out = Json::object();
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out[std::to_string(k)] = v[k].str();
    return out;
}

// Reads {"k": "p/q", ...} into a dense vector of length n.
std::vector<Rational> value_vector(const Json& j, int n, const std::string& where) {
    if (!j.is_object()) schema_error(where, "expected an object of component values");
    std::vector<Rational> v(n);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        int k = -1;
        try {
            size_t used = 0;
            k = std::stoi(key, &used);
            if (used != key.size()) k = -1;
        } catch (const std::exception&) {
            k = -1;
        }
        if (k < 0 || k >= n) schema_error(where, "component key \"" + key + "\" is not an index in 0.." + std::to_string(n - 1));
        v[k] = as_rational(it.value(), where + "." + key);
    }
    return v;
}

Json tensor_entries(const Tensor<Rational>& t, int n, int arity) {
    // arity 3: binary (i,j -> k); arity 4: ternary (i,j,k -> l). All entries.
    Json out = Json::array();
    std::vector<int> idx(arity - 1, 0);
    while (true) {
        std::vector<Rational> v(n);
        for (int l = 0; l < n; ++l) {
            if (arity == 3) v[l] = t(idx[0], idx[1], l);
            else v[l] = t(idx[0], idx[1], idx[2], l);
        }
        Json val = value_map(v);
        if (!val.empty()) {
            Json e = Json::object();
            e["i"] = idx[0];
            e["j"] = idx[1];
            if (arity == 4) e["k"] = idx[2];
            e["value"] = val;
            out.push_back(e);
        }
        int p = arity - 2;
        while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

Json optable_to_json(const OpTable<Rational>& T) {
    Json out = Json::array();
    for (int i = 0; i < T.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < T.n; ++j) row.push_back(rows_to_json(T.at(i, j)));
        out.push_back(row);
    }
    return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json_text(ss.str());
    } catch (const Error& e) {
        fail(e.kind(), path + ": " + e.message());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

Algebra<Rational> algebra_from_json(const Json& j) {
    const int n = as_int(field(j, "dim", "algebra"), "algebra.dim");
    if (n < 0) schema_error("algebra.dim", "must be nonnegative");
    Algebra<Rational> A(n);
    if (j.contains("basis")) {
        const Json& b = j["basis"];
        if (!b.is_array() || static_cast<int>(b.size()) != n) schema_error("algebra.basis", "expected " + std::to_string(n) + " names");
        A.basis.clear();
        for (const auto& name : b) {
            if (!name.is_string()) schema_error("algebra.basis", "names must be strings");
            A.basis.push_back(name.get<std::string>());
        }
    }
    EntrySink bin("binary"), ter("ternary");
    if (j.contains("binary")) {
        const Json& list = j["binary"];
        if (!list.is_array()) schema_error("algebra.binary", "expected an array");
        for (size_t e = 0; e < list.size(); ++e) {
            std::string w = "algebra.binary[" + std::to_string(e) + "]";
            int i = as_index(field(list[e], "i", w), n, w + ".i");
            int jj = as_index(field(list[e], "j", w), n, w + ".j");
            auto v = value_vector(field(list[e], "value", w), n, w + ".value");
            for (int k = 0; k < n; ++k) {
                if (i == jj) {
                    if (!v[k].is_zero())
                        fail(ErrorKind::ConflictingEntry, w + ": [e_i,e_i] must vanish by antisymmetry");
                    continue;
                }
                Rational val = i < jj ? v[k] : -v[k];
                bin.put({std::min(i, jj), std::max(i, jj), k}, val, w);
                A.binary(std::min(i, jj), std::max(i, jj), k) = val;
                A.binary(std::max(i, jj), std::min(i, jj), k) = -val;
            }
        }
    }
    if (j.contains("ternary")) {
        const Json& list = j["ternary"];
        if (!list.is_array()) schema_error("algebra.ternary", "expected an array");
        for (size_t e = 0; e < list.size(); ++e) {
            std::string w = "algebra.ternary[" + std::to_string(e) + "]";
            int i = as_index(field(list[e], "i", w), n, w + ".i");
            int jj = as_index(field(list[e], "j", w), n, w + ".j");
            int k = as_index(field(list[e], "k", w), n, w + ".k");
            auto v = value_vector(field(list[e], "value", w), n, w + ".value");
            for (int l = 0; l < n; ++l) {
                if (i == jj) {
                    if (!v[l].is_zero())
                        fail(ErrorKind::ConflictingEntry, w + ": <<e_i,e_i,z>> must vanish by antisymmetry");
                    continue;
                }
                Rational val = i < jj ? v[l] : -v[l];
                ter.put({std::min(i, jj), std::max(i, jj), k, l}, val, w);
                A.ternary(std::min(i, jj), std::max(i, jj), k, l) = val;
                A.ternary(std::max(i, jj), std::min(i, jj), k, l) = -val;
            }
        }
    }
    return A;
}

Json algebra_to_json(const Algebra<Rational>& A) {
    const int n = A.dim;
    Json j = Json::object();
    j["dim"] = n;
    j["basis"] = A.basis;
    Json bin = Json::array(), ter = Json::array();
    for (const auto& e : tensor_entries(A.binary, n, 3))
        if (e["i"].get<int>() < e["j"].get<int>()) bin.push_back(e);
    for (const auto& e : tensor_entries(A.ternary, n, 4))
        if (e["i"].get<int>() < e["j"].get<int>()) ter.push_back(e);
    j["binary"] = bin;
    j["ternary"] = ter;
    return j;
}

Algebra<Rational> load_algebra(const std::string& path) {
    Json j = read_json_file(path);
    try {
        return algebra_from_json(j);
    } catch (const Error& e) {
        fail(e.kind(), path + ": " + e.message());
    }
}

LieYRepPair<Rational> pair_from_json(const Json& j, const std::string& base_dir) {
    const Json& a = field(j, "algebra", "representation");
    Algebra<Rational> A;
    if (a.is_string()) {
        std::filesystem::path p(a.get<std::string>());
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        A = load_algebra(p.string());
    } else {
        A = algebra_from_json(a);
    }
    const int n = A.dim;
    const int m = as_int(field(j, "module_dim", "representation"), "representation.module_dim");
    if (m < 0) schema_error("representation.module_dim", "must be nonnegative");
    Representation<Rational> R(n, m);
    R.rho = matrices_from_json(field(j, "rho", "representation"), n, m, m, "representation.rho");
    const Json& mu = field(j, "mu", "representation");
    if (!mu.is_array() || static_cast<int>(mu.size()) != n)
        schema_error("representation.mu", "expected " + std::to_string(n) + " rows of matrices");
    for (int i = 0; i < n; ++i) {
        auto row = matrices_from_json(mu[i], n, m, m, "representation.mu[" + std::to_string(i) + "]");
        for (int jj = 0; jj < n; ++jj) R.mu.at(i, jj) = row[jj];
    }
    return {A, R};
}

Json pair_to_json(const LieYRepPair<Rational>& P) {
    Json j = Json::object();
    j["algebra"] = algebra_to_json(P.algebra);
    j["module_dim"] = P.rep.module_dim;
    Json rho = Json::array();
    for (const auto& r : P.rep.rho) rho.push_back(rows_to_json(r));
    j["rho"] = rho;
    j["mu"] = optable_to_json(P.rep.mu);
    return j;
}

LieYRepPair<Rational> load_pair(const std::string& path) {
    Json j = read_json_file(path);
    std::string dir = std::filesystem::path(path).parent_path().string();
    try {
        return pair_from_json(j, dir.empty() ? "." : dir);
    } catch (const Error& e) {
        fail(e.kind(), path + ": " + e.message());
    }
}

Matrix<Rational> operator_from_json(const Json& j) {
    const int r = as_int(field(j, "rows", "operator"), "operator.rows");
    const int c = as_int(field(j, "cols", "operator"), "operator.cols");
    if (r < 0 || c < 0) schema_error("operator", "rows and cols must be nonnegative");
    return rows_from_json(field(j, "entries", "operator"), r, c, "operator.entries");
}

Json operator_to_json(const Matrix<Rational>& M) {
    Json j = Json::object();
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    Json e = Json::array();
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c) e.push_back(M(r, c).str());
    j["entries"] = e;
    return j;
}

Matrix<Rational> load_operator(const std::string& path) {
    Json j = read_json_file(path);
    try {
        return operator_from_json(j);
    } catch (const Error& e) {
        fail(e.kind(), path + ": " + e.message());
    }
}

Json deformation_to_json(const DeformationData& dd) {
    Json j = Json::object();
    j["dim"] = dd.d;
    j["module_dim"] = dd.m;
    j["phi"] = tensor_entries(dd.phi, dd.d, 3);
    j["phi1"] = tensor_entries(dd.phi1, dd.d, 4);
    j["phi2"] = tensor_entries(dd.phi2, dd.d, 4);
    Json vr = Json::array();
    for (const auto& r : dd.varrho) vr.push_back(rows_to_json(r));
    j["varrho"] = vr;
    j["varpi1"] = optable_to_json(dd.varpi1);
    j["varpi2"] = optable_to_json(dd.varpi2);
    return j;
}

Json cochain_to_json(const PairCochain& c) {
    Json j = Json::object();
    j["degree"] = c.degree;
    j["dim"] = c.d;
    j["module_dim"] = c.m;
    Json data = Json::array();
    for (const auto& x : c.data) data.push_back(x.str());
    j["data"] = data;
    return j;
}

Json report_to_json(const Report& r) {
    Json j = Json::object();
    j["subject"] = r.subject;
    j["ok"] = r.ok();
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json cj = Json::object();
        cj["name"] = c.name;
        cj["status"] = status_name(c.status);
        cj["rule"] = c.rule;
        if (c.witness) {
            Json w = Json::object();
            w["tuple"] = c.witness->tuple;
            w["residual"] = c.witness->residual;
            if (c.witness->t_degree) w["t_degree"] = *c.witness->t_degree;
            cj["witness"] = w;
        }
        if (!c.note.empty()) cj["note"] = c.note;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

}  // namespace lya
