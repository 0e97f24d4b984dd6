// lya: verify Lie-Yamaguti structures stored as JSON structure constants.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 usage or input
// error, 3 an asserted consequence (or internal cross-check) was violated.

#include "lya/fixtures.hpp"
#include "lya/io.hpp"
#include "lya/linalg.hpp"
#include "lya/quadratic.hpp"
#include "lya/search.hpp"
#include "lya/yamaguti.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

using namespace lya;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kConsequence = 3 };

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 0;
    int degree_cap = kDefaultPairCap;
};

// Everything a command produces: reports, free-form results, and text lines.
struct Outcome {
    std::vector<Report> reports;
    Json result = Json::object();
    std::vector<std::string> lines;
    bool ok() const {
        for (const auto& r : reports)
            if (!r.ok()) return false;
        return true;
    }
};

int exit_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ConsequenceViolated:
        case ErrorKind::IncompatibleCrossCheck:
        case ErrorKind::DualRouteDisagreement:
            return kConsequence;
        case ErrorKind::ParseError:
        case ErrorKind::BadRational:
        case ErrorKind::ConflictingEntry:
        case ErrorKind::DimMismatch:
        case ErrorKind::UnsupportedDegree:
        case ErrorKind::DegreeCapExceeded:
        case ErrorKind::PolynomialEntries:
            return kUsage;
        default:
            return kFail;
    }
}

void emit(const Globals& g, const std::string& command, const Outcome& out, double ms) {
    if (g.format == "json") {
        Json j = Json::object();
        j["command"] = command;
        j["ok"] = out.ok();
        j["seed"] = g.seed;
        j["runtime_ms"] = ms;
        Json reps = Json::array();
        for (const auto& r : out.reports) {
            Json rj = report_to_json(r);
            rj["seed"] = g.seed;
            reps.push_back(rj);
        }
        j["reports"] = reps;
        if (!out.result.empty()) j["result"] = out.result;
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& r : out.reports) std::cout << r.text() << "\n";
    for (const auto& l : out.lines) std::cout << l << "\n";
    std::cout << (out.ok() ? "PASS" : "FAIL") << "  (" << command << ", seed " << g.seed << ", " << ms << " ms)\n";
}

int run(const Globals& g, const std::string& command, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const Error& e) {
        int code = exit_for(e.kind());
        if (g.format == "json") {
            Json j = Json::object();
            j["command"] = command;
            j["ok"] = false;
            j["seed"] = g.seed;
            j["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
            j["exit_code"] = code;
            std::cout << j.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return code;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(g, command, out, ms);
    return out.ok() ? kPass : kFail;
}

std::string matrix_text(const RMatrix& M) {
    std::string s = "[";
    for (int r = 0; r < M.rows(); ++r) {
        s += r ? ", [" : "[";
        for (int c = 0; c < M.cols(); ++c) s += (c ? ", " : "") + M(r, c).str();
        s += "]";
    }
    return s + "]";
}

Report single(const std::string& subject, Check c) {
    Report r;
    r.subject = subject;
    r.add(std::move(c));
    return r;
}

Check verdict(const std::string& name, const std::string& rule, bool ok, const std::string& note = "") {
    if (ok) return passing(name, rule, note);
    return failing(name, rule, Witness{}, note);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Lie-Yamaguti algebras, representations and operators"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed recorded in every report");
    app.add_option("--degree-cap", g.degree_cap, "Largest cochain degree built by the complexes");

    std::function<int()> action;
    std::string command;

    // check algebra|rep|pair FILE
    auto* check = app.add_subcommand("check", "Check the axioms of an algebra, representation or pair");
    std::string check_kind, check_file;
    check->add_option("kind", check_kind, "algebra | rep | pair")->required()->check(CLI::IsMember({"algebra", "rep", "pair"}));
    check->add_option("file", check_file, "JSON file")->required()->check(CLI::ExistingFile);
    check->callback([&] {
        command = "check " + check_kind;
        action = [&] {
            return run(g, command, [&] {
                Outcome o;
                if (check_kind == "algebra") {
                    o.reports.push_back(check_axioms(load_algebra(check_file)));
                } else {
                    RPair P = load_pair(check_file);
                    if (check_kind == "pair") o.reports.push_back(check_axioms(P.algebra));
                    o.reports.push_back(check_representation(P.algebra, P.rep));
                    o.reports.push_back(check_derived_identities(P.algebra, P.rep));
                }
                return o;
            });
        };
    });

    // cohomology --pair FILE --degree p [--cap c] [--complex pair|yamaguti]
    auto* coh = app.add_subcommand("cohomology", "Cohomology dimension of the pair or Yamaguti complex");
    std::string coh_pair, coh_complex = "pair";
    int coh_degree = 1, coh_cap = -1;
    coh->add_option("--pair", coh_pair, "Pair file")->required()->check(CLI::ExistingFile);
    coh->add_option("--degree", coh_degree, "Cohomological degree")->required();
    coh->add_option("--cap", coh_cap, "Degree cap (defaults to --degree-cap)");
    coh->add_option("--complex", coh_complex, "pair | yamaguti")->check(CLI::IsMember({"pair", "yamaguti"}));
    coh->callback([&] {
        command = "cohomology";
        action = [&] {
            return run(g, command, [&] {
                RPair P = load_pair(coh_pair);
                int cap = coh_cap >= 0 ? coh_cap : g.degree_cap;
                Outcome o;
                int dim;
                RMatrix d_in, d_out;
                if (coh_complex == "pair") {
                    dim = pair_cohomology_dim(P, coh_degree, cap);
                    d_out = pair_delta_matrix(P, coh_degree, cap);
                    if (coh_degree > 1) d_in = pair_delta_matrix(P, coh_degree - 1, cap);
                } else {
                    dim = cohomology_dim(P.algebra, P.rep, coh_degree, cap);
                    d_out = delta_matrix(P.algebra, P.rep, coh_degree, cap);
                    if (coh_degree > 1) d_in = delta_matrix(P.algebra, P.rep, coh_degree - 1, cap);
                }
                Report r;
                r.subject = coh_complex + " complex at degree " + std::to_string(coh_degree);
                if (coh_degree > 1) {
                    bool closed = (d_out * d_in).is_zero();
                    r.add(verdict("delta-squared", "delta_p delta_{p-1} = 0", closed));
                }
                o.reports.push_back(r);
                o.result["complex"] = coh_complex;
                o.result["degree"] = coh_degree;
                o.result["cap"] = cap;
                o.result["dim"] = dim;
                o.lines.push_back("dim H^" + std::to_string(coh_degree) + " = " + std::to_string(dim));
                return o;
            });
        };
    });

    // verify-nijenhuis --algebra FILE --N FILE
    auto* vn = app.add_subcommand("verify-nijenhuis", "Check that N is a Nijenhuis operator");
    std::string vn_alg, vn_n;
    vn->add_option("--algebra", vn_alg, "Algebra file (or a pair file)")->required()->check(CLI::ExistingFile);
    vn->add_option("--N", vn_n, "Operator file")->required()->check(CLI::ExistingFile);
    vn->callback([&] {
        command = "verify-nijenhuis";
        action = [&] {
            return run(g, command, [&] {
                Json j = read_json_file(vn_alg);
                RAlgebra A = j.contains("module_dim") ? load_pair(vn_alg).algebra : algebra_from_json(j);
                Outcome o;
                o.reports.push_back(nijenhuis_report(A, load_operator(vn_n)));
                return o;
            });
        };
    });

    // verify-nijenhuis-structure --pair FILE --N FILE --S FILE
    auto* vns = app.add_subcommand("verify-nijenhuis-structure", "Check that (N, S) is a Nijenhuis structure");
    std::string vns_pair, vns_n, vns_s;
    vns->add_option("--pair", vns_pair)->required()->check(CLI::ExistingFile);
    vns->add_option("--N", vns_n)->required()->check(CLI::ExistingFile);
    vns->add_option("--S", vns_s)->required()->check(CLI::ExistingFile);
    vns->callback([&] {
        command = "verify-nijenhuis-structure";
        action = [&] {
            return run(g, command, [&] {
                RPair P = load_pair(vns_pair);
                Outcome o;
                o.reports.push_back(nijenhuis_structure_report(P, load_operator(vns_n), load_operator(vns_s)));
                return o;
            });
        };
    });

    // verify-rbo --pair FILE --T FILE
    auto* vr = app.add_subcommand("verify-rbo", "Check that T is a relative Rota-Baxter operator");
    std::string vr_pair, vr_t;
    vr->add_option("--pair", vr_pair)->required()->check(CLI::ExistingFile);
    vr->add_option("--T", vr_t)->required()->check(CLI::ExistingFile);
    vr->callback([&] {
        command = "verify-rbo";
        action = [&] {
            return run(g, command, [&] {
                RPair P = load_pair(vr_pair);
                RMatrix T = load_operator(vr_t);
                Outcome o;
                Report r = relative_rb_report(P, T);
                o.reports.push_back(r);
                if (r.ok()) {
                    Report sub = check_axioms(subadjacent(RelativeRBOperator::make(P, T)));
                    sub.subject = "subadjacent algebra on V";
                    o.reports.push_back(sub);
                }
                return o;
            });
        };
    });

    // verify-rbn --pair FILE --T FILE --S FILE --N FILE
    auto* vb = app.add_subcommand("verify-rbn", "Check a relative Rota-Baxter-Nijenhuis structure and its consequences");
    std::string vb_pair, vb_t, vb_s, vb_n;
    vb->add_option("--pair", vb_pair)->required()->check(CLI::ExistingFile);
    vb->add_option("--T", vb_t)->required()->check(CLI::ExistingFile);
    vb->add_option("--S", vb_s)->required()->check(CLI::ExistingFile);
    vb->add_option("--N", vb_n)->required()->check(CLI::ExistingFile);
    vb->callback([&] {
        command = "verify-rbn";
        action = [&] {
            return run(g, command, [&] {
                RPair P = load_pair(vb_pair);
                RMatrix T = load_operator(vb_t), S = load_operator(vb_s), N = load_operator(vb_n);
                Outcome o;
                Report r = rbn_report(P, T, S, N);
                o.reports.push_back(r);
                if (r.ok()) o.reports.push_back(rbn_consequences(RBNTriple::make(P, T, S, N)));
                return o;
            });
        };
    });

    // verify-compatible --pair FILE --T1 FILE --T2 FILE
    auto* vc = app.add_subcommand("verify-compatible", "Check that two relative Rota-Baxter operators are compatible");
    std::string vc_pair, vc_t1, vc_t2;
    vc->add_option("--pair", vc_pair)->required()->check(CLI::ExistingFile);
    vc->add_option("--T1", vc_t1)->required()->check(CLI::ExistingFile);
    vc->add_option("--T2", vc_t2)->required()->check(CLI::ExistingFile);
    vc->callback([&] {
        command = "verify-compatible";
        action = [&] {
            return run(g, command, [&] {
                RPair P = load_pair(vc_pair);
                RMatrix T1 = load_operator(vc_t1), T2 = load_operator(vc_t2);
                Outcome o;
                Report r1 = relative_rb_report(P, T1), r2 = relative_rb_report(P, T2);
                Report all;
                all.subject = "compatible relative Rota-Baxter operators";
                all.absorb(r1, "T1 ");
                all.absorb(r2, "T2 ");
                if (r1.ok() && r2.ok()) {
                    all.absorb(compatibility_report(P, T1, T2));
                    // Throws IncompatibleCrossCheck if sampling disagrees.
                    bool c = is_compatible_pair(P, T1, T2);
                    all.add(verdict("sampled combinations", "k1 T1 + k2 T2 relative Rota-Baxter at (1,1), (1,-1), (2,3)", c));
                }
                o.reports.push_back(all);
                return o;
            });
        };
    });

    // verify-strong --pair FILE --T FILE --S FILE [--N FILE]
    auto* vs = app.add_subcommand("verify-strong", "Check the strong condition; with N, also compatibility of T and T S");
    std::string vs_pair, vs_t, vs_s, vs_n;
    vs->add_option("--pair", vs_pair)->required()->check(CLI::ExistingFile);
    vs->add_option("--T", vs_t)->required()->check(CLI::ExistingFile);
    vs->add_option("--S", vs_s)->required()->check(CLI::ExistingFile);
    vs->add_option("--N", vs_n)->check(CLI::ExistingFile);
    vs->callback([&] {
        command = "verify-strong";
        action = [&] {
            return run(g, command, [&] {
                RPair P = load_pair(vs_pair);
                RMatrix T = load_operator(vs_t), S = load_operator(vs_s);
                Outcome o;
                Report r = strong_condition_report(P, T, S);
                o.reports.push_back(r);
                if (!vs_n.empty() && r.ok()) {
                    RMatrix N = load_operator(vs_n);
                    Report rbn = rbn_report(P, T, S, N);
                    o.reports.push_back(rbn);
                    if (rbn.ok()) {
                        // A strong RBN triple makes T and T S compatible.
                        bool c = is_compatible_pair(P, T, T * S);
                        if (!c)
                            fail(ErrorKind::ConsequenceViolated, "strong RBN triple but T and T S are not compatible");
                        o.reports.push_back(single("compatibility of T and T S",
                                                   verdict("T, T S compatible", "strong RBN => T and T S compatible", c)));
                    }
                }
                return o;
            });
        };
    });

    // deform --pair FILE --from-nijenhuis --N FILE --S FILE
    auto* df = app.add_subcommand("deform", "Build the trivial deformation of a Nijenhuis structure");
    std::string df_pair, df_n, df_s;
    bool df_from = false;
    df->add_option("--pair", df_pair)->required()->check(CLI::ExistingFile);
    df->add_flag("--from-nijenhuis", df_from, "Generate the deformation from (N, S)")->required();
    df->add_option("--N", df_n)->required()->check(CLI::ExistingFile);
    df->add_option("--S", df_s)->required()->check(CLI::ExistingFile);
    df->callback([&] {
        command = "deform";
        action = [&] {
            return run(g, command, [&] {
                RPair P = load_pair(df_pair);
                RMatrix N = load_operator(df_n), S = load_operator(df_s);
                Outcome o;
                Report ns = nijenhuis_structure_report(P, N, S);
                o.reports.push_back(ns);
                if (!ns.ok()) return o;
                DeformationData dd = trivial_deformation_from(P, NijenhuisStructure::make(P, N, S));
                o.reports.push_back(linear_deformation_report(P, dd));
                // Triviality certificate: (Id + tN, Id + tS) carries the deformation to the original pair.
                Report cert = equivalence_report(P, dd, deformation_zero(P.algebra.dim, P.rep.module_dim), N, S);
                cert.subject = "triviality certificate (Id + tN, Id + tS)";
                o.reports.push_back(cert);
                PairCochain co = deformation_cocycle(P, dd);
                PairCochain ns1 = pair_cochain_of(N, S);
                Report coh;
                coh.subject = "deformation cocycle";
                coh.add(verdict("closed", "Delta(cocycle) = 0", pair_delta_direct(P, co).is_zero()));
                coh.add(verdict("exact", "cocycle = Delta(N, S)", co == pair_delta_direct(P, ns1)));
                o.reports.push_back(coh);
                o.result["deformation"] = deformation_to_json(dd);
                o.result["certificate"] = {{"N", operator_to_json(N)}, {"S", operator_to_json(S)}};
                o.result["cocycle"] = cochain_to_json(co);
                return o;
            });
        };
    });

    // quadratic check|rbn-to-rmn|rmn-to-rbn --algebra FILE --form FILE [...]
    auto* qd = app.add_subcommand("quadratic", "Quadratic forms and the r-matrix correspondence");
    std::string qd_mode, qd_alg, qd_form, qd_r, qd_pi, qd_n, qd_out;
    qd->add_option("mode", qd_mode, "check | rbn-to-rmn | rmn-to-rbn")
        ->required()
        ->check(CLI::IsMember({"check", "rbn-to-rmn", "rmn-to-rbn"}));
    qd->add_option("--algebra", qd_alg)->required()->check(CLI::ExistingFile);
    qd->add_option("--form", qd_form, "Gram matrix of B")->required()->check(CLI::ExistingFile);
    qd->add_option("--R", qd_r)->check(CLI::ExistingFile);
    qd->add_option("--pi", qd_pi)->check(CLI::ExistingFile);
    qd->add_option("--N", qd_n)->check(CLI::ExistingFile);
    qd->add_option("--out", qd_out, "Write the converted operator here");
    qd->callback([&] {
        command = "quadratic " + qd_mode;
        if (qd_mode == "rbn-to-rmn" && (qd_r.empty() || qd_n.empty()))
            throw CLI::ValidationError("rbn-to-rmn needs --R and --N");
        if (qd_mode == "rmn-to-rbn" && (qd_pi.empty() || qd_n.empty()))
            throw CLI::ValidationError("rmn-to-rbn needs --pi and --N");
        action = [&] {
            return run(g, command, [&] {
                RAlgebra A = load_algebra(qd_alg);
                RMatrix b = load_operator(qd_form);
                Outcome o;
                Report inv = invariant_form_report(A, b);
                o.reports.push_back(inv);
                if (!inv.ok()) return o;
                QuadraticForm qf = QuadraticForm::make(A, b);
                o.reports.push_back(invariance_transport(qf));
                if (qd_mode == "rbn-to-rmn") {
                    RMatrix R = load_operator(qd_r), N = load_operator(qd_n);
                    Report pre = rb_nijenhuis_report(A, R, N);
                    pre.absorb(skew_endomorphism_report(qf, R));
                    pre.absorb(form_compatibility_report(qf, N));
                    o.reports.push_back(pre);
                    if (!pre.ok()) return o;
                    ClassicalRMatrix rm = rbn_to_rmn(qf, R, N);
                    Report post = rmatrix_nijenhuis_report(A, rm.pi(), N);
                    post.add(verdict("round trip", "rmn_to_rbn(pi, N) = R", rmn_to_rbn(qf, rm.pi(), N) == R));
                    o.reports.push_back(post);
                    o.result["pi"] = operator_to_json(rm.pi());
                    o.result["pi_sharp"] = operator_to_json(rm.pi_sharp());
                    o.lines.push_back("pi = " + matrix_text(rm.pi()));
                    if (!qd_out.empty()) write_json_file(qd_out, operator_to_json(rm.pi()));
                } else if (qd_mode == "rmn-to-rbn") {
                    RMatrix pi = load_operator(qd_pi), N = load_operator(qd_n);
                    Report pre = rmatrix_nijenhuis_report(A, pi, N);
                    pre.absorb(form_compatibility_report(qf, N));
                    o.reports.push_back(pre);
                    if (!pre.ok()) return o;
                    RMatrix R = rmn_to_rbn(qf, pi, N);
                    Report post = rb_nijenhuis_report(A, R, N);
                    post.add(verdict("round trip", "rbn_to_rmn(R, N) = pi", rbn_to_rmn(qf, R, N).pi() == pi));
                    o.reports.push_back(post);
                    o.result["R"] = operator_to_json(R);
                    o.lines.push_back("R = " + matrix_text(R));
                    if (!qd_out.empty()) write_json_file(qd_out, operator_to_json(R));
                }
                return o;
            });
        };
    });

    // search invariant-forms|rb|nijenhuis|quadratic-rbn ...
    auto* se = app.add_subcommand("search", "Exhaustive grid searches used to produce fixtures");
    std::string se_mode, se_alg, se_pair, se_form;
    int se_range = -1, se_n_range = 1;
    se->add_option("mode", se_mode, "invariant-forms | rb | nijenhuis | quadratic-rbn")
        ->required()
        ->check(CLI::IsMember({"invariant-forms", "rb", "nijenhuis", "quadratic-rbn"}));
    se->add_option("--algebra", se_alg)->check(CLI::ExistingFile);
    se->add_option("--pair", se_pair)->check(CLI::ExistingFile);
    se->add_option("--form", se_form)->check(CLI::ExistingFile);
    se->add_option("--range", se_range, "Entries range over -range..range");
    se->add_option("--n-range", se_n_range, "Grid for N in quadratic-rbn");
    std::string se_out;
    se->add_option("--out", se_out, "Write {count, found} here as JSON");
    se->callback([&] {
        command = "search " + se_mode;
        if (se_mode == "rb" ? se_pair.empty() : se_alg.empty())
            throw CLI::ValidationError(se_mode == "rb" ? "search rb needs --pair" : "this search needs --algebra");
        if (se_mode == "quadratic-rbn" && se_form.empty()) throw CLI::ValidationError("quadratic-rbn needs --form");
        action = [&] {
            return run(g, command, [&] {
                Outcome o;
                Json found = Json::array();
                auto add_all = [&](const std::vector<RMatrix>& ms) {
                    for (const auto& m : ms) {
                        found.push_back(operator_to_json(m));
                        o.lines.push_back(matrix_text(m));
                    }
                };
                if (se_mode == "invariant-forms") {
                    add_all(grid_invariant_forms(load_algebra(se_alg), se_range < 0 ? 2 : se_range));
                } else if (se_mode == "rb") {
                    add_all(grid_relative_rb(load_pair(se_pair), se_range < 0 ? 2 : se_range));
                } else if (se_mode == "nijenhuis") {
                    add_all(grid_nijenhuis(load_algebra(se_alg), se_range < 0 ? 1 : se_range));
                } else {
                    QuadraticForm qf = QuadraticForm::make(load_algebra(se_alg), load_operator(se_form));
                    for (const auto& d : grid_quadratic_rbn(qf, se_range < 0 ? 2 : se_range, se_n_range)) {
                        found.push_back({{"R", operator_to_json(d.R)}, {"N", operator_to_json(d.N)}});
                        o.lines.push_back("R = " + matrix_text(d.R) + "  N = " + matrix_text(d.N));
                    }
                }
                o.result["count"] = found.size();
                o.result["found"] = found;
                if (!se_out.empty()) write_json_file(se_out, o.result);
                o.lines.push_back(std::to_string(found.size()) + " found");
                return o;
            });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }
    return action ? action() : kUsage;
}
