// cstar-inv: invariant-submodule analysis for Hilbert modules over
// finite-dimensional C*-algebras.  JSON problem files in, deterministic
// reports out.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "cstarinv/equations.hpp"
#include "cstarinv/problem.hpp"
#include "cstarinv/properties.hpp"
#include "cstarinv/report.hpp"
#include "cstarinv/spectral.hpp"

namespace {

using namespace cstarinv;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPreconditionFailure = 3;

struct CommonOptions {
    std::string problem_path;
    std::optional<std::uint64_t> seed;
    int cases = 100;
    std::optional<double> atol;
    std::optional<double> rtol;
    std::string format = "human";
    std::string z_name;
};

ToleranceConfig resolve_tolerances(const CommonOptions& opt, const ToleranceConfig& from_file) {
    ToleranceConfig tol = from_file;
    if (opt.atol) tol.atol = *opt.atol;
    if (opt.rtol) tol.rtol = *opt.rtol;
    if (opt.seed) {
        tol.seed = *opt.seed;
    } else if (const char* env = std::getenv("CSTAR_INV_SEED")) {
        tol.seed = std::strtoull(env, nullptr, 10);
    }
    return tol;
}

ReportFormat resolve_format(const CommonOptions& opt) {
    return opt.format == "machine" ? ReportFormat::Machine : ReportFormat::Human;
}

Operator z_or_zero(const ProblemFile& problem, const CommonOptions& opt) {
    if (opt.z_name.empty()) return Operator::zero(problem.algebra, problem.rank);
    return problem.get_operator(opt.z_name);
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool problem_required = true) {
    auto* p = cmd->add_option("problem-file", opt.problem_path, "JSON problem file");
    if (problem_required) p->required();
    cmd->add_option("--seed", opt.seed, "randomization seed (fallback: CSTAR_INV_SEED)");
    cmd->add_option("--cases", opt.cases, "property-suite case scaling (100 = reference counts)");
    cmd->add_option("--atol", opt.atol, "absolute tolerance override");
    cmd->add_option("--rtol", opt.rtol, "relative tolerance override");
    cmd->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"human", "machine"}));
    cmd->add_option("--Z", opt.z_name, "name of the free parameter operator Z");
}

Report cmd_analyze(const ProblemFile& problem, const std::string& t_name,
                   const std::string& w_name, const ToleranceConfig& tol) {
    const Operator& T = problem.get_operator(t_name);
    const Submodule& W = problem.get_submodule(w_name);
    const Operator& P = W.projection();
    double nt = operator_norm(T);
    Report report;
    report.command = "analyze " + t_name + " " + w_name;
    Operator TP = compose(T, P);
    report.checks.push_back({"invariant (||PTP - TP||)",
                             operator_norm(compose(P, TP) - TP), tol.scale(nt)});
    report.checks.push_back({"reducing (||TP - PT||)",
                             operator_norm(TP - compose(P, T)), tol.scale(nt)});
    auto [A, B, C, D] = block_decompose(T, W);
    report.info["corner_norms"] = {{"A", operator_norm(A)},
                                   {"B", operator_norm(B)},
                                   {"C", operator_norm(C)},
                                   {"D", operator_norm(D)}};
    report.info["submodule_nontrivial"] = W.nontrivial(tol);
    return report;
}

Report cmd_decompose(const ProblemFile& problem, const std::string& t_name,
                     const std::string& w_name, const ToleranceConfig& tol) {
    const Operator& T = problem.get_operator(t_name);
    const Submodule& W = problem.get_submodule(w_name);
    auto [A, B, C, D] = block_decompose(T, W);
    Report report;
    report.command = "decompose " + t_name + " " + w_name;
    report.checks.push_back({"reassembly residual",
                             operator_norm((A + B + C + D) - T),
                             tol.scale(operator_norm(T))});
    report.objects["A"] = to_json(A);
    report.objects["B"] = to_json(B);
    report.objects["C"] = to_json(C);
    report.objects["D"] = to_json(D);
    return report;
}

Report cmd_solve_sts(const ProblemFile& problem, const std::string& t_name,
                     const std::string& w_name, const Operator& Z, const ToleranceConfig& tol) {
    const Operator& T = problem.get_operator(t_name);
    const Submodule& W = problem.get_submodule(w_name);
    Operator S = sts_solution(T, W, Z, tol);
    StsReport sts = verify_sts(S, T, tol);
    Report report;
    report.command = "solve-sts " + t_name + " " + w_name;
    report.checks.push_back({"||STS - TS||", sts.residual, sts.threshold});
    report.info["s_nonzero"] = sts.s_nonzero;
    report.info["s_not_identity"] = sts.s_not_identity;
    report.objects["S"] = to_json(S);
    if (sts.invariant_submodule)
        report.objects["Ker_I_minus_S"] = to_json(*sts.invariant_submodule);
    return report;
}

Report cmd_solve_douglas(const ProblemFile& problem, const std::string& t_name,
                         const std::string& s_name, const Operator& Z,
                         const ToleranceConfig& tol) {
    const Operator& T = problem.get_operator(t_name);
    const Operator& S = problem.get_operator(s_name);
    Operator X = douglas_solution(T, S, Z, tol);
    Report report;
    report.command = "solve-douglas " + t_name + " " + s_name;
    report.checks.push_back({"||TX - S||", operator_norm(compose(T, X) - S),
                             tol.scale(operator_norm(S))});
    report.objects["X"] = to_json(X);
    return report;
}

Report cmd_spectrum(const ProblemFile& problem, const std::string& k_name,
                    const ToleranceConfig& tol) {
    const Operator& K = problem.get_operator(k_name);
    SpectrumReport spec = spectrum(K);
    Report report;
    report.command = "spectrum " + k_name;
    Json evs = Json::array();
    for (const auto& pt : spec.eigenvalues)
        evs.push_back({{"value", {pt.value.real(), pt.value.imag()}},
                       {"multiplicity", pt.multiplicity}});
    report.info["eigenvalues"] = std::move(evs);
    report.info["contains_zero"] = spec.contains_zero;
    // The non-finitely-generated case (0 in the spectrum of every compact
    // operator) cannot occur in this representation.
    report.info["zero_forced_by_generation"] = "not applicable";
    for (const auto& pt : spec.eigenvalues) {
        if (std::abs(pt.value) <= 1e-8) continue;
        Submodule W = eigen_submodule(K, pt.value, tol);
        report.checks.push_back({"eigen-submodule nonzero", 1.0 - operator_norm(W.projection()),
                                 1e-9});
    }
    return report;
}

Report cmd_hyperinvariant(const ProblemFile& problem, const std::string& k_name,
                          const ToleranceConfig& tol) {
    const Operator& K = problem.get_operator(k_name);
    HyperinvariantResult result = find_hyperinvariant(K, tol);
    Report report;
    report.command = "hyperinvariant " + k_name;
    report.info["kind"] =
        result.kind == HyperinvariantKind::Eigenspace ? "eigenspace" : "kernel";
    if (result.kind == HyperinvariantKind::Eigenspace)
        report.info["eigenvalue"] = {result.eigenvalue.real(), result.eigenvalue.imag()};
    const Operator& P = result.submodule.projection();
    report.checks.push_back({"proper nonzero", result.submodule.nontrivial(tol) ? 0.0 : 1.0, 0.5});
    Operator KP = compose(K, P);
    report.checks.push_back({"K-invariance (||PKP - KP||)",
                             operator_norm(compose(P, KP) - KP),
                             tol.scale(operator_norm(K))});
    report.objects["W"] = to_json(result.submodule);
    return report;
}

Report cmd_numrange(const ProblemFile& problem, const std::string& t_name,
                    const ToleranceConfig& tol) {
    const Operator& T = problem.get_operator(t_name);
    NumRangeCertificate cert = zero_exclusion_certificate(T, tol);
    Report report;
    report.command = "numrange " + t_name;
    switch (cert.kind) {
        case CertificateKind::ExcludedByHermitianBound:
            report.info["kind"] = "excluded_by_hermitian_bound";
            break;
        case CertificateKind::WitnessFound:
            report.info["kind"] = "witness_found";
            break;
        case CertificateKind::Inconclusive:
            report.info["kind"] = "inconclusive";
            break;
    }
    report.info["hermitian_bound"] = cert.bound;
    if (cert.witness) {
        report.objects["witness"] = to_json(*cert.witness);
        report.checks.push_back({"witness objective", cert.witness_objective, tol.atol * 10.0});
        report.checks.push_back({"witness unit norm", std::abs(vector_norm(*cert.witness) - 1.0),
                                 tol.scale(1.0)});
    }
    return report;
}

Report cmd_mp(const ProblemFile& problem, const std::string& t_name, const ToleranceConfig& tol) {
    const Operator& T = problem.get_operator(t_name);
    Operator pinv = moore_penrose(T);
    double nt = operator_norm(T), np = operator_norm(pinv);
    Report report;
    report.command = "mp " + t_name;
    report.checks.push_back({"||T X T - T||", operator_norm(compose(T, compose(pinv, T)) - T),
                             tol.scale(nt)});
    report.checks.push_back({"||X T X - X||", operator_norm(compose(pinv, compose(T, pinv)) - pinv),
                             tol.scale(np)});
    Operator tp = compose(T, pinv), pt = compose(pinv, T);
    report.checks.push_back({"||(TX)* - TX||", operator_norm(adjoint(tp) - tp), tol.scale(1.0)});
    report.checks.push_back({"||(XT)* - XT||", operator_norm(adjoint(pt) - pt), tol.scale(1.0)});
    report.objects["T_pinv"] = to_json(pinv);
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant submodules of operators on Hilbert C*-modules"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string t_name, w_name, s_name, k_name;

    auto* analyze = app.add_subcommand("analyze", "invariance/reducing analysis of (T, W)");
    analyze->add_option("T", t_name, "operator name")->required();
    analyze->add_option("W", w_name, "submodule name")->required();
    add_common(analyze, opt);

    auto* decompose = app.add_subcommand("decompose", "block corners of T with respect to W");
    decompose->add_option("T", t_name, "operator name")->required();
    decompose->add_option("W", w_name, "submodule name")->required();
    add_common(decompose, opt);

    auto* solve_sts = app.add_subcommand("solve-sts", "solution of STS = TS from (T, W, Z)");
    solve_sts->add_option("T", t_name, "operator name")->required();
    solve_sts->add_option("W", w_name, "submodule name")->required();
    add_common(solve_sts, opt);

    auto* solve_douglas = app.add_subcommand("solve-douglas", "solution of TX = S");
    solve_douglas->add_option("T", t_name, "operator name")->required();
    solve_douglas->add_option("S", s_name, "operator name")->required();
    add_common(solve_douglas, opt);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "spectrum of K with eigen-submodules");
    spectrum_cmd->add_option("K", k_name, "operator name")->required();
    add_common(spectrum_cmd, opt);

    auto* hyper = app.add_subcommand("hyperinvariant", "hyperinvariant submodule of K");
    hyper->add_option("K", k_name, "operator name")->required();
    add_common(hyper, opt);

    auto* numrange = app.add_subcommand("numrange", "numerical-range zero exclusion for T");
    numrange->add_option("T", t_name, "operator name")->required();
    add_common(numrange, opt);

    auto* mp = app.add_subcommand("mp", "Moore-Penrose inverse of T");
    mp->add_option("T", t_name, "operator name")->required();
    add_common(mp, opt);

    auto* props = app.add_subcommand("check-properties", "run the randomized property suites");
    add_common(props, opt, /*problem_required=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        ProblemFile problem;
        if (!opt.problem_path.empty()) problem = parse_problem(opt.problem_path);
        ToleranceConfig tol = resolve_tolerances(opt, problem.tolerances);

        Report report;
        int exit_code = kExitOk;
        if (props->parsed()) {
            SuiteOptions suite_opt;
            suite_opt.seed = tol.seed;
            suite_opt.cases = opt.cases;
            suite_opt.tol = tol;
            report = run_property_suites(suite_opt);
            if (!report.all_pass()) exit_code = kExitPropertyFailure;
        } else if (analyze->parsed()) {
            report = cmd_analyze(problem, t_name, w_name, tol);
        } else if (decompose->parsed()) {
            report = cmd_decompose(problem, t_name, w_name, tol);
        } else if (solve_sts->parsed()) {
            report = cmd_solve_sts(problem, t_name, w_name, z_or_zero(problem, opt), tol);
        } else if (solve_douglas->parsed()) {
            report = cmd_solve_douglas(problem, t_name, s_name, z_or_zero(problem, opt), tol);
        } else if (spectrum_cmd->parsed()) {
            report = cmd_spectrum(problem, k_name, tol);
        } else if (hyper->parsed()) {
            report = cmd_hyperinvariant(problem, k_name, tol);
        } else if (numrange->parsed()) {
            report = cmd_numrange(problem, t_name, tol);
        } else if (mp->parsed()) {
            report = cmd_mp(problem, t_name, tol);
        }
        report.seed = tol.seed;
        std::cout << emit_report(report, resolve_format(opt));
        return exit_code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPreconditionFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPreconditionFailure;
    }
}
