#include "cstarinv/properties.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "cstarinv/equations.hpp"
#include "cstarinv/spectral.hpp"

namespace cstarinv {

namespace {

int scaled_count(int reference, const SuiteOptions& opt) {
    long n = static_cast<long>(reference) * opt.cases / 100;
    return static_cast<int>(std::max(1L, n));
}

double min_singular(const Operator& T) {
    double s = std::numeric_limits<double>::infinity();
    for (int i = 0; i < T.num_blocks(); ++i) {
        Eigen::JacobiSVD<CMatrix> svd(T.block(i));
        const auto& sigma = svd.singularValues();
        if (sigma.size() > 0) s = std::min(s, sigma(sigma.size() - 1));
    }
    return s;
}

double hermitian_lower_bound(const Operator& T) {
    double b = std::numeric_limits<double>::infinity();
    for (int i = 0; i < T.num_blocks(); ++i) {
        CMatrix h = (T.block(i) + T.block(i).adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().size() > 0) b = std::min(b, es.eigenvalues()(0));
    }
    return b;
}

/// Aggregates case ratios (violation / threshold); the record passes when the
/// worst ratio stays at or below 1.
struct RatioAggregate {
    double worst = 0.0;
    void add(double violation, double threshold) {
        if (threshold <= 0.0) threshold = 1e-300;
        worst = std::max(worst, violation / threshold);
    }
    void fail() { worst = std::max(worst, 2.0); }
    CheckRecord record(std::string name) const { return {std::move(name), worst, 1.0}; }
};

}  // namespace

Instance suite_instance(int index, bool need_nontrivial_submodule) {
    static const std::vector<AlgebraShape> shapes = {AlgebraShape{1}, AlgebraShape{2},
                                                     AlgebraShape{1, 2}, AlgebraShape{2, 3}};
    Instance inst;
    inst.shape = shapes[static_cast<std::size_t>(index) % shapes.size()];
    inst.rank = 1 + (index / 4) % 4;
    // Shape (1) with k = 1 is E = C, which has no nontrivial submodules.
    if (need_nontrivial_submodule && inst.shape.total_dim() * inst.rank < 2) inst.rank = 2;
    return inst;
}

CheckRecord suite_cstar_axioms(const SuiteOptions& opt) {
    RandomGen rng(opt.seed);
    RatioAggregate agg;
    int n = scaled_count(200, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c);
        AlgebraElement a = rng.element(inst.shape);
        AlgebraElement b = rng.element(inst.shape);
        double na = norm(a), nb = norm(b);
        agg.add(std::abs(norm(mul(star(a), a)) - na * na), opt.tol.scale(na * na));
        agg.add(std::max(0.0, norm(mul(a, b)) - na * nb), opt.tol.scale(na * nb));
        agg.add(norm(star(mul(a, b)) - mul(star(b), star(a))), opt.tol.scale(na * nb));
        if (!is_positive(mul(star(a), a), opt.tol)) agg.fail();
    }
    return agg.record("cstar_axioms");
}

CheckRecord suite_penrose(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 1);
    RatioAggregate agg;
    int n = scaled_count(200, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c);
        Operator T = rng.op(inst.shape, inst.rank);
        // The epsilon-route cross-check needs a safely bounded smallest
        // singular value; reroll the rare near-singular draw.
        for (int tries = 0; tries < 50 && min_singular(T) < 0.01; ++tries)
            T = rng.op(inst.shape, inst.rank);
        Operator pinv = moore_penrose(T);
        double nt = operator_norm(T), np = operator_norm(pinv);
        agg.add(operator_norm(compose(T, compose(pinv, T)) - T), opt.tol.scale(nt));
        agg.add(operator_norm(compose(pinv, compose(T, pinv)) - pinv), opt.tol.scale(np));
        Operator tp = compose(T, pinv), pt = compose(pinv, T);
        agg.add(operator_norm(adjoint(tp) - tp), opt.tol.scale(1.0));
        agg.add(operator_norm(adjoint(pt) - pt), opt.tol.scale(1.0));
        // Independent limit-formula route (T^*T + eps I)^{-1} T^*.
        const double eps = 1e-12;
        Operator alt = Operator::zero(inst.shape, inst.rank);
        for (int i = 0; i < T.num_blocks(); ++i) {
            const CMatrix& b = T.block(i);
            CMatrix gram = b.adjoint() * b + eps * CMatrix::Identity(b.rows(), b.cols());
            alt.block(i) = gram.llt().solve(b.adjoint());
        }
        agg.add(operator_norm(pinv - alt), 1e-6 * np);
    }
    return agg.record("penrose_suite");
}

CheckRecord suite_invariance_equivalence(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 2);
    RatioAggregate agg;
    int n = scaled_count(100, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, /*need_nontrivial_submodule=*/true);
        Operator T;
        Submodule W;
        if (c % 2 == 0) {
            std::tie(T, W) = rng.invariant_pair(inst.shape, inst.rank);
        } else {
            T = rng.op(inst.shape, inst.rank);
            W = rng.projection(inst.shape, inst.rank);
        }
        const Operator& P = W.projection();
        bool via_is_invariant = is_invariant(T, W, opt.tol);
        Operator TP = compose(T, P);
        bool via_corner =
            operator_norm(compose(P, TP) - TP) <= opt.tol.scale(operator_norm(T));
        bool via_sts = verify_sts(P, T, opt.tol).passes;
        if (via_is_invariant != via_corner || via_corner != via_sts) agg.fail();
    }
    return agg.record("invariance_equivalence");
}

CheckRecord suite_wong_family(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 3);
    RatioAggregate agg;
    int n = scaled_count(100, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, true);
        auto [T, W] = rng.invariant_pair(inst.shape, inst.rank);
        bool zero_z = c % 4 == 0;
        Operator Z = zero_z ? Operator::zero(inst.shape, inst.rank)
                            : rng.op(inst.shape, inst.rank);
        Operator S = sts_solution(T, W, Z, opt.tol);
        StsReport rep = verify_sts(S, T, opt.tol);
        agg.add(rep.residual, rep.threshold);
        if (zero_z) {
            agg.add(operator_norm(compose(S, S) - S), opt.tol.scale(1.0));
            agg.add(operator_norm(adjoint(S) - S), opt.tol.scale(1.0));
        }
    }
    return agg.record("wong_solution_family");
}

CheckRecord suite_douglas(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 4);
    RatioAggregate agg;
    int n = scaled_count(100, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c);
        Operator T = rng.op(inst.shape, inst.rank);
        Operator S = compose(T, rng.op(inst.shape, inst.rank));
        Operator Z = rng.op(inst.shape, inst.rank);
        Operator X = douglas_solution(T, S, Z, opt.tol);
        agg.add(operator_norm(compose(T, X) - S), opt.tol.scale(operator_norm(S)));
        // Completeness: two members of the family differ inside Ker(T).
        Operator X2 = douglas_solution(T, S, rng.op(inst.shape, inst.rank), opt.tol);
        agg.add(operator_norm(compose(T, X - X2)), opt.tol.scale(operator_norm(T)));
    }
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, true);
        Submodule P = rng.projection(inst.shape, inst.rank);
        Operator T = compose(P.projection(), rng.op(inst.shape, inst.rank));
        Operator S = rng.op(inst.shape, inst.rank);
        try {
            douglas_solution(T, S, Operator::zero(inst.shape, inst.rank), opt.tol);
            agg.fail();  // planted unsolvable instance was accepted
        } catch (const NotSolvable& e) {
            if (e.residual < 10.0 * opt.tol.scale(operator_norm(S))) agg.fail();
        }
    }
    return agg.record("douglas_equation");
}

CheckRecord suite_kernel_tower(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 5);
    RatioAggregate agg;
    int n = scaled_count(50, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, true);
        auto [T, W] = rng.invariant_pair(inst.shape, inst.rank);
        Operator S = sts_solution(T, W, rng.op(inst.shape, inst.rank), opt.tol);
        KernelTowerReport rep = kernel_tower_invariance(T, S, 4, opt.tol);
        for (const auto& level : rep.levels) agg.add(level.residual, level.threshold);
    }
    return agg.record("kernel_tower_invariance");
}

CheckRecord suite_decompose_assemble(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 6);
    RatioAggregate agg;
    int n = scaled_count(200, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, true);
        Operator T;
        Submodule W;
        if (c % 2 == 0) {
            std::tie(T, W) = rng.invariant_pair(inst.shape, inst.rank);
        } else {
            T = rng.op(inst.shape, inst.rank);
            W = rng.projection(inst.shape, inst.rank);
        }
        auto [A, B, C, D] = block_decompose(T, W);
        Operator back = assemble_from_blocks(A, B, C, D, W, opt.tol);
        agg.add(operator_norm(back - T), opt.tol.scale(operator_norm(T)));
        bool corner_says = operator_norm(C) <= opt.tol.scale(operator_norm(T));
        if (corner_says != is_invariant(T, W, opt.tol)) agg.fail();
    }
    return agg.record("decompose_assemble_roundtrip");
}

CheckRecord suite_unitary_corner_norm(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 7);
    RatioAggregate agg;
    int n = scaled_count(50, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, true);
        // Corner ranks with at least one strictly interior block, so both the
        // unitary corner and the off-diagonal block are nonzero.
        std::vector<int> ranks(static_cast<std::size_t>(inst.shape.num_blocks()), 0);
        for (int attempt = 0; attempt < 256; ++attempt) {
            bool interior = false;
            for (int i = 0; i < inst.shape.num_blocks(); ++i) {
                int d = inst.rank * inst.shape.dim(i);
                std::uniform_int_distribution<int> dist(0, d);
                ranks[static_cast<std::size_t>(i)] = dist(rng.engine());
                if (ranks[static_cast<std::size_t>(i)] > 0 &&
                    ranks[static_cast<std::size_t>(i)] < d)
                    interior = true;
            }
            if (interior) break;
        }
        Operator T0 = Operator::zero(inst.shape, inst.rank);
        Operator P0 = Operator::zero(inst.shape, inst.rank);
        Operator corner_u = rng.unitary(inst.shape, inst.rank);
        Operator filler = rng.op(inst.shape, inst.rank);
        double b_norm = 0.0;
        for (int i = 0; i < T0.num_blocks(); ++i) {
            Eigen::Index d = T0.block(i).rows();
            Eigen::Index r = ranks[static_cast<std::size_t>(i)];
            P0.block(i).topLeftCorner(r, r) = CMatrix::Identity(r, r);
            T0.block(i).topLeftCorner(r, r) = corner_u.block(i).topLeftCorner(r, r);
            // Re-unitarize the truncated corner.
            if (r > 0) {
                Eigen::JacobiSVD<CMatrix> svd(T0.block(i).topLeftCorner(r, r),
                                              Eigen::ComputeFullU | Eigen::ComputeFullV);
                T0.block(i).topLeftCorner(r, r) = svd.matrixU() * svd.matrixV().adjoint();
            }
            T0.block(i).topRightCorner(r, d - r) = filler.block(i).topRightCorner(r, d - r);
            if (r > 0 && d - r > 0) {
                Eigen::JacobiSVD<CMatrix> bs(T0.block(i).topRightCorner(r, d - r));
                b_norm = std::max(b_norm, bs.singularValues()(0));
            }
            T0.block(i).bottomRightCorner(d - r, d - r) =
                filler.block(i).bottomRightCorner(d - r, d - r);
        }
        if (b_norm < 0.1) continue;  // degenerate draw, off-diagonal part too small
        Operator U = rng.unitary(inst.shape, inst.rank);
        Operator T = compose(adjoint(U), compose(T0, U));
        if (operator_norm(T) <= 1.0) agg.fail();
    }
    return agg.record("unitary_corner_contraction");
}

CheckRecord suite_mp_reducing(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 8);
    RatioAggregate agg;
    int n = scaled_count(100, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, true);
        auto [T0, W] = rng.reducing_pair(inst.shape, inst.rank);
        // Shift so the Hermitian part is bounded below by 0.5 I; adding a real
        // multiple of the identity preserves commuting with the projection.
        double h = hermitian_lower_bound(T0);
        std::uniform_real_distribution<double> margin(0.0, 0.5);
        Operator T =
            T0 + Operator::identity(inst.shape, inst.rank) * Complex(0.5 + margin(rng.engine()) - h, 0.0);
        MpReducingReport rep = mp_reducing_verify(T, W, opt.tol);
        agg.add(rep.commutator_residual, rep.threshold);
        if (!rep.invertible) agg.fail();  // Hermitian bound forces invertibility
        Operator pinv = moore_penrose(T);
        agg.add(rep.inverse_residual,
                opt.tol.scale(operator_norm(T) * operator_norm(pinv)));
    }
    return agg.record("mp_inverse_reducing");
}

CheckRecord suite_eigen_submodules(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 9);
    RatioAggregate agg;
    int n = scaled_count(100, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c);
        Operator K = rng.op(inst.shape, inst.rank);
        SpectrumReport spec = spectrum(K);
        for (const auto& pt : spec.eigenvalues) {
            if (std::abs(pt.value) <= 1e-8) continue;
            Submodule W = eigen_submodule(K, pt.value, opt.tol);
            agg.add(1.0 - operator_norm(W.projection()), 1e-9);
            if (!is_invariant(K, W, opt.tol)) agg.fail();
        }
    }
    return agg.record("eigen_submodule_nonzero");
}

CheckRecord suite_hyperinvariant(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 10);
    RatioAggregate agg;
    int n = scaled_count(100, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, true);
        bool planted_nilpotent = c % 4 == 0;
        Operator K = planted_nilpotent ? rng.nilpotent(inst.shape, inst.rank)
                                       : rng.op(inst.shape, inst.rank);
        if (operator_norm(K) <= opt.tol.atol * 10.0) continue;  // all-1x1 nilpotent draw
        HyperinvariantResult result = find_hyperinvariant(K, opt.tol);
        if (planted_nilpotent && result.kind != HyperinvariantKind::Kernel) agg.fail();
        if (!result.submodule.nontrivial(opt.tol)) agg.fail();
        auto basis = commutant_basis(K, opt.tol);
        for (int s = 0; s < 20; ++s) {
            Operator S = Operator::zero(inst.shape, inst.rank);
            for (const auto& b : basis) S = S + b * rng.complex_scalar();
            agg.add(operator_norm(compose(K, S) - compose(S, K)),
                    opt.tol.scale(operator_norm(K) * operator_norm(S)));
            if (!is_invariant(S, result.submodule, opt.tol)) agg.fail();
        }
    }
    return agg.record("hyperinvariant_construction");
}

CheckRecord suite_unitary_transport(const SuiteOptions& opt) {
    RandomGen rng(opt.seed + 11);
    RatioAggregate agg;
    int n = scaled_count(50, opt);
    for (int c = 0; c < n; ++c) {
        Instance inst = suite_instance(c, true);
        auto [T, W] = rng.reducing_pair(inst.shape, inst.rank);
        Operator U = rng.unitary(inst.shape, inst.rank);
        Submodule Wt = transport_by_unitary(W, U, opt.tol);
        Operator Tt = compose(adjoint(U), compose(T, U));
        const Operator& Q = Wt.projection();
        agg.add(operator_norm(compose(Tt, Q) - compose(Q, Tt)),
                opt.tol.scale(operator_norm(T)));
        if (W.nontrivial(opt.tol) != Wt.nontrivial(opt.tol)) agg.fail();
    }
    return agg.record("unitary_transport");
}

CheckRecord suite_determinism(const SuiteOptions& opt) {
    auto make_report = [&]() {
        SuiteOptions small = opt;
        small.cases = std::max(1, opt.cases / 10);
        Report r;
        r.command = "determinism-probe";
        r.seed = opt.seed;
        r.checks.push_back(suite_cstar_axioms(small));
        RandomGen rng(opt.seed + 12);
        Instance inst = suite_instance(3, true);
        auto [T, W] = rng.invariant_pair(inst.shape, inst.rank);
        Operator S = sts_solution(T, W, rng.op(inst.shape, inst.rank), opt.tol);
        r.objects["S"] = to_json(S);
        return emit_report(r, ReportFormat::Machine);
    };
    std::string first = make_report();
    std::string second = make_report();
    return {"report_determinism", first == second ? 0.0 : 1.0, 0.5};
}

Report run_property_suites(const SuiteOptions& opt) {
    Report report;
    report.command = "check-properties";
    report.seed = opt.seed;
    report.info["cases"] = opt.cases;
    report.info["atol"] = opt.tol.atol;
    report.info["rtol"] = opt.tol.rtol;
    report.checks.push_back(suite_cstar_axioms(opt));
    report.checks.push_back(suite_penrose(opt));
    report.checks.push_back(suite_invariance_equivalence(opt));
    report.checks.push_back(suite_wong_family(opt));
    report.checks.push_back(suite_douglas(opt));
    report.checks.push_back(suite_kernel_tower(opt));
    report.checks.push_back(suite_decompose_assemble(opt));
    report.checks.push_back(suite_unitary_corner_norm(opt));
    report.checks.push_back(suite_mp_reducing(opt));
    report.checks.push_back(suite_eigen_submodules(opt));
    report.checks.push_back(suite_hyperinvariant(opt));
    report.checks.push_back(suite_unitary_transport(opt));
    report.checks.push_back(suite_determinism(opt));
    return report;
}

}  // namespace cstarinv
