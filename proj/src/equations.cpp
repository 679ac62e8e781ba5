#include "cstarinv/equations.hpp"

namespace cstarinv {

Operator kernel_projection(const Operator& L) {
    Operator pinv = moore_penrose(L);
    return Operator::identity(L.shape(), L.rank()) - compose(pinv, L);
}

Operator douglas_solution(const Operator& T, const Operator& S, const Operator& Z,
                          const ToleranceConfig& tol) {
    require_compatible(T, S);
    require_compatible(T, Z);
    Operator I = Operator::identity(T.shape(), T.rank());
    Operator pinv = moore_penrose(T);
    double residual = operator_norm(compose(I - compose(T, pinv), S));
    if (residual > tol.scale(operator_norm(S))) throw NotSolvable(residual);
    return compose(pinv, S) + compose(I - compose(pinv, T), Z);
}

Operator sts_solution(const Operator& T, const Submodule& W, const Operator& Z,
                      const ToleranceConfig& tol) {
    const Operator& P = W.projection();
    require_compatible(T, P);
    require_compatible(T, Z);
    if (!is_invariant(T, W, tol)) {
        Operator TP = compose(T, P);
        throw NotInvariant(operator_norm(compose(P, TP) - TP));
    }
    Operator I = Operator::identity(T.shape(), T.rank());
    Operator Q = canonical_projections(compose(T, P)).first;  // onto Ran(T P_W)
    return Q + compose(P, compose(Z, I - Q));
}

StsReport verify_sts(const Operator& S, const Operator& T, const ToleranceConfig& tol) {
    require_compatible(S, T);
    StsReport report;
    Operator TS = compose(T, S);
    report.residual = operator_norm(compose(S, TS) - TS);
    report.threshold = tol.scale(operator_norm(T) * operator_norm(S));
    report.passes = report.residual <= report.threshold;
    Operator I = Operator::identity(S.shape(), S.rank());
    double guard = tol.atol * 10.0;
    report.s_nonzero = operator_norm(S) > guard;
    report.s_not_identity = operator_norm(I - S) > guard;
    if (report.passes && report.s_nonzero && report.s_not_identity)
        report.invariant_submodule = Submodule(kernel_projection(I - S));
    return report;
}

KernelTowerReport kernel_tower_invariance(const Operator& T, const Operator& S, int n_max,
                                          const ToleranceConfig& tol) {
    require_compatible(T, S);
    if (n_max < 1) throw ValidationError("n_max must be positive");
    Operator TS = compose(T, S);
    double sts_residual = operator_norm(compose(S, TS) - TS);
    if (sts_residual > tol.scale(operator_norm(T) * operator_norm(S)))
        throw PreconditionFailed("STS = TS residual " + std::to_string(sts_residual));

    Operator I = Operator::identity(S.shape(), S.rank());
    Operator L = I - S;
    Operator K1 = kernel_projection(L);
    double nt = operator_norm(T);

    KernelTowerReport report;
    report.all_pass = true;
    Operator Ln = I;
    for (int n = 1; n <= n_max; ++n) {
        Ln = compose(Ln, L);
        Operator Kn = kernel_projection(Ln);
        KernelTowerReport::Level level;
        level.n = n;
        level.residual = operator_norm(compose(I - K1, compose(T, Kn)));
        level.threshold = tol.scale(nt);
        level.passes = level.residual <= level.threshold;
        report.all_pass = report.all_pass && level.passes;
        report.levels.push_back(level);
    }
    return report;
}

}  // namespace cstarinv
