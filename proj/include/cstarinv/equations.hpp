#pragma once

#include <optional>
#include <vector>

#include "cstarinv/submodule.hpp"

namespace cstarinv {

struct StsReport {
    double residual = 0.0;        // ||STS - TS||
    double threshold = 0.0;
    bool passes = false;
    bool s_nonzero = false;       // ||S|| above the guard band
    bool s_not_identity = false;  // ||I - S|| above the guard band
    /// Ker(I - S) as a submodule, present when the residual passes and S is
    /// nontrivial; it is then T-invariant.
    std::optional<Submodule> invariant_submodule;
};

struct KernelTowerReport {
    struct Level {
        int n = 0;
        double residual = 0.0;  // ||(I - K_1) T K_n||
        double threshold = 0.0;
        bool passes = false;
    };
    std::vector<Level> levels;
    bool all_pass = false;
};

/// Solution X = T^dagger S + (I - T^dagger T) Z of the Douglas equation
/// TX = S.  Throws NotSolvable when Ran(S) is not contained in Ran(T)
/// within tolerance.
Operator douglas_solution(const Operator& T, const Operator& S, const Operator& Z,
                          const ToleranceConfig& tol = {});

/// Member S = Q + P_W Z (I - Q) of the solution family of STS = TS, where
/// Q projects onto Ran(T P_W).  Requires W to be T-invariant.
Operator sts_solution(const Operator& T, const Submodule& W, const Operator& Z,
                      const ToleranceConfig& tol = {});

/// Residual and nontriviality check for a candidate solution of STS = TS,
/// with the invariant submodule Ker(I - S) when applicable.
StsReport verify_sts(const Operator& S, const Operator& T, const ToleranceConfig& tol);

/// For each n <= n_max, checks that T maps Ker((I-S)^n) into Ker(I-S).
/// Requires ||STS - TS|| within tolerance.
KernelTowerReport kernel_tower_invariance(const Operator& T, const Operator& S, int n_max,
                                          const ToleranceConfig& tol = {});

/// Kernel projection I - L^dagger L.
Operator kernel_projection(const Operator& L);

}  // namespace cstarinv
