#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "cstarinv/operator.hpp"

namespace cstarinv {

/// Complemented closed submodule of E, represented canonically by its
/// orthogonal projection.  Generators, when present, are advisory metadata.
class Submodule {
public:
    Submodule() = default;
    explicit Submodule(Operator projection,
                       std::optional<std::vector<ModuleVector>> generators = std::nullopt);

    static Submodule full(const AlgebraShape& shape, int rank);
    static Submodule zero(const AlgebraShape& shape, int rank);

    const Operator& projection() const { return projection_; }
    const std::optional<std::vector<ModuleVector>>& generators() const { return generators_; }

    /// P != 0 and P != I within the tolerance's guard band.
    bool nontrivial(const ToleranceConfig& tol) const;

    /// ||P^2 - P|| and ||P^* - P|| within tol; generators fixed by P.
    void validate(const ToleranceConfig& tol) const;

private:
    Operator projection_;
    std::optional<std::vector<ModuleVector>> generators_;
};

/// Projection onto the closed A-span of the generators, P = G G^dagger.
Submodule submodule_from_generators(const std::vector<ModuleVector>& gens);

/// Orthogonal complement, projection I - P.
Submodule complement(const Submodule& W);

/// T(W) contained in W, decided by ||PTP - TP|| <= atol + rtol * ||T||.
bool is_invariant(const Operator& T, const Submodule& W, const ToleranceConfig& tol);

/// W and its complement both T-invariant, decided by ||TP - PT|| <= tol scale.
bool is_reducing(const Operator& T, const Submodule& W, const ToleranceConfig& tol);

/// Corners (PTP, PT(I-P), (I-P)TP, (I-P)T(I-P)), each a full-size operator
/// supported on its corner; they sum to T exactly.
std::tuple<Operator, Operator, Operator, Operator> block_decompose(const Operator& T,
                                                                   const Submodule& W);

/// Sum of corner blocks; each input must be supported on its corner.
Operator assemble_from_blocks(const Operator& A, const Operator& B, const Operator& C,
                              const Operator& D, const Submodule& W,
                              const ToleranceConfig& tol = {});

}  // namespace cstarinv
