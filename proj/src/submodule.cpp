#include "cstarinv/submodule.hpp"

#include <Eigen/SVD>

namespace cstarinv {

Submodule::Submodule(Operator projection, std::optional<std::vector<ModuleVector>> generators)
    : projection_(std::move(projection)), generators_(std::move(generators)) {}

Submodule Submodule::full(const AlgebraShape& shape, int rank) {
    return Submodule(Operator::identity(shape, rank));
}

Submodule Submodule::zero(const AlgebraShape& shape, int rank) {
    return Submodule(Operator::zero(shape, rank));
}

bool Submodule::nontrivial(const ToleranceConfig& tol) const {
    const Operator& P = projection_;
    Operator I = Operator::identity(P.shape(), P.rank());
    double guard = tol.atol * 10.0;
    return operator_norm(P) > guard && operator_norm(I - P) > guard;
}

void Submodule::validate(const ToleranceConfig& tol) const {
    const Operator& P = projection_;
    double np = operator_norm(P);
    if (operator_norm(compose(P, P) - P) > tol.scale(np))
        throw ValidationError("projection is not idempotent");
    if (operator_norm(adjoint(P) - P) > tol.scale(np))
        throw ValidationError("projection is not self-adjoint");
    if (generators_) {
        for (const auto& g : *generators_) {
            if (vector_norm(apply(P, g) - g) > tol.scale(vector_norm(g)))
                throw ValidationError("generator is not fixed by the projection");
        }
    }
}

Submodule submodule_from_generators(const std::vector<ModuleVector>& gens) {
    if (gens.empty()) throw ValidationError("submodule needs at least one generator");
    const AlgebraShape& shape = gens.front().shape();
    int k = gens.front().rank();
    for (const auto& g : gens) require_compatible(gens.front(), g);
    // P = G G^dagger where G : A^j -> E maps coordinates to the generators.
    std::vector<CMatrix> blocks;
    for (int i = 0; i < shape.num_blocks(); ++i) {
        int n = shape.dim(i);
        Eigen::Index rows = static_cast<Eigen::Index>(k) * n;
        CMatrix G(rows, static_cast<Eigen::Index>(gens.size()) * n);
        for (std::size_t j = 0; j < gens.size(); ++j)
            G.block(0, static_cast<Eigen::Index>(j) * n, rows, n) = gens[j].block(i);
        Eigen::JacobiSVD<CMatrix> svd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sigma = svd.singularValues();
        double cutoff = sigma.size() > 0
                            ? sigma(0) * static_cast<double>(std::max(G.rows(), G.cols())) * 1e-12
                            : 0.0;
        CMatrix P = CMatrix::Zero(rows, rows);
        for (Eigen::Index j = 0; j < sigma.size(); ++j)
            if (sigma(j) > cutoff) P += svd.matrixU().col(j) * svd.matrixU().col(j).adjoint();
        blocks.push_back(std::move(P));
    }
    return Submodule(Operator(shape, k, std::move(blocks)), gens);
}

Submodule complement(const Submodule& W) {
    const Operator& P = W.projection();
    return Submodule(Operator::identity(P.shape(), P.rank()) - P);
}

bool is_invariant(const Operator& T, const Submodule& W, const ToleranceConfig& tol) {
    const Operator& P = W.projection();
    require_compatible(T, P);
    Operator TP = compose(T, P);
    return operator_norm(compose(P, TP) - TP) <= tol.scale(operator_norm(T));
}

bool is_reducing(const Operator& T, const Submodule& W, const ToleranceConfig& tol) {
    const Operator& P = W.projection();
    require_compatible(T, P);
    return operator_norm(compose(T, P) - compose(P, T)) <= tol.scale(operator_norm(T));
}

std::tuple<Operator, Operator, Operator, Operator> block_decompose(const Operator& T,
                                                                   const Submodule& W) {
    const Operator& P = W.projection();
    require_compatible(T, P);
    Operator Q = Operator::identity(P.shape(), P.rank()) - P;
    return {compose(P, compose(T, P)), compose(P, compose(T, Q)), compose(Q, compose(T, P)),
            compose(Q, compose(T, Q))};
}

Operator assemble_from_blocks(const Operator& A, const Operator& B, const Operator& C,
                              const Operator& D, const Submodule& W, const ToleranceConfig& tol) {
    const Operator& P = W.projection();
    Operator Q = Operator::identity(P.shape(), P.rank()) - P;
    auto corner_check = [&](const Operator& X, const Operator& left, const Operator& right,
                            const char* name) {
        double nx = operator_norm(X);
        if (operator_norm(compose(left, compose(X, right)) - X) > tol.scale(nx))
            throw CornerSupportViolation(name);
    };
    corner_check(A, P, P, "A");
    corner_check(B, P, Q, "B");
    corner_check(C, Q, P, "C");
    corner_check(D, Q, Q, "D");
    return A + B + C + D;
}

}  // namespace cstarinv
