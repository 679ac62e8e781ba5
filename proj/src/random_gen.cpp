#include "cstarinv/random_gen.hpp"

#include <Eigen/QR>

namespace cstarinv {

Complex RandomGen::complex_scalar() { return Complex(gauss(), gauss()); }

AlgebraElement RandomGen::element(const AlgebraShape& shape) {
    AlgebraElement a = AlgebraElement::zero(shape);
    for (int i = 0; i < a.num_blocks(); ++i)
        for (Eigen::Index r = 0; r < a.block(i).rows(); ++r)
            for (Eigen::Index c = 0; c < a.block(i).cols(); ++c)
                a.block(i)(r, c) = complex_scalar();
    return a;
}

ModuleVector RandomGen::vector(const AlgebraShape& shape, int rank) {
    ModuleVector x = ModuleVector::zero(shape, rank);
    for (int i = 0; i < x.num_blocks(); ++i)
        for (Eigen::Index r = 0; r < x.block(i).rows(); ++r)
            for (Eigen::Index c = 0; c < x.block(i).cols(); ++c) x.block(i)(r, c) = complex_scalar();
    return x;
}

Operator RandomGen::op(const AlgebraShape& shape, int rank) {
    Operator T = Operator::zero(shape, rank);
    for (int i = 0; i < T.num_blocks(); ++i)
        for (Eigen::Index r = 0; r < T.block(i).rows(); ++r)
            for (Eigen::Index c = 0; c < T.block(i).cols(); ++c) T.block(i)(r, c) = complex_scalar();
    return T;
}

Operator RandomGen::unitary(const AlgebraShape& shape, int rank) {
    Operator T = op(shape, rank);
    for (int i = 0; i < T.num_blocks(); ++i) {
        Eigen::HouseholderQR<CMatrix> qr(T.block(i));
        CMatrix q = qr.householderQ();
        // Fix the phase so the factorization is unique given the input.
        CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index j = 0; j < q.cols(); ++j) {
            Complex d = r(j, j);
            if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
        }
        T.block(i) = q;
    }
    return T;
}

Submodule RandomGen::projection(const AlgebraShape& shape, int rank) {
    Operator U = unitary(shape, rank);
    Operator P = Operator::zero(shape, rank);
    // Choose per-block corner ranks, rerolling an all-or-nothing draw as long
    // as a nontrivial projection exists at all.
    for (int attempt = 0; attempt < 64; ++attempt) {
        int total = 0, full = 0;
        for (int i = 0; i < P.num_blocks(); ++i) {
            Eigen::Index d = P.block(i).rows();
            std::uniform_int_distribution<int> dist(0, static_cast<int>(d));
            int r = dist(rng_);
            CMatrix diag = CMatrix::Zero(d, d);
            for (int j = 0; j < r; ++j) diag(j, j) = 1.0;
            P.block(i) = diag;
            total += r;
            full += static_cast<int>(d);
        }
        if ((total > 0 && total < full) || full <= 1) break;
    }
    return Submodule(compose(adjoint(U), compose(P, U)));
}

std::pair<Operator, Submodule> RandomGen::invariant_pair(const AlgebraShape& shape, int rank) {
    Submodule W = projection(shape, rank);
    const Operator& P = W.projection();
    Operator Q = Operator::identity(shape, rank) - P;
    Operator X = op(shape, rank), Y = op(shape, rank), Z = op(shape, rank);
    Operator T = compose(P, compose(X, P)) + compose(P, compose(Y, Q)) + compose(Q, compose(Z, Q));
    return {T, W};
}

std::pair<Operator, Submodule> RandomGen::reducing_pair(const AlgebraShape& shape, int rank) {
    Submodule W = projection(shape, rank);
    const Operator& P = W.projection();
    Operator Q = Operator::identity(shape, rank) - P;
    Operator X = op(shape, rank), Z = op(shape, rank);
    Operator T = compose(P, compose(X, P)) + compose(Q, compose(Z, Q));
    return {T, W};
}

Operator RandomGen::nilpotent(const AlgebraShape& shape, int rank) {
    Operator T = op(shape, rank);
    for (int i = 0; i < T.num_blocks(); ++i) {
        CMatrix strict = T.block(i).triangularView<Eigen::StrictlyUpper>();
        T.block(i) = strict;
    }
    Operator U = unitary(shape, rank);
    return compose(adjoint(U), compose(T, U));
}

}  // namespace cstarinv
