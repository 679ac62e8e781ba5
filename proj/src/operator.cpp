#include "cstarinv/operator.hpp"

#include <Eigen/SVD>

namespace cstarinv {

void require_compatible(const Operator& T, const Operator& S) {
    if (!(T.shape() == S.shape()) || T.rank() != S.rank())
        throw ShapeMismatch("operators are not compatible");
}

void require_compatible(const Operator& T, const ModuleVector& x) {
    if (!(T.shape() == x.shape()) || T.rank() != x.rank())
        throw ShapeMismatch("operator and vector are not compatible");
}

Operator::Operator(AlgebraShape shape, int rank, std::vector<CMatrix> blocks)
    : shape_(std::move(shape)), rank_(rank), blocks_(std::move(blocks)) {
    if (rank_ < 1) throw ValidationError("operator rank must be positive");
    if (static_cast<int>(blocks_.size()) != shape_.num_blocks())
        throw ShapeMismatch("block count does not match shape");
    for (int i = 0; i < shape_.num_blocks(); ++i) {
        Eigen::Index d = static_cast<Eigen::Index>(rank_) * shape_.dim(i);
        const auto& b = blocks_[static_cast<std::size_t>(i)];
        if (b.rows() != d || b.cols() != d)
            throw ShapeMismatch("operator block " + std::to_string(i) + " has wrong size");
    }
}

Operator Operator::from_grid(const AlgebraShape& shape,
                             const std::vector<std::vector<AlgebraElement>>& grid) {
    int k = static_cast<int>(grid.size());
    if (k < 1) throw ValidationError("operator grid must be nonempty");
    std::vector<CMatrix> blocks;
    for (int i = 0; i < shape.num_blocks(); ++i) {
        int n = shape.dim(i);
        CMatrix b = CMatrix::Zero(static_cast<Eigen::Index>(k) * n, static_cast<Eigen::Index>(k) * n);
        for (int r = 0; r < k; ++r) {
            if (static_cast<int>(grid[static_cast<std::size_t>(r)].size()) != k)
                throw ShapeMismatch("operator grid must be k x k");
            for (int c = 0; c < k; ++c) {
                const AlgebraElement& e = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                require_same_shape(shape, e.shape());
                b.block(static_cast<Eigen::Index>(r) * n, static_cast<Eigen::Index>(c) * n, n, n) =
                    e.block(i);
            }
        }
        blocks.push_back(std::move(b));
    }
    return Operator(shape, k, std::move(blocks));
}

Operator Operator::identity(const AlgebraShape& shape, int rank) {
    std::vector<CMatrix> blocks;
    for (int i = 0; i < shape.num_blocks(); ++i) {
        Eigen::Index d = static_cast<Eigen::Index>(rank) * shape.dim(i);
        blocks.push_back(CMatrix::Identity(d, d));
    }
    return Operator(shape, rank, std::move(blocks));
}

Operator Operator::zero(const AlgebraShape& shape, int rank) {
    std::vector<CMatrix> blocks;
    for (int i = 0; i < shape.num_blocks(); ++i) {
        Eigen::Index d = static_cast<Eigen::Index>(rank) * shape.dim(i);
        blocks.push_back(CMatrix::Zero(d, d));
    }
    return Operator(shape, rank, std::move(blocks));
}

AlgebraElement Operator::grid_entry(int row, int col) const {
    std::vector<CMatrix> blocks;
    for (int i = 0; i < num_blocks(); ++i) {
        int n = shape_.dim(i);
        blocks.push_back(block(i).block(static_cast<Eigen::Index>(row) * n,
                                        static_cast<Eigen::Index>(col) * n, n, n));
    }
    return AlgebraElement(shape_, std::move(blocks));
}

Operator Operator::operator+(const Operator& other) const {
    require_compatible(*this, other);
    std::vector<CMatrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] + other.blocks_[i]);
    return Operator(shape_, rank_, std::move(blocks));
}

Operator Operator::operator-(const Operator& other) const {
    require_compatible(*this, other);
    std::vector<CMatrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] - other.blocks_[i]);
    return Operator(shape_, rank_, std::move(blocks));
}

Operator Operator::operator*(Complex scalar) const {
    std::vector<CMatrix> blocks;
    for (const auto& b : blocks_) blocks.push_back(b * scalar);
    return Operator(shape_, rank_, std::move(blocks));
}

ModuleVector apply(const Operator& T, const ModuleVector& x) {
    require_compatible(T, x);
    std::vector<CMatrix> blocks;
    for (int i = 0; i < T.num_blocks(); ++i) blocks.push_back(T.block(i) * x.block(i));
    return ModuleVector(x.shape(), x.rank(), std::move(blocks));
}

Operator compose(const Operator& T, const Operator& S) {
    require_compatible(T, S);
    std::vector<CMatrix> blocks;
    for (int i = 0; i < T.num_blocks(); ++i) blocks.push_back(T.block(i) * S.block(i));
    return Operator(T.shape(), T.rank(), std::move(blocks));
}

Operator adjoint(const Operator& T) {
    std::vector<CMatrix> blocks;
    for (int i = 0; i < T.num_blocks(); ++i) blocks.push_back(T.block(i).adjoint());
    return Operator(T.shape(), T.rank(), std::move(blocks));
}

double operator_norm(const Operator& T) {
    double n = 0.0;
    for (int i = 0; i < T.num_blocks(); ++i) {
        Eigen::JacobiSVD<CMatrix> svd(T.block(i));
        if (svd.singularValues().size() > 0) n = std::max(n, svd.singularValues()(0));
    }
    return n;
}

Operator moore_penrose(const Operator& T) {
    std::vector<CMatrix> blocks;
    for (int i = 0; i < T.num_blocks(); ++i) {
        const CMatrix& b = T.block(i);
        Eigen::JacobiSVD<CMatrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sigma = svd.singularValues();
        double cutoff = sigma.size() > 0
                            ? sigma(0) * static_cast<double>(b.rows()) * 1e-12
                            : 0.0;
        Eigen::VectorXd inv = Eigen::VectorXd::Zero(sigma.size());
        for (Eigen::Index j = 0; j < sigma.size(); ++j)
            if (sigma(j) > cutoff) inv(j) = 1.0 / sigma(j);
        blocks.push_back(svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint());
    }
    return Operator(T.shape(), T.rank(), std::move(blocks));
}

std::pair<Operator, Operator> canonical_projections(const Operator& T) {
    Operator pinv = moore_penrose(T);
    return {compose(T, pinv), compose(pinv, T)};
}

bool is_partial_isometry(const Operator& V, const ToleranceConfig& tol) {
    Operator vvv = compose(compose(V, adjoint(V)), V);
    return operator_norm(vvv - V) <= tol.scale(operator_norm(V));
}

}  // namespace cstarinv
