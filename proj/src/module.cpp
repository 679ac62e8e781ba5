#include "cstarinv/module.hpp"

#include <cmath>

#include "cstarinv/operator.hpp"

namespace cstarinv {

void require_compatible(const ModuleVector& x, const ModuleVector& y) {
    if (!(x.shape() == y.shape()) || x.rank() != y.rank())
        throw ShapeMismatch("module vectors are not compatible");
}

ModuleVector::ModuleVector(AlgebraShape shape, int rank, std::vector<CMatrix> blocks)
    : shape_(std::move(shape)), rank_(rank), blocks_(std::move(blocks)) {
    if (rank_ < 1) throw ValidationError("module rank must be positive");
    if (static_cast<int>(blocks_.size()) != shape_.num_blocks())
        throw ShapeMismatch("block count does not match shape");
    for (int i = 0; i < shape_.num_blocks(); ++i) {
        const auto& b = blocks_[static_cast<std::size_t>(i)];
        if (b.rows() != static_cast<Eigen::Index>(rank_) * shape_.dim(i) ||
            b.cols() != shape_.dim(i))
            throw ShapeMismatch("vector block " + std::to_string(i) + " has wrong size");
    }
}

ModuleVector ModuleVector::from_entries(const std::vector<AlgebraElement>& entries) {
    if (entries.empty()) throw ValidationError("module vector needs at least one entry");
    const AlgebraShape& shape = entries.front().shape();
    int k = static_cast<int>(entries.size());
    std::vector<CMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(shape.num_blocks()));
    for (int i = 0; i < shape.num_blocks(); ++i) {
        int n = shape.dim(i);
        CMatrix b(static_cast<Eigen::Index>(k) * n, n);
        for (int j = 0; j < k; ++j) {
            require_same_shape(shape, entries[static_cast<std::size_t>(j)].shape());
            b.block(static_cast<Eigen::Index>(j) * n, 0, n, n) =
                entries[static_cast<std::size_t>(j)].block(i);
        }
        blocks.push_back(std::move(b));
    }
    return ModuleVector(shape, k, std::move(blocks));
}

ModuleVector ModuleVector::zero(const AlgebraShape& shape, int rank) {
    std::vector<CMatrix> blocks;
    for (int i = 0; i < shape.num_blocks(); ++i)
        blocks.push_back(CMatrix::Zero(static_cast<Eigen::Index>(rank) * shape.dim(i), shape.dim(i)));
    return ModuleVector(shape, rank, std::move(blocks));
}

ModuleVector ModuleVector::basis(const AlgebraShape& shape, int rank, int j) {
    ModuleVector x = zero(shape, rank);
    for (int i = 0; i < shape.num_blocks(); ++i) {
        int n = shape.dim(i);
        x.block(i).block(static_cast<Eigen::Index>(j) * n, 0, n, n) = CMatrix::Identity(n, n);
    }
    return x;
}

AlgebraElement ModuleVector::entry(int j) const {
    std::vector<CMatrix> blocks;
    for (int i = 0; i < num_blocks(); ++i) {
        int n = shape_.dim(i);
        blocks.push_back(block(i).block(static_cast<Eigen::Index>(j) * n, 0, n, n));
    }
    return AlgebraElement(shape_, std::move(blocks));
}

ModuleVector ModuleVector::operator+(const ModuleVector& other) const {
    require_compatible(*this, other);
    std::vector<CMatrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] + other.blocks_[i]);
    return ModuleVector(shape_, rank_, std::move(blocks));
}

ModuleVector ModuleVector::operator-(const ModuleVector& other) const {
    require_compatible(*this, other);
    std::vector<CMatrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] - other.blocks_[i]);
    return ModuleVector(shape_, rank_, std::move(blocks));
}

ModuleVector ModuleVector::operator*(Complex scalar) const {
    std::vector<CMatrix> blocks;
    for (const auto& b : blocks_) blocks.push_back(b * scalar);
    return ModuleVector(shape_, rank_, std::move(blocks));
}

AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y) {
    require_compatible(x, y);
    std::vector<CMatrix> blocks;
    for (int i = 0; i < x.num_blocks(); ++i) blocks.push_back(x.block(i).adjoint() * y.block(i));
    return AlgebraElement(x.shape(), std::move(blocks));
}

double vector_norm(const ModuleVector& x) {
    return std::sqrt(norm(inner_product(x, x)));
}

ModuleVector right_action(const ModuleVector& x, const AlgebraElement& a) {
    require_same_shape(x.shape(), a.shape());
    std::vector<CMatrix> blocks;
    for (int i = 0; i < x.num_blocks(); ++i) blocks.push_back(x.block(i) * a.block(i));
    return ModuleVector(x.shape(), x.rank(), std::move(blocks));
}

Operator rank_one(const ModuleVector& x, const ModuleVector& y) {
    require_compatible(x, y);
    // theta_{x,y}(z) = x <y,z>, per block X * Y^*.
    std::vector<CMatrix> blocks;
    for (int i = 0; i < x.num_blocks(); ++i) blocks.push_back(x.block(i) * y.block(i).adjoint());
    return Operator(x.shape(), x.rank(), std::move(blocks));
}

}  // namespace cstarinv
