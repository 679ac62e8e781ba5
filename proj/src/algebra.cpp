#include "cstarinv/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace cstarinv {

void require_same_shape(const AlgebraShape& a, const AlgebraShape& b) {
    if (!(a == b)) throw ShapeMismatch("algebra shapes differ");
}

AlgebraElement::AlgebraElement(AlgebraShape shape, std::vector<CMatrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != shape_.num_blocks())
        throw ShapeMismatch("block count does not match shape");
    for (int i = 0; i < shape_.num_blocks(); ++i) {
        const auto& b = blocks_[static_cast<std::size_t>(i)];
        if (b.rows() != shape_.dim(i) || b.cols() != shape_.dim(i))
            throw ShapeMismatch("block " + std::to_string(i) + " does not conform to shape");
    }
}

AlgebraElement AlgebraElement::zero(const AlgebraShape& shape) {
    std::vector<CMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(shape.num_blocks()));
    for (int i = 0; i < shape.num_blocks(); ++i)
        blocks.push_back(CMatrix::Zero(shape.dim(i), shape.dim(i)));
    return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::identity(const AlgebraShape& shape) {
    std::vector<CMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(shape.num_blocks()));
    for (int i = 0; i < shape.num_blocks(); ++i)
        blocks.push_back(CMatrix::Identity(shape.dim(i), shape.dim(i)));
    return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    require_same_shape(shape_, other.shape_);
    std::vector<CMatrix> blocks;
    blocks.reserve(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] + other.blocks_[i]);
    return AlgebraElement(shape_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    require_same_shape(shape_, other.shape_);
    std::vector<CMatrix> blocks;
    blocks.reserve(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] - other.blocks_[i]);
    return AlgebraElement(shape_, std::move(blocks));
}

AlgebraElement AlgebraElement::operator*(Complex scalar) const {
    std::vector<CMatrix> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& b : blocks_) blocks.push_back(b * scalar);
    return AlgebraElement(shape_, std::move(blocks));
}

AlgebraElement star(const AlgebraElement& a) {
    std::vector<CMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(a.num_blocks()));
    for (int i = 0; i < a.num_blocks(); ++i) blocks.push_back(a.block(i).adjoint());
    return AlgebraElement(a.shape(), std::move(blocks));
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_shape(a.shape(), b.shape());
    std::vector<CMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(a.num_blocks()));
    for (int i = 0; i < a.num_blocks(); ++i) blocks.push_back(a.block(i) * b.block(i));
    return AlgebraElement(a.shape(), std::move(blocks));
}

double norm(const AlgebraElement& a) {
    double n = 0.0;
    for (int i = 0; i < a.num_blocks(); ++i) {
        Eigen::JacobiSVD<CMatrix> svd(a.block(i));
        if (svd.singularValues().size() > 0) n = std::max(n, svd.singularValues()(0));
    }
    return n;
}

bool is_positive(const AlgebraElement& a, const ToleranceConfig& tol) {
    double na = norm(a);
    double herm_residual = norm(a - star(a));
    if (herm_residual > tol.scale(na)) return false;
    for (int i = 0; i < a.num_blocks(); ++i) {
        // Eigenvalues of the Hermitian part; the element is self-adjoint within tol.
        CMatrix h = (a.block(i) + a.block(i).adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().size() > 0 && es.eigenvalues()(0) < -tol.atol) return false;
    }
    return true;
}

AlgebraElement identity(const AlgebraShape& shape) { return AlgebraElement::identity(shape); }

}  // namespace cstarinv
