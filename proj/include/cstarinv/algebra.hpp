#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cstarinv/errors.hpp"
#include "cstarinv/tolerance.hpp"

namespace cstarinv {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Block structure (n_1, ..., n_m) of the coefficient algebra
/// A = M_{n_1}(C) + ... + M_{n_m}(C) (direct sum).
struct AlgebraShape {
    std::vector<int> block_dims;

    AlgebraShape() = default;
    AlgebraShape(std::initializer_list<int> dims) : block_dims(dims) { validate(); }
    explicit AlgebraShape(std::vector<int> dims) : block_dims(std::move(dims)) { validate(); }

    int num_blocks() const { return static_cast<int>(block_dims.size()); }
    int dim(int i) const { return block_dims[static_cast<std::size_t>(i)]; }
    int total_dim() const {
        int t = 0;
        for (int n : block_dims) t += n;
        return t;
    }

    bool operator==(const AlgebraShape& other) const = default;

private:
    void validate() const {
        if (block_dims.empty()) throw ValidationError("algebra shape needs at least one block");
        for (int n : block_dims)
            if (n < 1) throw ValidationError("algebra block dimension must be positive");
    }
};

/// Element of A: one dense complex n_i x n_i matrix per block.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraShape shape, std::vector<CMatrix> blocks);

    static AlgebraElement zero(const AlgebraShape& shape);
    static AlgebraElement identity(const AlgebraShape& shape);

    const AlgebraShape& shape() const { return shape_; }
    int num_blocks() const { return shape_.num_blocks(); }
    const CMatrix& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    CMatrix& block(int i) { return blocks_[static_cast<std::size_t>(i)]; }

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator*(Complex scalar) const;

private:
    AlgebraShape shape_;
    std::vector<CMatrix> blocks_;
};

/// Blockwise conjugate transpose, the *-operation of A.
AlgebraElement star(const AlgebraElement& a);

/// Blockwise matrix product. Throws ShapeMismatch when shapes differ.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

/// C*-norm: max over blocks of the largest singular value.
double norm(const AlgebraElement& a);

/// Self-adjoint within tolerance and every block's minimum eigenvalue >= -atol.
bool is_positive(const AlgebraElement& a, const ToleranceConfig& tol);

/// Unit of A.
AlgebraElement identity(const AlgebraShape& shape);

void require_same_shape(const AlgebraShape& a, const AlgebraShape& b);

}  // namespace cstarinv
