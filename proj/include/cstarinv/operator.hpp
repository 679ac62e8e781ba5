#pragma once

#include <utility>
#include <vector>

#include "cstarinv/module.hpp"

namespace cstarinv {

/// Adjointable operator on E = A^k, i.e. an element of M_k(A).  Stored per
/// algebra block i as a (k*n_i) x (k*n_i) complex matrix: the image of M_k(A)
/// in the direct sum of M_{k*n_i}(C), which the block embedding fills exactly.
class Operator {
public:
    Operator() = default;
    Operator(AlgebraShape shape, int rank, std::vector<CMatrix> blocks);

    /// Assemble from a k x k grid of algebra elements (grid[row][col]).
    static Operator from_grid(const AlgebraShape& shape,
                              const std::vector<std::vector<AlgebraElement>>& grid);
    static Operator identity(const AlgebraShape& shape, int rank);
    static Operator zero(const AlgebraShape& shape, int rank);

    const AlgebraShape& shape() const { return shape_; }
    int rank() const { return rank_; }
    int num_blocks() const { return shape_.num_blocks(); }
    int block_dim(int i) const { return rank_ * shape_.dim(i); }
    const CMatrix& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    CMatrix& block(int i) { return blocks_[static_cast<std::size_t>(i)]; }

    /// The (row, col) grid entry as an algebra element.
    AlgebraElement grid_entry(int row, int col) const;

    Operator operator+(const Operator& other) const;
    Operator operator-(const Operator& other) const;
    Operator operator*(Complex scalar) const;

private:
    AlgebraShape shape_;
    int rank_ = 0;
    std::vector<CMatrix> blocks_;
};

/// T x, blockwise matrix product.
ModuleVector apply(const Operator& T, const ModuleVector& x);

/// T S (first apply S, then T).
Operator compose(const Operator& T, const Operator& S);

/// T^*, blockwise conjugate transpose.
Operator adjoint(const Operator& T);

/// Max over blocks of the largest singular value.
double operator_norm(const Operator& T);

/// Moore-Penrose inverse via blockwise SVD.  Singular values below
/// (max sigma) * block_dim * 1e-12 are treated as zero.
Operator moore_penrose(const Operator& T);

/// (T T^dagger, T^dagger T): orthogonal projections onto Ran(T) and Ran(T^*).
std::pair<Operator, Operator> canonical_projections(const Operator& T);

/// V V^* V = V within tolerance.
bool is_partial_isometry(const Operator& V, const ToleranceConfig& tol);

void require_compatible(const Operator& T, const Operator& S);
void require_compatible(const Operator& T, const ModuleVector& x);

}  // namespace cstarinv
