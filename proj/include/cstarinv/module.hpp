#pragma once

#include <vector>

#include "cstarinv/algebra.hpp"

namespace cstarinv {

class Operator;

/// Element of the standard module E = A^k.  Stored per algebra block i as a
/// (k*n_i) x n_i complex matrix, so operator application is plain matrix
/// multiplication.
class ModuleVector {
public:
    ModuleVector() = default;
    ModuleVector(AlgebraShape shape, int rank, std::vector<CMatrix> blocks);

    /// Build from a k-tuple of algebra elements.
    static ModuleVector from_entries(const std::vector<AlgebraElement>& entries);
    static ModuleVector zero(const AlgebraShape& shape, int rank);
    /// Coordinate vector e_j * a with a = identity: the j-th basis column.
    static ModuleVector basis(const AlgebraShape& shape, int rank, int j);

    const AlgebraShape& shape() const { return shape_; }
    int rank() const { return rank_; }
    int num_blocks() const { return shape_.num_blocks(); }
    const CMatrix& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    CMatrix& block(int i) { return blocks_[static_cast<std::size_t>(i)]; }

    /// The j-th entry as an algebra element.
    AlgebraElement entry(int j) const;

    ModuleVector operator+(const ModuleVector& other) const;
    ModuleVector operator-(const ModuleVector& other) const;
    ModuleVector operator*(Complex scalar) const;

private:
    AlgebraShape shape_;
    int rank_ = 0;
    std::vector<CMatrix> blocks_;
};

/// A-valued inner product <x,y> = sum_j x_j^* y_j.
AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y);

/// ||x|| = ||<x,x>||^{1/2}.
double vector_norm(const ModuleVector& x);

/// Entrywise right multiplication x -> x a.
ModuleVector right_action(const ModuleVector& x, const AlgebraElement& a);

/// Rank-one operator z -> x <y,z>.
Operator rank_one(const ModuleVector& x, const ModuleVector& y);

void require_compatible(const ModuleVector& x, const ModuleVector& y);

}  // namespace cstarinv
