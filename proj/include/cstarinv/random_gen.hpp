#pragma once

#include <random>

#include "cstarinv/submodule.hpp"

namespace cstarinv {

/// Seeded generators for random algebra elements, vectors, operators,
/// projections and structured instances used by the property suites.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    Complex complex_scalar();
    AlgebraElement element(const AlgebraShape& shape);
    ModuleVector vector(const AlgebraShape& shape, int rank);
    Operator op(const AlgebraShape& shape, int rank);

    /// Haar-like unitary per block, via QR of a Gaussian matrix.
    Operator unitary(const AlgebraShape& shape, int rank);

    /// Random orthogonal projection; nontrivial whenever the module admits one
    /// (some block dimension k * n_i >= 2).
    Submodule projection(const AlgebraShape& shape, int rank);

    /// Pair (T, W) with W T-invariant by construction (upper-triangular
    /// corners with respect to W).
    std::pair<Operator, Submodule> invariant_pair(const AlgebraShape& shape, int rank);

    /// Pair (T, W) with W reducing for T (block-diagonal with respect to W).
    std::pair<Operator, Submodule> reducing_pair(const AlgebraShape& shape, int rank);

    /// Nilpotent operator: strictly upper triangular per block, conjugated by
    /// a random unitary.
    Operator nilpotent(const AlgebraShape& shape, int rank);

private:
    std::mt19937_64 rng_;
    double gauss() { return gauss_(rng_); }
    std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace cstarinv
