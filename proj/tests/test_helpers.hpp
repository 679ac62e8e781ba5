#pragma once

#include <Eigen/Dense>

#include "cstarinv/algebra.hpp"
#include "cstarinv/operator.hpp"
#include "cstarinv/random_gen.hpp"

namespace cstarinv::testing {

inline AlgebraElement elem1(Complex z) {
    CMatrix m(1, 1);
    m << z;
    return AlgebraElement(AlgebraShape{1}, {m});
}

inline AlgebraElement elem2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return AlgebraElement(AlgebraShape{2}, {m});
}

/// Operator on E = C^k (shape (1)) from a dense k x k matrix.
inline Operator scalar_operator(const CMatrix& m) {
    return Operator(AlgebraShape{1}, static_cast<int>(m.rows()), {m});
}

inline CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

/// Embed an algebra element into one dense block-diagonal matrix, the
/// reference representation for product oracles.
inline CMatrix embed_dense(const AlgebraElement& a) {
    int total = a.shape().total_dim();
    CMatrix m = CMatrix::Zero(total, total);
    int offset = 0;
    for (int i = 0; i < a.num_blocks(); ++i) {
        int n = a.shape().dim(i);
        m.block(offset, offset, n, n) = a.block(i);
        offset += n;
    }
    return m;
}

}  // namespace cstarinv::testing
