#include <doctest.h>

#include "cstarinv/submodule.hpp"
#include "test_helpers.hpp"

using namespace cstarinv;
using namespace cstarinv::testing;

namespace {
const ToleranceConfig kTol;
}

TEST_CASE("submodule from a coordinate generator") {
    AlgebraShape shape{1};
    ModuleVector e1 = ModuleVector::basis(shape, 2, 0);
    Submodule W = submodule_from_generators({e1});
    CHECK((W.projection().block(0) - mat2(1, 0, 0, 0)).norm() == doctest::Approx(0.0));
    W.validate(kTol);
    CHECK(W.nontrivial(kTol));
}

TEST_CASE("span of a full set of generators is everything") {
    AlgebraShape shape{2};
    Submodule W = submodule_from_generators(
        {ModuleVector::basis(shape, 2, 0), ModuleVector::basis(shape, 2, 1)});
    CHECK(operator_norm(W.projection() - Operator::identity(shape, 2)) <= kTol.scale(1.0));
    CHECK_FALSE(W.nontrivial(kTol));
}

TEST_CASE("generator span projection is generator-independent") {
    RandomGen rng(41);
    AlgebraShape shape{1, 2};
    ModuleVector g = rng.vector(shape, 3);
    Submodule W1 = submodule_from_generators({g});
    // Same span from rescaled generators plus an A-multiple of g.
    AlgebraElement a = rng.element(shape);
    Submodule W2 = submodule_from_generators({g * Complex(2.5, -1.0), right_action(g, a)});
    CHECK(operator_norm(W1.projection() - W2.projection()) <= kTol.scale(1.0));
}

TEST_CASE("projection of a span fixes its generators") {
    RandomGen rng(42);
    AlgebraShape shape{2, 3};
    std::vector<ModuleVector> gens = {rng.vector(shape, 2), rng.vector(shape, 2)};
    Submodule W = submodule_from_generators(gens);
    W.validate(kTol);
    for (const auto& g : gens)
        CHECK(vector_norm(apply(W.projection(), g) - g) <= kTol.scale(vector_norm(g)));
}

TEST_CASE("complement projection sums with the original to the identity") {
    RandomGen rng(43);
    AlgebraShape shape{1, 2};
    Submodule W = rng.projection(shape, 2);
    Submodule Wc = complement(W);
    CHECK(operator_norm(W.projection() + Wc.projection() - Operator::identity(shape, 2)) <=
          kTol.scale(1.0));
    CHECK(operator_norm(compose(W.projection(), Wc.projection())) <= kTol.scale(1.0));
}

TEST_CASE("Jordan block: span of e1 is invariant, span of e2 is not") {
    Operator T = scalar_operator(mat2(1, 1, 0, 1));
    AlgebraShape shape{1};
    Submodule span_e1 = submodule_from_generators({ModuleVector::basis(shape, 2, 0)});
    Submodule span_e2 = submodule_from_generators({ModuleVector::basis(shape, 2, 1)});
    CHECK(is_invariant(T, span_e1, kTol));
    CHECK_FALSE(is_invariant(T, span_e2, kTol));
    CHECK_FALSE(is_reducing(T, span_e1, kTol));
}

TEST_CASE("diagonal operator: every coordinate span is reducing") {
    Operator T = scalar_operator(mat2(2, 0, 0, 3));
    Submodule W = submodule_from_generators({ModuleVector::basis(AlgebraShape{1}, 2, 0)});
    CHECK(is_reducing(T, W, kTol));
    CHECK(is_invariant(T, W, kTol));
    CHECK(is_invariant(T, complement(W), kTol));
}

TEST_CASE("constructed invariant and reducing pairs verify") {
    RandomGen rng(44);
    for (int i = 0; i < 25; ++i) {
        AlgebraShape shape = (i % 2 == 0) ? AlgebraShape{2} : AlgebraShape{1, 2};
        auto [T, W] = rng.invariant_pair(shape, 2);
        CHECK(is_invariant(T, W, kTol));
        auto [S, V] = rng.reducing_pair(shape, 2);
        CHECK(is_reducing(S, V, kTol));
        CHECK(is_invariant(S, V, kTol));
        CHECK(is_invariant(adjoint(S), V, kTol));
    }
}

TEST_CASE("invariance of W matches invariance of the complement under the adjoint") {
    RandomGen rng(45);
    for (int i = 0; i < 25; ++i) {
        auto [T, W] = rng.invariant_pair(AlgebraShape{1, 2}, 2);
        CHECK(is_invariant(adjoint(T), complement(W), kTol));
    }
}

TEST_CASE("block decomposition sums back to the operator") {
    RandomGen rng(46);
    AlgebraShape shape{2, 3};
    Operator T = rng.op(shape, 2);
    Submodule W = rng.projection(shape, 2);
    auto [A, B, C, D] = block_decompose(T, W);
    CHECK(operator_norm(A + B + C + D - T) <= kTol.scale(operator_norm(T)));
    Operator R = assemble_from_blocks(A, B, C, D, W, kTol);
    CHECK(operator_norm(R - T) <= kTol.scale(operator_norm(T)));
}

TEST_CASE("lower-left corner vanishes exactly when W is invariant") {
    RandomGen rng(47);
    for (int i = 0; i < 25; ++i) {
        auto [T, W] = rng.invariant_pair(AlgebraShape{1, 2}, 2);
        auto [A, B, C, D] = block_decompose(T, W);
        CHECK(operator_norm(C) <= kTol.scale(operator_norm(T)));
        Operator T2 = rng.op(AlgebraShape{1, 2}, 2);
        auto [A2, B2, C2, D2] = block_decompose(T2, W);
        CHECK(is_invariant(T2, W, kTol) == (operator_norm(C2) <= kTol.scale(operator_norm(T2))));
    }
}

TEST_CASE("compressions commute with adjoints on the diagonal corner") {
    RandomGen rng(48);
    AlgebraShape shape{1, 2};
    Operator T = rng.op(shape, 2);
    Submodule W = rng.projection(shape, 2);
    const Operator& P = W.projection();
    Operator lhs = adjoint(compose(compose(P, T), P));
    Operator rhs = compose(compose(P, adjoint(T)), P);
    CHECK(operator_norm(lhs - rhs) <= kTol.scale(operator_norm(T)));
}

TEST_CASE("off-diagonal corners of a self-adjoint operator have equal norm") {
    RandomGen rng(49);
    AlgebraShape shape{2};
    Operator X = rng.op(shape, 2);
    Operator S = X + adjoint(X);
    Submodule W = rng.projection(shape, 2);
    auto [A, B, C, D] = block_decompose(S, W);
    CHECK(operator_norm(B) == doctest::Approx(operator_norm(C)).epsilon(1e-10));
}

TEST_CASE("assembling from blocks with wrong corner support throws") {
    AlgebraShape shape{1};
    Submodule W = submodule_from_generators({ModuleVector::basis(shape, 2, 0)});
    Operator I = Operator::identity(shape, 2);
    Operator Z = Operator::zero(shape, 2);
    // The identity is not supported on the off-diagonal corner.
    CHECK_THROWS_AS((void)assemble_from_blocks(Z, I, Z, Z, W, kTol), CornerSupportViolation);
}

TEST_CASE("validate rejects a non-projection") {
    Submodule bad(scalar_operator(mat2(1, 1, 0, 1)));
    CHECK_THROWS_AS(bad.validate(kTol), ValidationError);
}

TEST_CASE("full and zero submodules are trivial") {
    CHECK_FALSE(Submodule::full(AlgebraShape{1, 2}, 2).nontrivial(kTol));
    CHECK_FALSE(Submodule::zero(AlgebraShape{1, 2}, 2).nontrivial(kTol));
}
