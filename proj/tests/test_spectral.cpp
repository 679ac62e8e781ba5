#include <doctest.h>

#include <algorithm>

#include "cstarinv/spectral.hpp"
#include "test_helpers.hpp"

using namespace cstarinv;
using namespace cstarinv::testing;

namespace {
const ToleranceConfig kTol;
}

TEST_CASE("spectrum of a diagonal operator") {
    SpectrumReport rep = spectrum(scalar_operator(mat2(2, 0, 0, 3)));
    REQUIRE(rep.eigenvalues.size() == 2);
    CHECK(std::abs(rep.eigenvalues[0].value - Complex(2.0)) < 1e-12);
    CHECK(std::abs(rep.eigenvalues[1].value - Complex(3.0)) < 1e-12);
    CHECK_FALSE(rep.contains_zero);
}

TEST_CASE("spectrum of a nilpotent operator is zero with full multiplicity") {
    SpectrumReport rep = spectrum(scalar_operator(mat2(0, 1, 0, 0)));
    REQUIRE(rep.eigenvalues.size() == 1);
    CHECK(std::abs(rep.eigenvalues[0].value) < 1e-12);
    CHECK(rep.eigenvalues[0].multiplicity == 2);
    CHECK(rep.contains_zero);
}

TEST_CASE("spectrum merges equal values across algebra blocks") {
    AlgebraShape shape{1, 1};
    CMatrix a(1, 1), b(1, 1);
    a << Complex(5.0);
    b << Complex(5.0);
    Operator T(shape, 1, {a, b});
    SpectrumReport rep = spectrum(T);
    REQUIRE(rep.eigenvalues.size() == 1);
    CHECK(rep.eigenvalues[0].multiplicity == 2);
}

TEST_CASE("spectrum is invariant under unitary conjugation") {
    RandomGen rng(61);
    AlgebraShape shape{1, 2};
    Operator K = rng.op(shape, 2);
    Operator U = rng.unitary(shape, 2);
    SpectrumReport a = spectrum(K);
    SpectrumReport b = spectrum(compose(compose(adjoint(U), K), U));
    REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
        CHECK(std::abs(a.eigenvalues[i].value - b.eigenvalues[i].value) < 1e-6);
}

TEST_CASE("eigen-submodule of a diagonal operator") {
    Operator K = scalar_operator(mat2(2, 0, 0, 3));
    Submodule W = eigen_submodule(K, Complex(3.0), kTol);
    CHECK((W.projection().block(0) - mat2(0, 0, 0, 1)).norm() <= 1e-10);
    CHECK(is_invariant(K, W, kTol));
    CHECK_THROWS_AS((void)eigen_submodule(K, Complex(7.0), kTol), NotSpectral);
}

TEST_CASE("eigen-submodule is fixed pointwise by (K - lambda I) annihilation") {
    RandomGen rng(62);
    AlgebraShape shape{2};
    Operator D = Operator::zero(shape, 2);
    D.block(0).diagonal() << Complex(1.0), Complex(1.0), Complex(4.0), Complex(4.0);
    Operator U = rng.unitary(shape, 2);
    Operator K = compose(compose(adjoint(U), D), U);
    Submodule W = eigen_submodule(K, Complex(1.0), kTol);
    Operator L = K - Operator::identity(shape, 2);
    CHECK(operator_norm(compose(L, W.projection())) <= 1e-8);
    CHECK(is_invariant(K, W, kTol));
    CHECK(W.nontrivial(kTol));
}

TEST_CASE("zero exclusion by the Hermitian lower bound") {
    NumRangeCertificate cert = zero_exclusion_certificate(
        Operator::identity(AlgebraShape{1, 2}, 2), kTol);
    CHECK(cert.kind == CertificateKind::ExcludedByHermitianBound);
    CHECK(cert.bound == doctest::Approx(1.0));
}

TEST_CASE("zero witness for an indefinite Hermitian operator") {
    NumRangeCertificate cert = zero_exclusion_certificate(scalar_operator(mat2(1, 0, 0, -1)), kTol);
    REQUIRE(cert.kind == CertificateKind::WitnessFound);
    REQUIRE(cert.witness.has_value());
    const ModuleVector& x = *cert.witness;
    CHECK(vector_norm(x) == doctest::Approx(1.0));
    CHECK(norm(inner_product(apply(scalar_operator(mat2(1, 0, 0, -1)), x), x)) <= kTol.atol * 10);
}

TEST_CASE("zero exclusion is inconclusive for i times the identity") {
    CMatrix m(1, 1);
    m << Complex(0.0, 1.0);
    NumRangeCertificate cert = zero_exclusion_certificate(scalar_operator(m), kTol);
    CHECK(cert.kind == CertificateKind::Inconclusive);
}

TEST_CASE("witness search is deterministic for a fixed seed") {
    Operator T = scalar_operator(mat2(1, 0, 0, -1));
    auto a = zero_witness_search(T, 400, 7, kTol);
    auto b = zero_witness_search(T, 400, 7, kTol);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(vector_norm(*a - *b) == doctest::Approx(0.0));
}

TEST_CASE("Moore-Penrose inverse keeps a reducing submodule reducing") {
    RandomGen rng(63);
    AlgebraShape shape{1, 2};
    auto [T0, W] = rng.reducing_pair(shape, 2);
    // Shift the Hermitian part so zero is excluded from the numerical range.
    Operator H = T0 + adjoint(T0);
    Operator T = H + Operator::identity(shape, 2) * Complex(operator_norm(H) + 1.0, 0.0);
    MpReducingReport rep = mp_reducing_verify(T, W, kTol);
    CHECK(rep.passes);
    CHECK(rep.invertible);
    CHECK(rep.inverse_residual <= rep.threshold);
}

TEST_CASE("mp_reducing_verify refuses a non-reducing submodule") {
    Operator T = scalar_operator(mat2(2, 1, 0, 3));
    Submodule W = submodule_from_generators({ModuleVector::basis(AlgebraShape{1}, 2, 0)});
    CHECK_THROWS_AS((void)mp_reducing_verify(T, W, kTol), PreconditionFailed);
}

TEST_CASE("commutant dimension matches the eigenvalue multiplicities") {
    // For a diagonalizable matrix with multiplicities (2, 1) the commutant
    // has dimension 2^2 + 1^2 = 5.
    RandomGen rng(64);
    AlgebraShape shape{1};
    Operator D = Operator::zero(shape, 3);
    D.block(0).diagonal() << Complex(1.0), Complex(1.0), Complex(-2.0);
    Operator U = rng.unitary(shape, 3);
    Operator K = compose(compose(adjoint(U), D), U);
    std::vector<Operator> basis = commutant_basis(K, kTol);
    CHECK(basis.size() == 5);
    for (const Operator& S : basis)
        CHECK(operator_norm(compose(K, S) - compose(S, K)) <= 1e-8);
}

TEST_CASE("commutant basis is Hilbert-Schmidt orthonormal") {
    RandomGen rng(65);
    Operator K = rng.op(AlgebraShape{1, 2}, 2);
    std::vector<Operator> basis = commutant_basis(K, kTol);
    CHECK(!basis.empty());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Complex hs = 0.0;
            for (int b = 0; b < basis[i].num_blocks(); ++b)
                hs += (basis[i].block(b).adjoint() * basis[j].block(b)).trace();
            CHECK(std::abs(hs - (i == j ? Complex(1.0) : Complex(0.0))) <= 1e-8);
        }
}

TEST_CASE("hyperinvariant submodule of a diagonal operator is an eigenspace") {
    Operator K = scalar_operator(mat2(2, 0, 0, 3));
    HyperinvariantResult res = find_hyperinvariant(K, kTol);
    CHECK(res.kind == HyperinvariantKind::Eigenspace);
    CHECK(std::abs(res.eigenvalue - Complex(3.0)) < 1e-8);
    CHECK(res.submodule.nontrivial(kTol));
    CHECK(is_invariant(K, res.submodule, kTol));
}

TEST_CASE("hyperinvariant submodule of a nilpotent operator is its kernel") {
    RandomGen rng(66);
    Operator K = rng.nilpotent(AlgebraShape{1, 2}, 2);
    HyperinvariantResult res = find_hyperinvariant(K, kTol);
    CHECK(res.kind == HyperinvariantKind::Kernel);
    CHECK(res.submodule.nontrivial(kTol));
    CHECK(operator_norm(compose(K, res.submodule.projection())) <=
          kTol.scale(operator_norm(K)));
}

TEST_CASE("hyperinvariant submodule is invariant under the whole commutant") {
    RandomGen rng(67);
    for (int c = 0; c < 10; ++c) {
        AlgebraShape shape = (c % 2 == 0) ? AlgebraShape{2} : AlgebraShape{1, 2};
        Operator K = (c % 3 == 0) ? rng.nilpotent(shape, 2) : rng.op(shape, 2);
        HyperinvariantResult res = find_hyperinvariant(K, kTol);
        for (const Operator& S : commutant_basis(K, kTol))
            CHECK(is_invariant(S, res.submodule, ToleranceConfig{1e-7, 1e-6}));
    }
}

TEST_CASE("degenerate inputs for hyperinvariant search are rejected") {
    AlgebraShape shape{1, 2};
    CHECK_THROWS_AS((void)find_hyperinvariant(Operator::zero(shape, 2), kTol), ZeroOperator);
    Operator twoI = Operator::identity(shape, 2) * Complex(2.0, 0.0);
    CHECK_THROWS_AS((void)find_hyperinvariant(twoI, kTol), ScalarOperator);
}

TEST_CASE("unitary transport of submodules preserves invariance") {
    RandomGen rng(68);
    AlgebraShape shape{1, 2};
    auto [T, W] = rng.invariant_pair(shape, 2);
    Operator U = rng.unitary(shape, 2);
    Submodule V = transport_by_unitary(W, U, kTol);
    V.validate(kTol);
    Operator conjT = compose(compose(adjoint(U), T), U);
    CHECK(is_invariant(conjT, V, kTol));
    CHECK_THROWS_AS((void)transport_by_unitary(W, T + U, kTol), NotUnitary);
}
