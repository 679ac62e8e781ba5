#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cstarinv/equations.hpp"
#include "cstarinv/submodule.hpp"

namespace cstarinv {

struct SpectrumReport {
    struct Point {
        Complex value;
        int multiplicity = 1;
    };
    /// Union over blocks of the complex-matrix spectra, clustered across
    /// blocks with an absolute tolerance of 1e-8.
    std::vector<Point> eigenvalues;
    bool contains_zero = false;
};

enum class CertificateKind { ExcludedByHermitianBound, WitnessFound, Inconclusive };

struct NumRangeCertificate {
    CertificateKind kind = CertificateKind::Inconclusive;
    /// Min eigenvalue of the Hermitian part over blocks.
    double bound = 0.0;
    /// Unit vector x with <Tx,x> approximately zero, when one was found.
    std::optional<ModuleVector> witness;
    double witness_objective = 0.0;
};

struct MpReducingReport {
    double commutator_residual = 0.0;  // ||T^dagger P - P T^dagger||
    double threshold = 0.0;
    bool passes = false;
    bool invertible = false;
    double inverse_residual = 0.0;  // ||T^dagger T - I|| when invertible
};

enum class HyperinvariantKind { Eigenspace, Kernel };

struct HyperinvariantResult {
    Submodule submodule;
    HyperinvariantKind kind = HyperinvariantKind::Eigenspace;
    /// The eigenvalue used, when kind is Eigenspace.
    Complex eigenvalue;
};

/// Per-block complex eigenvalues merged with multiplicity; contains_zero iff
/// some block is singular.
SpectrumReport spectrum(const Operator& K);

/// Projection onto Ker(lambda I - K), computed as I - L^dagger L.
/// Throws NotSpectral when lambda is not in the spectrum within tolerance.
Submodule eigen_submodule(const Operator& K, Complex lambda, const ToleranceConfig& tol = {});

/// Sufficient certificate that 0 is not in the C*-numerical range: the
/// Hermitian part bounded below by a positive multiple of the identity.
/// Falls back to a randomized witness search; the exact decision problem is
/// not decided in general.
NumRangeCertificate zero_exclusion_certificate(const Operator& T, const ToleranceConfig& tol = {});

/// Randomized multi-start descent minimizing ||<Tx,x>|| over unit vectors.
/// Deterministic for a fixed seed; empty when no witness reaches atol * 10.
std::optional<ModuleVector> zero_witness_search(const Operator& T, int budget,
                                               std::uint64_t seed,
                                               const ToleranceConfig& tol = {});

/// Checks that a reducing submodule with a numerical-range certificate stays
/// reducing under the Moore-Penrose inverse.
MpReducingReport mp_reducing_verify(const Operator& T, const Submodule& W,
                                    const ToleranceConfig& tol = {});

/// Basis of the commutant {S : KS = SK} in M_k(A), orthonormal under the
/// Hilbert-Schmidt pairing; computed per block from the Sylvester nullspace.
std::vector<Operator> commutant_basis(const Operator& K, const ToleranceConfig& tol = {});

/// Proper nonzero hyperinvariant submodule of K: the eigenspace of a nonzero
/// spectral point when one exists, else Ker(K).
HyperinvariantResult find_hyperinvariant(const Operator& K, const ToleranceConfig& tol = {});

/// Conjugated projection U^* P U.  Throws NotUnitary when U is not unitary
/// within tolerance.
Submodule transport_by_unitary(const Submodule& W, const Operator& U,
                               const ToleranceConfig& tol = {});

}  // namespace cstarinv
