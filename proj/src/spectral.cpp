#include "cstarinv/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <random>

namespace cstarinv {

namespace {

constexpr double kClusterTol = 1e-8;

std::vector<Complex> block_eigenvalues(const CMatrix& m) {
    Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/false);
    std::vector<Complex> out(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

bool block_singular(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0) return true;
    double cutoff = sigma(0) * static_cast<double>(m.rows()) * 1e-12;
    return sigma(sigma.size() - 1) <= cutoff;
}

}  // namespace

SpectrumReport spectrum(const Operator& K) {
    std::vector<Complex> all;
    bool zero = false;
    for (int i = 0; i < K.num_blocks(); ++i) {
        auto evs = block_eigenvalues(K.block(i));
        all.insert(all.end(), evs.begin(), evs.end());
        zero = zero || block_singular(K.block(i));
    }
    // Deterministic order before clustering.
    std::sort(all.begin(), all.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    SpectrumReport report;
    report.contains_zero = zero;
    for (const Complex& ev : all) {
        bool merged = false;
        for (auto& pt : report.eigenvalues) {
            if (std::abs(pt.value - ev) <= kClusterTol) {
                pt.multiplicity += 1;
                merged = true;
                break;
            }
        }
        if (!merged) report.eigenvalues.push_back({ev, 1});
    }
    return report;
}

Submodule eigen_submodule(const Operator& K, Complex lambda, const ToleranceConfig& tol) {
    SpectrumReport spec = spectrum(K);
    double dist = std::numeric_limits<double>::infinity();
    for (const auto& pt : spec.eigenvalues) dist = std::min(dist, std::abs(pt.value - lambda));
    if (dist > tol.scale(operator_norm(K)))
        throw NotSpectral("distance to nearest eigenvalue is " + std::to_string(dist));
    Operator L = Operator::identity(K.shape(), K.rank()) * lambda - K;
    return Submodule(kernel_projection(L));
}

NumRangeCertificate zero_exclusion_certificate(const Operator& T, const ToleranceConfig& tol) {
    NumRangeCertificate cert;
    double bound = std::numeric_limits<double>::infinity();
    for (int i = 0; i < T.num_blocks(); ++i) {
        CMatrix h = (T.block(i) + T.block(i).adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().size() > 0) bound = std::min(bound, es.eigenvalues()(0));
    }
    cert.bound = bound;
    if (bound > tol.scale(operator_norm(T))) {
        cert.kind = CertificateKind::ExcludedByHermitianBound;
        return cert;
    }
    auto witness = zero_witness_search(T, tol.search_budget, tol.seed, tol);
    if (witness) {
        cert.kind = CertificateKind::WitnessFound;
        cert.witness = witness;
        cert.witness_objective = norm(inner_product(apply(T, *witness), *witness));
    } else {
        cert.kind = CertificateKind::Inconclusive;
    }
    return cert;
}

std::optional<ModuleVector> zero_witness_search(const Operator& T, int budget, std::uint64_t seed,
                                                const ToleranceConfig& tol) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const AlgebraShape& shape = T.shape();
    int k = T.rank();
    double target = tol.atol * 10.0;

    auto random_vector = [&]() {
        ModuleVector x = ModuleVector::zero(shape, k);
        for (int i = 0; i < x.num_blocks(); ++i)
            for (Eigen::Index r = 0; r < x.block(i).rows(); ++r)
                for (Eigen::Index c = 0; c < x.block(i).cols(); ++c)
                    x.block(i)(r, c) = Complex(gauss(rng), gauss(rng));
        return x;
    };
    auto normalize = [&](const ModuleVector& x) -> std::optional<ModuleVector> {
        double n = vector_norm(x);
        if (n < 1e-14) return std::nullopt;
        return x * Complex(1.0 / n, 0.0);
    };
    auto objective = [&](const ModuleVector& x) {
        return norm(inner_product(apply(T, x), x));
    };

    const int iters_per_start = 200;
    int starts = std::max(1, budget / iters_per_start);
    std::optional<ModuleVector> best;
    double best_obj = std::numeric_limits<double>::infinity();
    for (int s = 0; s < starts; ++s) {
        auto x0 = normalize(random_vector());
        if (!x0) continue;
        ModuleVector x = *x0;
        double fx = objective(x);
        double step = 0.5;
        for (int it = 0; it < iters_per_start && fx > target; ++it) {
            auto cand = normalize(x + random_vector() * Complex(step, 0.0));
            if (!cand) continue;
            double fc = objective(*cand);
            if (fc < fx) {
                x = *cand;
                fx = fc;
                step = std::min(step * 2.0, 0.5);
            } else {
                step *= 0.7;
                if (step < 1e-13) break;
            }
        }
        if (fx < best_obj) {
            best_obj = fx;
            best = x;
        }
        if (best_obj <= target) break;
    }
    if (best && best_obj <= target) return best;
    return std::nullopt;
}

MpReducingReport mp_reducing_verify(const Operator& T, const Submodule& W,
                                    const ToleranceConfig& tol) {
    if (!is_reducing(T, W, tol)) throw PreconditionFailed("W is not a reducing submodule for T");
    NumRangeCertificate cert = zero_exclusion_certificate(T, tol);
    if (cert.kind != CertificateKind::ExcludedByHermitianBound)
        throw PreconditionFailed("numerical-range zero exclusion certificate unavailable");

    MpReducingReport report;
    Operator pinv = moore_penrose(T);
    const Operator& P = W.projection();
    report.commutator_residual = operator_norm(compose(pinv, P) - compose(P, pinv));
    report.threshold = tol.scale(operator_norm(pinv));
    report.passes = report.commutator_residual <= report.threshold;

    bool invertible = true;
    for (int i = 0; i < T.num_blocks(); ++i) invertible = invertible && !block_singular(T.block(i));
    report.invertible = invertible;
    if (invertible) {
        Operator I = Operator::identity(T.shape(), T.rank());
        report.inverse_residual = operator_norm(compose(pinv, T) - I);
    }
    return report;
}

std::vector<Operator> commutant_basis(const Operator& K, const ToleranceConfig& tol) {
    (void)tol;
    std::vector<Operator> basis;
    for (int i = 0; i < K.num_blocks(); ++i) {
        const CMatrix& k = K.block(i);
        Eigen::Index d = k.rows();
        // Sylvester map X -> KX - XK, vectorized column-major:
        // (I kron K - K^T kron I) vec(X).
        CMatrix sylvester = CMatrix::Zero(d * d, d * d);
        for (Eigen::Index p = 0; p < d; ++p) {
            sylvester.block(p * d, p * d, d, d) += k;  // I kron K
            for (Eigen::Index q = 0; q < d; ++q)
                sylvester.block(p * d, q * d, d, d) -=
                    k(q, p) * CMatrix::Identity(d, d);  // K^T kron I
        }
        Eigen::JacobiSVD<CMatrix> svd(sylvester, Eigen::ComputeFullV);
        const auto& sigma = svd.singularValues();
        double cutoff = sigma.size() > 0 ? sigma(0) * static_cast<double>(d * d) * 1e-12 : 0.0;
        for (Eigen::Index j = 0; j < sigma.size(); ++j) {
            if (sigma(j) > cutoff) continue;
            // Nullspace column, reshaped; HS-orthonormal by construction.
            CMatrix X(d, d);
            for (Eigen::Index c = 0; c < d; ++c) X.col(c) = svd.matrixV().col(j).segment(c * d, d);
            Operator S = Operator::zero(K.shape(), K.rank());
            S.block(i) = X;
            basis.push_back(std::move(S));
        }
    }
    return basis;
}

HyperinvariantResult find_hyperinvariant(const Operator& K, const ToleranceConfig& tol) {
    double nk = operator_norm(K);
    if (nk <= tol.atol * 10.0) throw ZeroOperator();
    // Scalar test against the mean diagonal value.
    Complex trace = 0.0;
    double total_dim = 0.0;
    for (int i = 0; i < K.num_blocks(); ++i) {
        trace += K.block(i).trace();
        total_dim += static_cast<double>(K.block(i).rows());
    }
    Complex mean = trace / total_dim;
    if (operator_norm(K - Operator::identity(K.shape(), K.rank()) * mean) <= tol.scale(nk))
        throw ScalarOperator();

    // A quasinilpotent operator is nilpotent at finite dimension; detect it by
    // the vanishing of K^d per block, which is robust where eigenvalues of
    // planted nilpotents are not.
    bool nilpotent = true;
    for (int i = 0; i < K.num_blocks() && nilpotent; ++i) {
        Eigen::Index d = K.block(i).rows();
        CMatrix power = K.block(i) / nk;  // normalized to keep powers at scale
        for (Eigen::Index p = 1; p < d; ++p) power = power * (K.block(i) / nk);
        nilpotent = power.norm() <= tol.scale(1.0) * std::sqrt(static_cast<double>(d));
    }

    HyperinvariantResult result;
    if (!nilpotent) {
        SpectrumReport spec = spectrum(K);
        const SpectrumReport::Point* best = nullptr;
        for (const auto& pt : spec.eigenvalues)
            if (!best || std::abs(pt.value) > std::abs(best->value)) best = &pt;
        if (best && std::abs(best->value) > tol.scale(nk)) {
            result.kind = HyperinvariantKind::Eigenspace;
            result.eigenvalue = best->value;
            result.submodule = eigen_submodule(K, best->value, tol);
            return result;
        }
    }
    result.kind = HyperinvariantKind::Kernel;
    result.eigenvalue = 0.0;
    result.submodule = Submodule(kernel_projection(K));
    return result;
}

Submodule transport_by_unitary(const Submodule& W, const Operator& U, const ToleranceConfig& tol) {
    Operator I = Operator::identity(U.shape(), U.rank());
    double left = operator_norm(compose(adjoint(U), U) - I);
    double right = operator_norm(compose(U, adjoint(U)) - I);
    double threshold = tol.scale(1.0);
    if (left > threshold || right > threshold)
        throw NotUnitary("residuals " + std::to_string(left) + ", " + std::to_string(right));
    return Submodule(compose(adjoint(U), compose(W.projection(), U)));
}

}  // namespace cstarinv
