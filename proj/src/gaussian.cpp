#include "qcrb/gaussian.hpp"

#include <cmath>

#include "qcrb/errors.hpp"

namespace qcrb {

namespace {

void require_nbar(double nbar) {
    if (!std::isfinite(nbar) || nbar < 0.0) throw ValidationError("mean photon number must be finite and non-negative");
}

void require_2x2(const WeightMatrix& G, const char* what) {
    if (G.dim() != 2) throw ValidationError(std::string(what) + ": weight must be 2x2");
}

}  // namespace

double gaussian_rld_bound(double nbar, const WeightMatrix& G) {
    require_nbar(nbar);
    require_2x2(G, "gaussian_rld_bound");
    return (nbar + 0.5) * G.matrix().trace() + std::sqrt(std::max(0.0, G.matrix().determinant()));
}

HermitianMatrix gaussian_jtilde_inv(double nbar) {
    require_nbar(nbar);
    CMatrix z(2, 2);
    z << nbar + 0.5, Complex(0.0, 0.5), Complex(0.0, -0.5), nbar + 0.5;
    return HermitianMatrix(z);
}

SqueezedMeasurement squeezed_params(const WeightMatrix& G, double nbar) {
    require_nbar(nbar);
    require_2x2(G, "squeezed_params");
    if (!G.strictly_pd()) throw SingularityError("squeezed_params: weight matrix is singular");
    const RMatrix& g = G.matrix();
    const RMatrix ghat = std::sqrt(g.determinant()) * g.inverse();
    const RMatrix cov = (nbar + 0.5) * RMatrix::Identity(2, 2) + 0.5 * ghat;
    return {SymmetricMatrix::symmetric_part(ghat), SymmetricMatrix::symmetric_part(cov)};
}

SimReport simulate_gaussian(double nbar, const Eigen::Vector2d& theta, const WeightMatrix& G, std::uint64_t copies,
                            std::uint64_t trials, std::uint64_t seed) {
    if (copies == 0) throw ValidationError("copies must be at least 1");
    if (trials == 0) throw ValidationError("trials must be at least 1");
    if (!theta.allFinite()) throw ValidationError("shift parameter must be finite");
    const auto sm = squeezed_params(G, nbar);
    const Eigen::Matrix2d L = Eigen::LLT<Eigen::Matrix2d>(Eigen::Matrix2d(sm.outcome_cov.matrix())).matrixL();
    const Eigen::Matrix2d g = G.matrix();

    auto trial = [&](StreamRng& rng, std::uint64_t) {
        Eigen::Vector2d acc = Eigen::Vector2d::Zero();
        for (std::uint64_t i = 0; i < copies; ++i) {
            const auto [z1, z2] = rng.normal_pair();
            acc += L * Eigen::Vector2d(z1, z2);
        }
        const Eigen::Vector2d err = (theta + acc / double(copies)) - theta;
        return err.dot(g * err);
    };
    const auto m = run_trials(trials, seed, trial);

    SimReport rep;
    rep.risk_estimate = m.mean;
    rep.std_error = m.std_error;
    rep.trials = trials;
    rep.seed = seed;
    rep.n = copies;
    rep.risk_kind = RiskKind::weighted;
    rep.prediction = gaussian_rld_bound(nbar, G) / double(copies);
    rep.prediction_source = "gaussian_rld_bound";
    rep.exact_mean = rep.prediction;
    return rep;
}

CMatrix annihilation(int dim) {
    if (dim < 1) throw ValidationError("Fock dimension must be positive");
    CMatrix a = CMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

CMatrix quadrature_q(int dim) {
    const CMatrix a = annihilation(dim);
    return (a + a.adjoint()) / std::sqrt(2.0);
}

CMatrix quadrature_p(int dim) {
    const CMatrix a = annihilation(dim);
    return (a - a.adjoint()) / Complex(0.0, std::sqrt(2.0));
}

GaussianTruncation gaussian_truncated(double nbar, int cutoff) {
    require_nbar(nbar);
    if (cutoff < 2) throw ValidationError("Fock cutoff must be at least 2");
    const double ratio = nbar / (nbar + 1.0);
    RVector w(cutoff);
    for (int n = 0; n < cutoff; ++n) w[n] = std::pow(ratio, n) / (nbar + 1.0);
    w /= w.sum();
    const CMatrix rho = w.cast<Complex>().asDiagonal();
    const double tail = std::pow(ratio, cutoff);
    const double gap = nbar == 0.0 ? 0.0
                                   : cutoff * (tail + 0.5 * (1.0 - ratio) * std::pow(ratio, cutoff - 1)) / (1.0 - tail);
    return {HermitianMatrix(rho), HermitianMatrix::hermitian_part(quadrature_q(cutoff)),
            HermitianMatrix::hermitian_part(quadrature_p(cutoff)), tail, gap};
}

}  // namespace qcrb
