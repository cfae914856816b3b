#pragma once

#include <cstdint>

#include "qcrb/bounds.hpp"
#include "qcrb/sim_report.hpp"

namespace qcrb {

struct GaussianFamily {
    double nbar = 0.0;
    Eigen::Vector2d theta = Eigen::Vector2d::Zero();
};

struct SqueezedMeasurement {
    SymmetricMatrix ghat;
    SymmetricMatrix outcome_cov;
};

double gaussian_rld_bound(double nbar, const WeightMatrix& G);
// (N+1/2) I + (i/2) antisymmetric unit.
HermitianMatrix gaussian_jtilde_inv(double nbar);
SqueezedMeasurement squeezed_params(const WeightMatrix& G, double nbar);

SimReport simulate_gaussian(double nbar, const Eigen::Vector2d& theta, const WeightMatrix& G, std::uint64_t copies,
                            std::uint64_t trials, std::uint64_t seed);

// Ladder operators on the first dim Fock levels.
CMatrix annihilation(int dim);
CMatrix quadrature_q(int dim);
CMatrix quadrature_p(int dim);

struct GaussianTruncation {
    HermitianMatrix rho;
    HermitianMatrix Q;
    HermitianMatrix P;
    double tail_bound;  // (N/(N+1))^cutoff
    double moment_gap;  // |Tr rho Q^2 - (N + 1/2)| from the truncation, in closed form
};

inline constexpr int kDefaultFockCutoff = 60;

GaussianTruncation gaussian_truncated(double nbar, int cutoff = kDefaultFockCutoff);

}  // namespace qcrb
