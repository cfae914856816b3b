#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcrb/bounds.hpp"
#include "qcrb/sim_report.hpp"

namespace qcrb {

// Distribution of the total spin j over n copies. Entries run from j = n/2 downwards;
// index i corresponds to 2j = n - 2i.
class SpinDistribution {
public:
    SpinDistribution(std::uint64_t n, double r);

    std::uint64_t n() const { return n_; }
    double r() const { return r_; }
    std::size_t size() const { return probs_.size(); }
    int two_j(std::size_t i) const { return static_cast<int>(n_ - 2 * i); }
    double j(std::size_t i) const { return 0.5 * two_j(i); }
    const std::vector<double>& probs() const { return probs_; }
    std::vector<double> support() const;
    double normalization_drift() const { return drift_; }

    // Index of the support point for a uniform u in [0, 1).
    std::size_t sample_index(double u) const;
    std::vector<double> draw(std::uint64_t seed, std::uint64_t count) const;

private:
    std::uint64_t n_;
    double r_;
    std::vector<double> probs_;
    std::vector<double> cumulative_;
    double drift_;
};

SpinDistribution p_nr(std::uint64_t n, double r);

// d/dr log P_{n,r}(j), for 0 < r < 1.
double score_pnr(std::uint64_t n, double r, int two_j);
double fisher_pnr(std::uint64_t n, double r);
double theta3_hat(std::uint64_t n, double r0, int two_j);

// Per-trial risk given j and the polar sample, on the z-axis frame.
double covariant_risk(RiskKind kind, double x, double r, double one_minus_cos);

// Sum over j of the expected risk, using the closed-form angular mean.
double covariant_exact_risk(std::uint64_t n, double r, RiskKind kind);

// Second-order prediction used in reports and its tag.
double covariant_prediction(std::uint64_t n, double r, RiskKind kind);
std::string covariant_prediction_source(double r, RiskKind kind);

struct CovariantOptions {
    bool full_vector = false;
    // Reference axis at theta = 0 (ignored otherwise).
    Eigen::Vector3d origin_axis = Eigen::Vector3d::UnitZ();
};

SimReport simulate_covariant(std::uint64_t n, const Eigen::Vector3d& theta, RiskKind risk, std::uint64_t trials,
                             std::uint64_t seed, const CovariantOptions& opt = {});

SymmetricMatrix predict_general_cov(std::uint64_t n, double r, const WeightMatrix& gtilde);

struct AsymptoticPredictions {
    std::optional<double> radial_mse;
    std::optional<double> radial_exact;
    std::optional<double> jnr_inv_approx;
    std::optional<double> jnr_inv_exact;
    double origin_exact;
    double origin_approx;
};

AsymptoticPredictions asymptotic_predictions(std::uint64_t n, double r);

// Exact sum over P_{n,0} of (2j/n)^2.
double origin_exact_risk(std::uint64_t n);
double origin_cov_fisher(std::uint64_t n);
// n - origin_cov_fisher(n) and its large-n approximation.
double origin_fisher_deficit(std::uint64_t n);
double origin_fisher_deficit_approx(std::uint64_t n);

// Ragged table p(w1, w2): row w1, entries over the w2 values allowed for that row.
using JointTable = std::vector<std::vector<double>>;
using JointFamily = std::function<JointTable(double)>;

struct FisherDecomposition {
    double J;
    double J1;
    std::vector<double> loss_by_omega1;  // J_{w1}
    std::vector<double> p_omega1;
    double loss() const;
};

FisherDecomposition fisher_decomposition(const JointFamily& joint, double theta0, std::optional<double> step = {});

// p_theta(j, m) = P_{n,theta}(j) <j,m| rho_{j,p(theta)} |j,m>.
JointFamily spin_joint_family(std::uint64_t n);

}  // namespace qcrb
