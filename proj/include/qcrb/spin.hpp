#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcrb/bounds.hpp"
#include "qcrb/rng.hpp"

namespace qcrb {

// Basis index n = j - m throughout, so n = 0 is the highest weight.
struct SpinJSystem {
    int two_j = 1;
    double p = 0.0;

    SpinJSystem(int two_j, double p);
    double j() const { return 0.5 * two_j; }
    int dim() const { return two_j + 1; }
};

struct SpinOps {
    CMatrix J1, J2, J3, Jplus, Jminus;
};

SpinOps spin_ops(int two_j);

// r -> (1 - r)/(1 + r)
double p_of_r(double r);

CVector coherent_vec(int two_j, Complex z);
RVector rho_jp_weights(int two_j, double p);
HermitianMatrix rho_jp(int two_j, double p);

double angular_density(int two_j, double p, double phi);
// P(cos phi <= x) under the angular density.
double angular_cdf_cos(int two_j, double p, double x);
double f_closed(int two_j, double p);

struct AngularSample {
    double phi;
    double psi;
    double weight;
    double one_minus_cos;
};

AngularSample sample_angle(int two_j, double p, StreamRng& rng);
std::vector<AngularSample> sample_angles(int two_j, double p, std::uint64_t count, std::uint64_t seed);

struct Residual {
    double value;
    std::optional<double> bound;
};

struct LimitReport {
    int two_j;
    double p;
    Complex probe;
    Residual trace_distance;  // rho_{j,p} vs the thermal state
    Residual coherent;        // coherent projector distance at the probe
    Residual ladder_plus;
    Residual ladder_minus;
    Residual quad_q;
    Residual quad_p;
    Residual cross_qq;
    Residual cross_qp;
    Residual cross_pq;
    Residual cross_pp;
    Residual moment_q2;
    Residual moment_p2;
    Residual moment_qp;
    std::optional<double> weighted_moment_gap;  // only with a weight
};

inline constexpr Complex kDefaultProbe{0.5, 0.25};

LimitReport limit_report(int two_j, double p, const std::optional<WeightMatrix>& gtilde = std::nullopt,
                         Complex probe = kDefaultProbe);

struct MomentMatrices {
    Eigen::Matrix2d B;
    Eigen::Matrix2d V;
};

MomentMatrices moment_matrices(int two_j, double r, const WeightMatrix& gtilde);

// sum_n w_n Re<X e_n, Y e_n> over the columns of the weight vector.
double expect_jordan(const RVector& w, const CMatrix& X, const CMatrix& Y);

}  // namespace qcrb
