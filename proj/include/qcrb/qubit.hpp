#pragma once

#include <array>

#include "qcrb/linalg.hpp"

namespace qcrb {

// States with r > 1 - eps are rejected.
inline constexpr double kBoundaryEps = 1e-6;

struct QubitPoint {
    Eigen::Vector3d theta = Eigen::Vector3d::Zero();

    static QubitPoint on_axis(double r) { return {Eigen::Vector3d(0.0, 0.0, r)}; }
    double r() const { return theta.norm(); }
};

// Spin-1/2 matrices (Pauli / 2).
std::array<CMatrix, 3> spin_half();

// Rotation taking z-hat to theta / |theta|; identity for theta = 0.
Eigen::Matrix3d bloch_rotation(const Eigen::Vector3d& theta);
// SU(2) lift of bloch_rotation: U (v.sigma) U^dagger = (R v).sigma.
CMatrix su2_lift(const Eigen::Vector3d& theta);

HermitianMatrix bloch_state(const QubitPoint& p);
std::array<HermitianMatrix, 3> sld_set(const QubitPoint& p);

struct FisherPair {
    SymmetricMatrix J;
    HermitianMatrix Jtilde_inv;
    RMatrix D;
};

// Closed forms at (0, 0, r).
FisherPair fisher_pair(double r);
// From SLD traces at an arbitrary point.
FisherPair fisher_pair(const QubitPoint& p);

struct SubmodelTangent {
    double phi;
    double r;
    HermitianMatrix d1;
    HermitianMatrix d2;
};

SubmodelTangent submodel_tangent(double phi, double r);

void require_interior(double r);

}  // namespace qcrb
