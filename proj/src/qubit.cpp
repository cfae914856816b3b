#include "qcrb/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcrb/errors.hpp"

namespace qcrb {

namespace {

const Complex I1{0.0, 1.0};

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

RMatrix commutator_matrix(const HermitianMatrix& rho, const std::array<HermitianMatrix, 3>& L) {
    RMatrix D(3, 3);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
            D(k, j) = (I1 * (rho.matrix() * commutator(L[k].matrix(), L[j].matrix())).trace()).real();
    return D;
}

}  // namespace

void require_interior(double r) {
    if (!std::isfinite(r) || r < 0.0) throw ValidationError("radial coordinate must be finite and non-negative");
    if (r > 1.0 - kBoundaryEps) {
        std::ostringstream os;
        os << "Bloch radius " << r << " exceeds 1 - " << kBoundaryEps;
        throw BoundaryError(os.str());
    }
}

std::array<CMatrix, 3> spin_half() {
    CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1 << 0.0, 0.5, 0.5, 0.0;
    s2 << 0.0, -0.5 * I1, 0.5 * I1, 0.0;
    s3 << 0.5, 0.0, 0.0, -0.5;
    return {s1, s2, s3};
}

Eigen::Matrix3d bloch_rotation(const Eigen::Vector3d& theta) {
    const double r = theta.norm();
    if (r == 0.0) return Eigen::Matrix3d::Identity();
    const double alpha = std::atan2(theta.y(), theta.x());
    const double beta = std::acos(std::clamp(theta.z() / r, -1.0, 1.0));
    return (Eigen::AngleAxisd(alpha, Eigen::Vector3d::UnitZ()) * Eigen::AngleAxisd(beta, Eigen::Vector3d::UnitY()))
        .toRotationMatrix();
}

CMatrix su2_lift(const Eigen::Vector3d& theta) {
    const double r = theta.norm();
    if (r == 0.0) return CMatrix::Identity(2, 2);
    const double alpha = std::atan2(theta.y(), theta.x());
    const double beta = std::acos(std::clamp(theta.z() / r, -1.0, 1.0));
    CMatrix uz(2, 2), uy(2, 2);
    uz << std::exp(-0.5 * I1 * alpha), 0.0, 0.0, std::exp(0.5 * I1 * alpha);
    uy << std::cos(beta / 2), -std::sin(beta / 2), std::sin(beta / 2), std::cos(beta / 2);
    return uz * uy;
}

HermitianMatrix bloch_state(const QubitPoint& p) {
    if (!p.theta.allFinite()) throw ValidationError("Bloch vector must be finite");
    require_interior(p.r());
    auto s = spin_half();
    CMatrix rho = 0.5 * CMatrix::Identity(2, 2);
    for (int k = 0; k < 3; ++k) rho += p.theta[k] * s[k];
    return HermitianMatrix::hermitian_part(rho);
}

std::array<HermitianMatrix, 3> sld_set(const QubitPoint& p) {
    if (!p.theta.allFinite()) throw ValidationError("Bloch vector must be finite");
    const double r = p.r();
    require_interior(r);
    auto s = spin_half();
    CMatrix l3(2, 2);
    l3 << 1.0 / (1.0 + r), 0.0, 0.0, -1.0 / (1.0 - r);
    std::array<CMatrix, 3> axis{2.0 * s[0], 2.0 * s[1], l3};
    if (r == 0.0) return {HermitianMatrix::hermitian_part(axis[0]), HermitianMatrix::hermitian_part(axis[1]),
                          HermitianMatrix::hermitian_part(axis[2])};

    const Eigen::Matrix3d R = bloch_rotation(p.theta);
    const CMatrix U = su2_lift(p.theta);
    std::array<HermitianMatrix, 3> out;
    for (int k = 0; k < 3; ++k) {
        CMatrix acc = CMatrix::Zero(2, 2);
        for (int l = 0; l < 3; ++l) acc += R(k, l) * axis[l];
        out[k] = HermitianMatrix::hermitian_part(U * acc * U.adjoint());
    }
    return out;
}

FisherPair fisher_pair(double r) {
    require_interior(r);
    RMatrix J = RMatrix::Identity(3, 3);
    J(2, 2) = 1.0 / (1.0 - r * r);
    CMatrix Jti = CMatrix::Identity(3, 3);
    Jti(0, 1) = -I1 * r;
    Jti(1, 0) = I1 * r;
    Jti(2, 2) = 1.0 - r * r;
    const auto p = QubitPoint::on_axis(r);
    return {SymmetricMatrix(J), HermitianMatrix(Jti), commutator_matrix(bloch_state(p), sld_set(p))};
}

FisherPair fisher_pair(const QubitPoint& p) {
    const auto rho = bloch_state(p);
    const auto L = sld_set(p);
    RMatrix J(3, 3);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) J(k, j) = (rho.matrix() * jordan(L[k].matrix(), L[j].matrix())).trace().real();
    const RMatrix D = commutator_matrix(rho, L);
    const RMatrix Jinv = J.inverse();
    const CMatrix Jti = Jinv.cast<Complex>() + 0.5 * I1 * (Jinv * D * Jinv).cast<Complex>();
    return {SymmetricMatrix::symmetric_part(J), HermitianMatrix::hermitian_part(Jti), D};
}

SubmodelTangent submodel_tangent(double phi, double r) {
    if (!std::isfinite(phi) || phi < 0.0 || phi > std::numbers::pi / 2)
        throw ValidationError("submodel angle must lie in [0, pi/2]");
    require_interior(r);
    auto s = spin_half();
    CMatrix d2 = std::cos(phi) * s[1] + std::sin(phi) * std::sqrt(1.0 - r * r) * s[2];
    return {phi, r, HermitianMatrix::hermitian_part(s[0]), HermitianMatrix::hermitian_part(d2)};
}

}  // namespace qcrb
