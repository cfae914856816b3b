#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qcrb/errors.hpp"
#include "qcrb/qubit.hpp"

using namespace qcrb;

namespace {

std::vector<QubitPoint> random_points(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 0.95);
    std::vector<QubitPoint> out;
    for (int i = 0; i < count; ++i) {
        Eigen::Vector3d v(n(rng), n(rng), n(rng));
        out.push_back({v.normalized() * u(rng)});
    }
    return out;
}

}  // namespace

TEST(BlochState, Origin) {
    auto rho = bloch_state(QubitPoint{});
    EXPECT_LT((rho.matrix() - 0.5 * CMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(BlochState, OnAxis) {
    auto rho = bloch_state(QubitPoint::on_axis(0.6));
    EXPECT_NEAR(rho.matrix()(0, 0).real(), 0.8, 1e-15);
    EXPECT_NEAR(rho.matrix()(1, 1).real(), 0.2, 1e-15);
}

TEST(BlochState, XAxisIsRotatedDiagonal) {
    auto rho = bloch_state({Eigen::Vector3d(0.6, 0.0, 0.0)});
    auto es = hermitian_eig(rho);
    EXPECT_NEAR(es.values[0], 0.2, 1e-14);
    EXPECT_NEAR(es.values[1], 0.8, 1e-14);
    const CMatrix U = su2_lift(Eigen::Vector3d(0.6, 0.0, 0.0));
    const CMatrix rotated = U * bloch_state(QubitPoint::on_axis(0.6)).matrix() * U.adjoint();
    EXPECT_LT((rotated - rho.matrix()).norm(), 1e-14);
}

TEST(BlochState, TraceAndSpectrum) {
    for (const auto& p : random_points(50, 1)) {
        auto rho = bloch_state(p);
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-14);
        auto es = hermitian_eig(rho);
        EXPECT_NEAR(es.values[0], 0.5 * (1 - p.r()), 1e-14);
        EXPECT_NEAR(es.values[1], 0.5 * (1 + p.r()), 1e-14);
    }
}

TEST(BlochState, BoundaryRejected) {
    EXPECT_THROW(bloch_state(QubitPoint::on_axis(1.0)), BoundaryError);
    EXPECT_THROW(bloch_state(QubitPoint::on_axis(1.0 - 1e-7)), BoundaryError);
    EXPECT_NO_THROW(bloch_state(QubitPoint::on_axis(1.0 - 1e-6)));
    EXPECT_THROW(fisher_pair(1.2), BoundaryError);
}

TEST(SuTwoLift, AdjointActionMatchesRotation) {
    auto s = spin_half();
    for (const auto& p : random_points(20, 2)) {
        const Eigen::Matrix3d R = bloch_rotation(p.theta);
        const CMatrix U = su2_lift(p.theta);
        EXPECT_LT((R * Eigen::Vector3d::UnitZ() - p.theta.normalized()).norm(), 1e-14);
        for (int k = 0; k < 3; ++k) {
            CMatrix expected = CMatrix::Zero(2, 2);
            for (int l = 0; l < 3; ++l) expected += R(l, k) * s[l];
            EXPECT_LT((U * s[k] * U.adjoint() - expected).norm(), 1e-14);
        }
    }
}

TEST(Sld, OnAxisForms) {
    const double r = 0.6;
    auto L = sld_set(QubitPoint::on_axis(r));
    auto s = spin_half();
    EXPECT_LT((L[0].matrix() - 2.0 * s[0]).norm(), 1e-15);
    EXPECT_LT((L[1].matrix() - 2.0 * s[1]).norm(), 1e-15);
    EXPECT_NEAR(L[2].matrix()(0, 0).real(), 1.0 / (1 + r), 1e-15);
    EXPECT_NEAR(L[2].matrix()(1, 1).real(), -1.0 / (1 - r), 1e-15);
}

TEST(Sld, DefiningEquationResidual) {
    auto s = spin_half();
    auto pts = random_points(100, 3);
    pts.push_back(QubitPoint{});
    pts.push_back(QubitPoint::on_axis(0.9));
    pts.push_back({Eigen::Vector3d(0.0, 0.0, -0.7)});
    for (const auto& p : pts) {
        auto rho = bloch_state(p);
        auto L = sld_set(p);
        for (int k = 0; k < 3; ++k) EXPECT_LT((s[k] - jordan(rho.matrix(), L[k].matrix())).norm(), 1e-10);
    }
}

TEST(FisherPair, KnownValues) {
    auto fp = fisher_pair(0.6);
    EXPECT_NEAR(fp.J.matrix()(2, 2), 1.5625, 1e-14);
    EXPECT_NEAR(fp.Jtilde_inv.matrix()(0, 1).imag(), -0.6, 1e-15);
    EXPECT_NEAR(fp.Jtilde_inv.matrix()(1, 0).imag(), 0.6, 1e-15);
    auto f0 = fisher_pair(0.0);
    EXPECT_LT((f0.Jtilde_inv.matrix() - CMatrix::Identity(3, 3)).norm(), 1e-15);
    EXPECT_LT(f0.D.norm(), 1e-15);
}

TEST(FisherPair, CommutatorPathConsistency) {
    for (double r : {0.0, 0.1, 0.3, 0.6, 0.9, 0.99}) {
        auto fp = fisher_pair(r);
        const RMatrix Jinv = fp.J.matrix().inverse();
        const CMatrix lhs = Jinv.cast<Complex>() + Complex(0, 0.5) * (Jinv * fp.D * Jinv).cast<Complex>();
        EXPECT_LT((lhs - fp.Jtilde_inv.matrix()).cwiseAbs().maxCoeff(), 1e-10) << "r=" << r;
        EXPECT_LT((fp.D + fp.D.transpose()).norm(), 1e-14);
    }
}

TEST(FisherPair, TraceBasedMatchesClosedFormOnAxis) {
    for (double r : {0.0, 0.25, 0.8}) {
        auto closed = fisher_pair(r);
        auto traced = fisher_pair(QubitPoint::on_axis(r));
        EXPECT_LT((closed.J.matrix() - traced.J.matrix()).norm(), 1e-12);
        EXPECT_LT((closed.Jtilde_inv.matrix() - traced.Jtilde_inv.matrix()).norm(), 1e-12);
    }
}

TEST(FisherPair, RotationalCovariance) {
    for (const auto& p : random_points(50, 4)) {
        const Eigen::Matrix3d R = bloch_rotation(p.theta);
        auto local = fisher_pair(p.r());
        auto global = fisher_pair(p);
        EXPECT_LT((global.J.matrix() - R * local.J.matrix() * R.transpose()).cwiseAbs().maxCoeff(), 1e-10);
        const CMatrix Rc = R.cast<Complex>();
        EXPECT_LT((global.Jtilde_inv.matrix() - Rc * local.Jtilde_inv.matrix() * Rc.transpose()).cwiseAbs().maxCoeff(),
                  1e-10);
    }
}

TEST(SubmodelTangent, Endpoints) {
    const double r = 0.6;
    auto s = spin_half();
    auto t0 = submodel_tangent(0.0, r);
    EXPECT_LT((t0.d2.matrix() - s[1]).norm(), 1e-15);
    EXPECT_LT((t0.d1.matrix() - s[0]).norm(), 1e-15);
    auto t1 = submodel_tangent(std::numbers::pi / 2, r);
    EXPECT_LT((t1.d2.matrix() - 0.8 * s[2]).norm(), 1e-15);
    auto t2 = submodel_tangent(std::numbers::pi / 4, r);
    const double h = std::sqrt(0.5);
    EXPECT_LT((t2.d2.matrix() - h * s[1] - h * 0.8 * s[2]).norm(), 1e-15);
    EXPECT_NEAR(std::abs(t2.d2.matrix().trace()), 0.0, 1e-15);
}

TEST(SubmodelTangent, SldGramIsIdentity) {
    for (double r : {0.0, 0.3, 0.6, 0.9})
        for (double phi : {0.0, 0.4, 1.0, std::numbers::pi / 2}) {
            auto t = submodel_tangent(phi, r);
            const auto p = QubitPoint::on_axis(r);
            auto rho = bloch_state(p);
            auto L = sld_set(p);
            // SLDs of d1, d2 are the matching combinations of the axis SLDs.
            const CMatrix l1 = L[0].matrix();
            const CMatrix l2 = std::cos(phi) * L[1].matrix() + std::sin(phi) * std::sqrt(1 - r * r) * L[2].matrix();
            EXPECT_LT((jordan(rho.matrix(), l2) - t.d2.matrix()).norm(), 1e-12);
            Eigen::Matrix2d gram;
            gram << (rho.matrix() * jordan(l1, l1)).trace().real(), (rho.matrix() * jordan(l1, l2)).trace().real(),
                (rho.matrix() * jordan(l2, l1)).trace().real(), (rho.matrix() * jordan(l2, l2)).trace().real();
            EXPECT_LT((gram - Eigen::Matrix2d::Identity()).norm(), 1e-12);
        }
}

TEST(SubmodelTangent, RejectsAngle) {
    EXPECT_THROW(submodel_tangent(-0.1, 0.5), ValidationError);
    EXPECT_THROW(submodel_tangent(2.0, 0.5), ValidationError);
}
