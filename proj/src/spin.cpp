#include "qcrb/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcrb/errors.hpp"
#include "qcrb/gaussian.hpp"

namespace qcrb {

namespace {

void require_two_j(int two_j, int min = 1) {
    if (two_j < min) throw ValidationError("spin index 2j is out of range");
}

void require_p(double p) {
    if (!std::isfinite(p) || p < 0.0 || p >= 1.0) throw ValidationError("p must lie in [0, 1)");
}

// 1 - p^N without cancellation for p near 1.
double one_minus_pow(double p, int N) { return p == 0.0 ? 1.0 : -std::expm1(N * std::log(p)); }

// Raising/lowering on the first two_j + 1 levels of a Fock space of dimension fock_dim.
CMatrix embedded_jplus(int two_j, int fock_dim) {
    CMatrix jp = CMatrix::Zero(fock_dim, fock_dim);
    for (int n = 1; n <= two_j; ++n) jp(n - 1, n) = std::sqrt(double(n) * double(two_j - n + 1));
    return jp;
}

RVector padded(const RVector& w, int dim) {
    RVector out = RVector::Zero(dim);
    out.head(w.size()) = w;
    return out;
}

double expect_square(const RVector& w, const CMatrix& A) {
    double acc = 0.0;
    for (Eigen::Index n = 0; n < w.size(); ++n)
        if (w[n] != 0.0) acc += w[n] * A.col(n).squaredNorm();
    return acc;
}

}  // namespace

SpinJSystem::SpinJSystem(int two_j_, double p_) : two_j(two_j_), p(p_) {
    require_two_j(two_j, 0);
    require_p(p);
}

double expect_jordan(const RVector& w, const CMatrix& X, const CMatrix& Y) {
    double acc = 0.0;
    for (Eigen::Index n = 0; n < w.size(); ++n)
        if (w[n] != 0.0) acc += w[n] * X.col(n).dot(Y.col(n)).real();
    return acc;
}

SpinOps spin_ops(int two_j) {
    require_two_j(two_j);
    const int d = two_j + 1;
    SpinOps ops;
    ops.Jplus = embedded_jplus(two_j, d);
    ops.Jminus = ops.Jplus.adjoint();
    ops.J1 = 0.5 * (ops.Jplus + ops.Jminus);
    ops.J2 = (ops.Jplus - ops.Jminus) / Complex(0.0, 2.0);
    ops.J3 = CMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) ops.J3(n, n) = 0.5 * two_j - n;
    return ops;
}

double p_of_r(double r) {
    if (!std::isfinite(r) || r < 0.0 || r >= 1.0) throw ValidationError("radial coordinate must lie in [0, 1)");
    return (1.0 - r) / (1.0 + r);
}

CVector coherent_vec(int two_j, Complex z) {
    require_two_j(two_j, 0);
    const double az = std::abs(z);
    if (!std::isfinite(az) || az >= 1.0) throw ValidationError("coherent vector requires |z| < 1");
    CVector v = CVector::Zero(two_j + 1);
    if (az == 0.0) {
        v[0] = 1.0;
        return v;
    }
    const double lz = std::log(az), l1 = std::log1p(-az * az), arg = std::arg(z);
    const double lg = std::lgamma(two_j + 1.0);
    for (int n = 0; n <= two_j; ++n) {
        const double logmag =
            0.5 * (lg - std::lgamma(n + 1.0) - std::lgamma(two_j - n + 1.0)) + n * lz + 0.5 * (two_j - n) * l1;
        v[n] = std::polar(std::exp(logmag), n * arg);
    }
    return v;
}

RVector rho_jp_weights(int two_j, double p) {
    require_two_j(two_j, 0);
    require_p(p);
    RVector w(two_j + 1);
    const double norm = (1.0 - p) / one_minus_pow(p, two_j + 1);
    double pn = 1.0;
    for (int n = 0; n <= two_j; ++n, pn *= p) w[n] = norm * pn;
    return w;
}

HermitianMatrix rho_jp(int two_j, double p) {
    return HermitianMatrix(CMatrix(rho_jp_weights(two_j, p).cast<Complex>().asDiagonal()));
}

double angular_density(int two_j, double p, double phi) {
    require_two_j(two_j, 0);
    require_p(p);
    if (!std::isfinite(phi) || phi < 0.0 || phi > std::numbers::pi) throw ValidationError("phi must lie in [0, pi]");
    const int N = two_j + 1;
    const double s = std::sin(0.5 * phi);
    const double c = 1.0 - (1.0 - p) * s * s;
    return N * (1.0 - p) / one_minus_pow(p, N) * std::pow(c, two_j) * std::sin(phi) / (4.0 * std::numbers::pi);
}

double angular_cdf_cos(int two_j, double p, double x) {
    require_two_j(two_j, 0);
    require_p(p);
    x = std::clamp(x, -1.0, 1.0);
    const int N = two_j + 1;
    const double c = 0.5 * (1.0 + p) + 0.5 * (1.0 - p) * x;
    return (std::pow(c, N) - std::pow(p, N)) / one_minus_pow(p, N);
}

double f_closed(int two_j, double p) {
    require_two_j(two_j, 0);
    require_p(p);
    const int N = two_j + 1;
    const double pN = std::pow(p, N);
    // 1 + N p^{N+1} - (N+1) p^N = (1 - p^N) - N p^N (1 - p)
    const double num = one_minus_pow(p, N) - N * pN * (1.0 - p);
    return 2.0 * num / ((N + 1.0) * (1.0 - p) * one_minus_pow(p, N));
}

AngularSample sample_angle(int two_j, double p, StreamRng& rng) {
    const int N = two_j + 1;
    const double u = rng.uniform_open();
    const double psi = 2.0 * std::numbers::pi * rng.uniform();
    // c^N is uniform on [p^N, 1].
    const double log_cN = std::log(std::pow(p, N) + u * one_minus_pow(p, N));
    const double one_minus_c = -std::expm1(log_cN / N);
    const double omc = std::min(2.0, 2.0 * one_minus_c / (1.0 - p));
    const double phi = 2.0 * std::asin(std::sqrt(0.5 * omc));
    return {phi, psi, angular_density(two_j, p, phi), omc};
}

std::vector<AngularSample> sample_angles(int two_j, double p, std::uint64_t count, std::uint64_t seed) {
    require_two_j(two_j, 0);
    require_p(p);
    if (count == 0) throw ValidationError("count must be at least 1");
    std::vector<AngularSample> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        StreamRng rng(seed, i);
        out.push_back(sample_angle(two_j, p, rng));
    }
    return out;
}

LimitReport limit_report(int two_j, double p, const std::optional<WeightMatrix>& gtilde, Complex probe) {
    require_two_j(two_j);
    if (!std::isfinite(p) || p <= 0.0 || p >= 1.0) throw ValidationError("limit_report requires p in (0, 1)");
    const int N = two_j + 1;
    const int D = two_j + 2;  // one level above the spin space so a^dagger is exact on it
    const double tj = two_j;
    const double pN = std::pow(p, N);
    const double omN = one_minus_pow(p, N);

    const RVector w = padded(rho_jp_weights(two_j, p), D);
    const CMatrix a = annihilation(D);
    const CMatrix ad = a.adjoint();
    const CMatrix jp = embedded_jplus(two_j, D);
    const CMatrix jm = jp.adjoint();
    const CMatrix Q = quadrature_q(D), P = quadrature_p(D);
    const CMatrix Jx = 0.5 * (jp + jm), Jy = (jp - jm) / Complex(0.0, 2.0);
    const double sj = std::sqrt(0.5 * tj);

    LimitReport rep{};
    rep.two_j = two_j;
    rep.p = p;
    rep.probe = probe;

    // Against thermal weights (1-p) p^n: inside the spin space w_n exceeds them by the factor
    // p^N/(1-p^N); beyond it the thermal state has mass p^N.
    const double excess = pN / omN;
    double dist = 0.0;
    for (int n = 0; n < N; ++n) dist += excess * (1.0 - p) * std::pow(p, n);
    rep.trace_distance = {dist + pN, pN / omN + pN};

    {
        const CVector v = coherent_vec(two_j, probe / std::sqrt(tj));
        const double az2 = std::norm(probe);
        Complex overlap = 0.0;
        for (int n = 0; n < N; ++n) {
            const double logmag = -0.5 * az2 + n * std::log(std::abs(probe)) - 0.5 * std::lgamma(n + 1.0);
            overlap += std::conj(std::polar(std::exp(logmag), n * std::arg(probe))) * v[n];
        }
        rep.coherent = {2.0 * std::sqrt(std::max(0.0, 1.0 - std::norm(overlap))), std::nullopt};
    }

    const double r3 = expect_square(w, a - jp / std::sqrt(tj));
    const double r4 = expect_square(w, ad - jm / std::sqrt(tj));
    const double b3 = (1.0 - p) / tj * p * (1.0 + p) / std::pow(1.0 - p, 3);
    const double b4 = (1.0 - p) / tj * (1.0 + p) / std::pow(1.0 - p, 3) +
                      (1.0 - p) / omN * double(N) * double(N) * std::pow(p, two_j);
    rep.ladder_plus = {r3, b3};
    rep.ladder_minus = {r4, b4};

    const CMatrix dq = Q - Jx / sj, dp = P - Jy / sj;
    const double r5 = expect_square(w, dq), r6 = expect_square(w, dp);
    rep.quad_q = {r5, b3 + b4};
    rep.quad_p = {r6, b3 + b4};

    const double q2 = expect_square(w, Q), p2 = expect_square(w, P);
    rep.cross_qq = {std::abs(expect_jordan(w, dq, Q)), std::sqrt(r5 * q2)};
    rep.cross_qp = {std::abs(expect_jordan(w, dq, P)), std::sqrt(r5 * p2)};
    rep.cross_pq = {std::abs(expect_jordan(w, dp, Q)), std::sqrt(r6 * q2)};
    rep.cross_pp = {std::abs(expect_jordan(w, dp, P)), std::sqrt(r6 * p2)};

    // Moment gaps the same way, as inside excess minus analytic tail.
    double inside_q = 0.0, inside_p = 0.0;
    for (int n = 0; n < N; ++n) {
        const double delta = excess * (1.0 - p) * std::pow(p, n);
        inside_q += delta * Q.col(n).squaredNorm();
        inside_p += delta * P.col(n).squaredNorm();
    }
    const double tail = pN * (N + p / (1.0 - p) + 0.5);
    const double moment_bound = pN * (1.0 - p) * (1.0 / (1.0 - p) + 2.0 * p / std::pow(1.0 - p, 2)) +
                                pN * (2.0 * N + 1.0) + 2.0 * pN * p / (1.0 - p);
    rep.moment_q2 = {std::abs(inside_q - tail), moment_bound};
    rep.moment_p2 = {std::abs(inside_p - tail), moment_bound};
    rep.moment_qp = {std::abs(expect_jordan(w, Q, P)), std::nullopt};

    if (gtilde) {
        if (gtilde->dim() != 2) throw ValidationError("limit_report: weight must be 2x2");
        const double nbar = p / (1.0 - p);
        Eigen::Matrix2d m;
        m << q2, expect_jordan(w, Q, P), expect_jordan(w, Q, P), p2;
        const Eigen::Matrix2d limit = (nbar + 0.5) * Eigen::Matrix2d::Identity();
        rep.weighted_moment_gap = (m - limit).cwiseAbs().maxCoeff();
    }
    return rep;
}

MomentMatrices moment_matrices(int two_j, double r, const WeightMatrix& gtilde) {
    require_two_j(two_j);
    if (gtilde.dim() != 2) throw ValidationError("moment_matrices: weight must be 2x2");
    if (!gtilde.strictly_pd()) throw SingularityError("moment_matrices: weight must be strictly positive definite");
    if (r == 0.0) throw SingularityError("moment_matrices: degenerate at r = 0");
    require_interior(r);
    const double p = p_of_r(r);
    const int d = two_j + 1;
    const auto ops = spin_ops(two_j);
    const CMatrix Qc = quadrature_q(d), Pc = quadrature_p(d);
    const RVector w = rho_jp_weights(two_j, p);

    MomentMatrices out;
    out.B << 2.0 * expect_jordan(w, ops.J1, Qc), 2.0 * expect_jordan(w, ops.J2, Qc),
        2.0 * expect_jordan(w, ops.J1, Pc), 2.0 * expect_jordan(w, ops.J2, Pc);

    const RVector we = padded(w, d + 1);
    const CMatrix Q = quadrature_q(d + 1), P = quadrature_p(d + 1);
    const Eigen::Matrix2d g = gtilde.matrix();
    const double qp = expect_jordan(we, Q, P);
    out.V << expect_square(we, Q), qp, qp, expect_square(we, P);
    out.V += 0.5 * std::sqrt(g.determinant()) * g.inverse();
    return out;
}

}  // namespace qcrb
