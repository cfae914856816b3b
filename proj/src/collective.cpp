#include "qcrb/collective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qcrb/errors.hpp"
#include "qcrb/qubit.hpp"
#include "qcrb/spin.hpp"

namespace qcrb {

namespace {

void require_n(std::uint64_t n, std::uint64_t min = 1) {
    if (n < min) {
        std::ostringstream os;
        os << "copy count must be at least " << min;
        throw ValidationError(os.str());
    }
    if (n > (1ULL << 40)) throw ValidationError("copy count too large");
}

// Extended precision: the log terms reach ~n in magnitude and must cancel to ~1e-12.
using ld = long double;

ld lchoose(ld n, ld k) { return std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L); }

// log of C(n,k) - C(n,k-1)
ld log_multiplicity(std::uint64_t n, std::uint64_t k) {
    const ld nd = ld(n), kd = ld(k);
    return lchoose(nd, kd) + std::log1p(-kd / (nd - kd + 1.0L));
}

double one_minus_pow(double p, double N) { return p == 0.0 ? 1.0 : -std::expm1(N * std::log(p)); }

}  // namespace

SpinDistribution::SpinDistribution(std::uint64_t n, double r) : n_(n), r_(r) {
    require_n(n);
    require_interior(r);
    const std::uint64_t kmax = n / 2;
    std::vector<ld> logp(kmax + 1);
    const ld nd = ld(n);
    const ld rl = r;
    const ld q = 0.5L * (1.0L - rl);
    const ld p = (1.0L - rl) / (1.0L + rl);
    for (std::uint64_t k = 0; k <= kmax; ++k) {
        const ld N = nd - 2.0L * ld(k) + 1.0L;  // 2j + 1
        const ld lm = log_multiplicity(n, k);
        if (r == 0.0) {
            logp[k] = lm + std::log(N) - nd * std::log(2.0L);
        } else {
            const ld tail = -std::expm1(N * std::log(p));  // 1 - p^N
            logp[k] = lm + ld(k) * std::log(q) + (nd - ld(k) + 1.0L) * std::log1p(-q) + std::log(tail) - std::log(rl);
        }
    }
    probs_.resize(kmax + 1);
    for (std::uint64_t k = 0; k <= kmax; ++k) probs_[k] = double(std::exp(logp[k]));
    if (r == 0.0 && n <= 60) {
        // exact dyadic values: (C(n,k) - C(n,k-1)) (n - 2k + 1) / 2^n
        std::uint64_t c = 1, prev = 0;
        for (std::uint64_t k = 0; k <= kmax; ++k) {
            if (k > 0) prev = c, c = c * (n - k + 1) / k;
            probs_[k] = std::ldexp(double((c - prev) * (n - 2 * k + 1)), -int(n));
        }
    }
    double total = 0.0;
    for (double v : probs_) total += v;
    drift_ = std::abs(total - 1.0);
    for (double& v : probs_) v /= total;
    cumulative_.resize(probs_.size());
    std::partial_sum(probs_.begin(), probs_.end(), cumulative_.begin());
    cumulative_.back() = 1.0;
}

std::vector<double> SpinDistribution::support() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = j(i);
    return out;
}

std::size_t SpinDistribution::sample_index(double u) const {
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min<std::size_t>(it - cumulative_.begin(), size() - 1);
}

std::vector<double> SpinDistribution::draw(std::uint64_t seed, std::uint64_t count) const {
    std::vector<double> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        StreamRng rng(seed, i);
        out.push_back(j(sample_index(rng.uniform())));
    }
    return out;
}

SpinDistribution p_nr(std::uint64_t n, double r) { return SpinDistribution(n, r); }

double score_pnr(std::uint64_t n, double r, int two_j) {
    require_n(n);
    require_interior(r);
    if (two_j < 0 || std::uint64_t(two_j) > n || (n - std::uint64_t(two_j)) % 2 != 0)
        throw ValidationError("j is not in the support");
    if (r == 0.0) return 0.0;  // P_{n,r} is even in r
    const double nd = double(n);
    const double k = 0.5 * (nd - two_j);
    const double N = two_j + 1.0;
    const double p = (1.0 - r) / (1.0 + r);
    const double tail = p == 0.0 ? (N == 1.0 ? 1.0 : 0.0) : std::exp((N - 1.0) * std::log(p));
    return -k / (1.0 - r) + (nd - k + 1.0) / (1.0 + r) + 2.0 * N * tail / ((1.0 + r) * (1.0 + r) * one_minus_pow(p, N)) -
           1.0 / r;
}

double fisher_pnr(std::uint64_t n, double r) {
    const auto dist = p_nr(n, r);
    if (dist.size() == 1 || r == 0.0) return 0.0;
    double J = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double s = score_pnr(n, r, dist.two_j(i));
        J += dist.probs()[i] * s * s;
    }
    return J;
}

double theta3_hat(std::uint64_t n, double r0, int two_j) {
    const double J = fisher_pnr(n, r0);
    if (!(J > 1e-12)) throw DegenerateInformationError("radial Fisher information vanishes");
    return score_pnr(n, r0, two_j) / J + r0;
}

double covariant_risk(RiskKind kind, double x, double r, double one_minus_cos) {
    switch (kind) {
        case RiskKind::euclidean: return (x - r) * (x - r) + 2.0 * r * x * one_minus_cos;
        case RiskKind::bures:
            return 0.5 * (1.0 - std::sqrt((1.0 - r * r) * (1.0 - x * x)) - x * r) + 0.5 * x * r * one_minus_cos;
        case RiskKind::weighted: break;
    }
    throw ValidationError("covariant risk must be euclidean or bures");
}

double covariant_exact_risk(std::uint64_t n, double r, RiskKind kind) {
    const auto dist = p_nr(n, r);
    const double p = r > 0.0 ? p_of_r(r) : 1.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double x = double(dist.two_j(i)) / double(n);
        const double F = r > 0.0 ? f_closed(dist.two_j(i), p) : 1.0;
        acc += dist.probs()[i] * covariant_risk(kind, x, r, F);
    }
    return acc;
}

double covariant_prediction(std::uint64_t n, double r, RiskKind kind) {
    require_n(n);
    require_interior(r);
    const double nd = double(n);
    if (kind == RiskKind::bures) return (0.75 + 0.5 * r) / nd;
    if (kind != RiskKind::euclidean) throw ValidationError("covariant risk must be euclidean or bures");
    if (r == 0.0) return 3.0 / nd - 4.0 * std::sqrt(2.0) / (std::sqrt(std::numbers::pi) * nd * std::sqrt(nd)) + 2.0 / (nd * nd);
    return (3.0 + 2.0 * r - r * r) / nd - (2.0 * (1.0 - r) / r + 4.0 / (1.0 + r)) / (nd * nd);
}

std::string covariant_prediction_source(double r, RiskKind kind) {
    if (kind == RiskKind::bures) return "bures_first_order";
    return r == 0.0 ? "origin_second_order" : "covariant_second_order";
}

SimReport simulate_covariant(std::uint64_t n, const Eigen::Vector3d& theta, RiskKind risk, std::uint64_t trials,
                             std::uint64_t seed, const CovariantOptions& opt) {
    require_n(n);
    if (trials == 0) throw ValidationError("trials must be at least 1");
    if (!theta.allFinite()) throw ValidationError("Bloch vector must be finite");
    if (risk == RiskKind::weighted) throw ValidationError("covariant risk must be euclidean or bures");
    const double r = theta.norm();
    require_interior(r);
    const auto dist = p_nr(n, r);
    const double p = r > 0.0 ? p_of_r(r) : 1.0;
    const Eigen::Matrix3d R = bloch_rotation(r > 0.0 ? theta : opt.origin_axis);
    const double nd = double(n);

    auto trial = [&](StreamRng& rng, std::uint64_t) {
        const std::size_t i = dist.sample_index(rng.uniform());
        const int tj = dist.two_j(i);
        const double x = double(tj) / nd;
        double omc, psi;
        if (r > 0.0) {
            const auto s = sample_angle(tj, p, rng);
            omc = s.one_minus_cos, psi = s.psi;
        } else {
            omc = 2.0 * rng.uniform();
            psi = 2.0 * std::numbers::pi * rng.uniform();
        }
        if (!opt.full_vector) return covariant_risk(risk, x, r, omc);
        const double cosphi = 1.0 - omc;
        const double sinphi = std::sqrt(std::max(0.0, omc * (2.0 - omc)));
        const Eigen::Vector3d est = R * (x * Eigen::Vector3d(sinphi * std::cos(psi), sinphi * std::sin(psi), cosphi));
        if (risk == RiskKind::euclidean) return (est - theta).squaredNorm();
        return 0.5 * (1.0 - std::sqrt((1.0 - r * r) * std::max(0.0, 1.0 - est.squaredNorm())) - est.dot(theta));
    };
    const auto m = run_trials(trials, seed, trial);

    SimReport rep;
    rep.risk_estimate = m.mean;
    rep.std_error = m.std_error;
    rep.trials = trials;
    rep.seed = seed;
    rep.n = n;
    rep.risk_kind = risk;
    rep.prediction = covariant_prediction(n, r, risk);
    rep.prediction_source = covariant_prediction_source(r, risk);
    rep.exact_mean = covariant_exact_risk(n, r, risk);
    return rep;
}

SymmetricMatrix predict_general_cov(std::uint64_t n, double r, const WeightMatrix& gtilde) {
    require_n(n, 2);
    if (r == 0.0) throw SingularityError("predict_general_cov: degenerate at r = 0");
    require_interior(r);
    const auto dist = p_nr(n, r);
    Eigen::Matrix2d upper = Eigen::Matrix2d::Zero();
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const int tj = dist.two_j(i);
        if (tj == 0 || dist.probs()[i] == 0.0) continue;  // the j = 0 block carries no transverse signal
        const auto mm = moment_matrices(tj, r, gtilde);
        const Eigen::Matrix2d Binv = mm.B.inverse();
        upper += dist.probs()[i] * Binv * mm.V * Binv.transpose();
    }
    RMatrix out = RMatrix::Zero(3, 3);
    out.topLeftCorner(2, 2) = upper;
    out(2, 2) = 1.0 / fisher_pnr(n, r);
    return SymmetricMatrix::symmetric_part(out);
}

double origin_exact_risk(std::uint64_t n) {
    const auto dist = p_nr(n, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double x = double(dist.two_j(i)) / double(n);
        acc += dist.probs()[i] * x * x;
    }
    return acc;
}

double origin_fisher_deficit(std::uint64_t n) {
    const auto dist = p_nr(n, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) acc += dist.probs()[i] * (4.0 / 3.0) * dist.j(i);
    return acc;
}

double origin_cov_fisher(std::uint64_t n) { return double(n) - origin_fisher_deficit(n); }

double origin_fisher_deficit_approx(std::uint64_t n) {
    return 4.0 * std::sqrt(2.0) / (3.0 * std::sqrt(std::numbers::pi)) * std::sqrt(double(n)) + 2.0 / 3.0;
}

AsymptoticPredictions asymptotic_predictions(std::uint64_t n, double r) {
    require_n(n, 2);
    require_interior(r);
    const double nd = double(n);
    AsymptoticPredictions out;
    out.origin_exact = origin_exact_risk(n);
    out.origin_approx = 3.0 / nd - 4.0 * std::sqrt(2.0) / (std::sqrt(std::numbers::pi) * nd * std::sqrt(nd)) + 2.0 / (nd * nd);
    if (r > 0.0) {
        out.radial_mse = (1.0 - r * r) / nd - 2.0 * (1.0 - r) / (r * nd * nd);
        const auto dist = p_nr(n, r);
        double acc = 0.0;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            const double x = double(dist.two_j(i)) / nd;
            acc += dist.probs()[i] * (x - r) * (x - r);
        }
        out.radial_exact = acc;
        out.jnr_inv_approx = (1.0 - r * r) / nd + (1.0 - r * r) / (r * r * nd * nd);
        out.jnr_inv_exact = 1.0 / fisher_pnr(n, r);
    }
    return out;
}

double FisherDecomposition::loss() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < p_omega1.size(); ++i) acc += p_omega1[i] * loss_by_omega1[i];
    return acc;
}

FisherDecomposition fisher_decomposition(const JointFamily& joint, double theta0, std::optional<double> step) {
    const double h = step.value_or(1e-5 * (1.0 + std::abs(theta0)));
    if (!(h > 0.0)) throw ValidationError("finite-difference step must be positive");
    const JointTable p0 = joint(theta0), pp = joint(theta0 + h), pm = joint(theta0 - h);
    auto same_shape = [&](const JointTable& t) {
        if (t.size() != p0.size()) return false;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i].size() != p0[i].size()) return false;
        return true;
    };
    if (p0.empty() || !same_shape(pp) || !same_shape(pm)) throw ValidationError("joint table shape changes with theta");
    for (const auto* t : {&p0, &pp, &pm})
        for (const auto& row : *t) {
            if (row.empty()) throw ValidationError("joint table has an empty row");
            for (double v : row)
                if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("joint table has a zero-probability cell");
        }

    FisherDecomposition out{0.0, 0.0, {}, {}};
    for (std::size_t i = 0; i < p0.size(); ++i) {
        double p1 = 0.0, dp1 = 0.0;
        for (std::size_t k = 0; k < p0[i].size(); ++k) {
            const double d = (pp[i][k] - pm[i][k]) / (2.0 * h);
            p1 += p0[i][k];
            dp1 += d;
            out.J += d * d / p0[i][k];
        }
        const double s1 = dp1 / p1;
        out.J1 += p1 * s1 * s1;
        double loss = 0.0;
        for (std::size_t k = 0; k < p0[i].size(); ++k) {
            const double d = (pp[i][k] - pm[i][k]) / (2.0 * h);
            const double s = d / p0[i][k] - s1;
            loss += p0[i][k] / p1 * s * s;
        }
        out.p_omega1.push_back(p1);
        out.loss_by_omega1.push_back(loss);
    }
    return out;
}

JointFamily spin_joint_family(std::uint64_t n) {
    require_n(n);
    return [n](double theta) {
        const auto dist = p_nr(n, theta);
        const double p = p_of_r(theta);
        JointTable t(dist.size());
        for (std::size_t i = 0; i < dist.size(); ++i) {
            const RVector w = rho_jp_weights(dist.two_j(i), p);
            t[i].resize(w.size());
            for (Eigen::Index k = 0; k < w.size(); ++k) t[i][k] = dist.probs()[i] * w[k];
        }
        return t;
    };
}

}  // namespace qcrb
