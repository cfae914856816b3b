// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcrb/bounds.hpp"
#include "qcrb/collective.hpp"
#include "qcrb/errors.hpp"
#include "qcrb/gaussian.hpp"
#include "qcrb/holevo_program.hpp"
#include "qcrb/spin.hpp"

using namespace qcrb;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

RMatrix diag(std::initializer_list<double> v) {
    RMatrix m = RMatrix::Zero(v.size(), v.size());
    int i = 0;
    for (double x : v) m(i, i) = x, ++i;
    return m;
}

Outcome bound_chain() {
    std::mt19937_64 rng(2024);
    double worst = 0.0, min_gap = 1e300;
    for (int s = 0; s < 100; ++s) {
        const WeightMatrix G(oracle::random_pd(rng, 3));
        for (int k = 0; k <= 9; ++k) {
            const auto rep = full_model_report(0.1 * k, G);
            worst = std::min({worst, rep.c_rld - rep.c_sld, rep.c_holevo - rep.c_rld, rep.c_quasi - rep.c_holevo});
            if (k > 0) min_gap = std::min(min_gap, rep.c_quasi - rep.c_holevo);
        }
    }
    return {worst >= -1e-9 && min_gap > 0.0, fmt("min slack %.3e, min quasi-holevo gap (r>0) %.3e", worst, min_gap)};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(77);
    std::vector<WeightMatrix> g2{WeightMatrix::identity(2), WeightMatrix(diag({4, 1})), WeightMatrix(diag({0.2, 3}))};
    for (int i = 0; i < 3; ++i) g2.emplace_back(oracle::random_pd(rng, 2));
    double worst = 0.0;
    int regime1 = 0, regime2 = 0, boundary = 0, cases = 0;
    auto check = [&](const HolevoProgram& prog, double closed) {
        const double num = holevo_numeric(prog).value;
        worst = std::max(worst, std::abs(num - closed) / std::abs(closed));
        ++cases;
    };
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (int k = 0; k <= 8; ++k) {
            const double phi = k * std::numbers::pi / 16;
            for (const auto& G : g2) {
                const auto h = holevo_submodel(r, phi, G);
                (h.regime == 1 ? regime1 : regime2)++;
                check(submodel_program(r, phi, G), h.value);
            }
            const double thr = detail::submodel_threshold(r, phi);
            if (thr > 1e-3 && thr < 1e3) {
                const WeightMatrix Gb(diag({thr, 1.0 / thr}));
                check(submodel_program(r, phi, Gb), holevo_submodel(r, phi, Gb).value);
                ++boundary;
            }
        }
        for (int i = 0; i < 5; ++i) {
            const WeightMatrix G(oracle::random_pd(rng, 3));
            check(full_qubit_program(r, G), holevo_full_qubit(r, G).value);
        }
    }
    const bool ok = worst <= 1e-6 && regime1 > 0 && regime2 > 0 && boundary > 0;
    return {ok, fmt("max rel err %.3e over %g cases", worst, cases) +
                    fmt(" (regime-1 %g, regime-2 %g, ", regime1, regime2) + fmt("boundary %g)", boundary)};
}

Outcome euclidean_risk() {
    const std::uint64_t n = 100;
    const auto rep = simulate_covariant(n, Eigen::Vector3d(0, 0, 0.6), RiskKind::euclidean, 1000000, 1);
    const double target = 3.84 - 3.8333 / 100.0;
    const double est = n * rep.risk_estimate, se = n * rep.std_error;
    const bool mc_ok = std::abs(est - target) <= 4.0 * se;
    const double origin = origin_exact_risk(4);
    const bool exact_ok = origin == 29.0 / 64.0;
    return {mc_ok && exact_ok, fmt("n*risk %.5f +- %.5f vs %.5f", est, se, target) +
                                   fmt(" (exact %.5f); origin n=4 %.17g", n * *rep.exact_mean, origin)};
}

Outcome bures_risk() {
    const std::uint64_t n = 100;
    const auto rep = simulate_covariant(n, Eigen::Vector3d(0, 0, 0.6), RiskKind::bures, 1000000, 1);
    const double target = 0.75 + 0.5 * 0.6;
    const double est = n * rep.risk_estimate, se = n * rep.std_error;
    return {std::abs(est - target) <= 4.0 * se,
            fmt("n*risk %.5f +- %.5f vs %.5f", est, se, target) + fmt(" (exact %.5f)", n * *rep.exact_mean)};
}

Outcome appendix_asymptotics() {
    const auto a = asymptotic_predictions(1000, 0.5);
    const double e1 = std::abs(a.origin_exact - a.origin_approx) / a.origin_exact;
    const double e2 = std::abs(*a.jnr_inv_exact - *a.jnr_inv_approx) / *a.jnr_inv_exact;
    const double d = origin_fisher_deficit(10000), da = origin_fisher_deficit_approx(10000);
    const double e3 = std::abs(d - da) / d;
    return {e1 < 0.02 && e2 < 0.01 && e3 < 0.02, fmt("origin %.3e, J^-1 %.3e, deficit %.3e", e1, e2, e3)};
}

Outcome gaussian_no_advantage() {
    bool ok = true;
    double worst_z = 0.0;
    const std::uint64_t copies = 10;
    for (double nbar : {0.0, 1.0})
        for (const auto& g : {diag({1, 1}), diag({4, 1})}) {
            const WeightMatrix G(g);
            const auto rep = simulate_gaussian(nbar, Eigen::Vector2d(0.4, -0.2), G, copies, 200000, 3);
            const double target = (nbar + 0.5) * g.trace() + std::sqrt(g.determinant());
            const double z = (copies * rep.risk_estimate - target) / (copies * rep.std_error);
            worst_z = std::max(worst_z, std::abs(z));
            ok = ok && std::abs(z) <= 4.0;
        }
    return {ok, fmt("max |z| %.3f", worst_z)};
}

Outcome gaussian_limit() {
    bool ok = true;
    int decreases = 0, bounds_checked = 0;
    std::string why;
    auto fields = [](const LimitReport& r) {
        return std::vector<Residual>{r.trace_distance, r.coherent,  r.ladder_plus, r.ladder_minus, r.quad_q,
                                     r.quad_p,         r.cross_qq,  r.cross_qp,    r.cross_pq,     r.cross_pp,
                                     r.moment_q2,      r.moment_p2, r.moment_qp};
    };
    for (double p : {0.3, 0.5, 0.7}) {
        std::vector<std::vector<Residual>> by_j;
        for (int j : {5, 10, 20, 40, 80}) by_j.push_back(fields(limit_report(2 * j, p)));
        for (std::size_t k = 0; k < by_j.size(); ++k) {
            for (std::size_t f = 0; f < by_j[k].size(); ++f) {
                const auto& res = by_j[k][f];
                if (res.bound) {
                    ++bounds_checked;
                    if (res.value > *res.bound * (1.0 + 1e-12)) {
                        ok = false;
                        why += fmt(" bound r%g p=%.1f", f + 1.0, p);
                    }
                }
                if (k + 2 < by_j.size()) {
                    ++decreases;
                    const double now = by_j[k + 2][f].value, before = by_j[k][f].value;
                    if (!(now < before || (now == 0.0 && before == 0.0))) {
                        ok = false;
                        why += fmt(" r%g p=%.1f", f + 1.0, p);
                    }
                }
            }
        }
    }
    return {ok, fmt("%g j->4j comparisons, %g bound checks", decreases, bounds_checked) + why};
}

Outcome general_weight() {
    const std::uint64_t n = 400;
    const double r = 0.5;
    const RMatrix pred = double(n) * predict_general_cov(n, r, WeightMatrix::identity(2)).matrix();
    const RMatrix target = diag({1.5, 1.5, 0.75});
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double scale = std::abs(target(i, j)) > 0.0 ? std::abs(target(i, j)) : 1.0;
            worst = std::max(worst, std::abs(pred(i, j) - target(i, j)) / scale);
        }
    std::vector<RMatrix> gts{diag({1, 1}), diag({4, 1}), RMatrix(2, 2)};
    gts[2] << 2.0, 0.3, 0.3, 1.0;
    double worst_tr = 0.0;
    for (const auto& gt : gts)
        for (double s : {1.0, 2.5}) {
            RMatrix g = RMatrix::Zero(3, 3);
            g.topLeftCorner(2, 2) = gt;
            g(2, 2) = s;
            const RMatrix p = double(n) * predict_general_cov(n, r, WeightMatrix(gt)).matrix();
            const double tr = (g * p).trace();
            const double ch = holevo_full_qubit(r, WeightMatrix(g)).value;
            worst_tr = std::max(worst_tr, std::abs(tr - ch) / ch);
        }
    return {worst < 0.05 && worst_tr < 0.05, fmt("max entry rel err %.4f, max trace rel err %.4f", worst, worst_tr)};
}

Outcome exact_identities() {
    double dec = 0.0;
    const std::vector<std::pair<JointFamily, double>> families{
        {spin_joint_family(20), 0.5},
        {[](double t) {
             const double s = t * t;
             return JointTable{{(1 - t) * (1 - s), (1 - t) * s}, {t * (1 - s), t * s}};
         },
         0.3},
        {[](double t) {
             // row 0: one cell; row 1: three cells with t-dependent split
             const double a = 0.2 + 0.5 * t;
             return JointTable{{1 - a}, {a * t * t / 2, a * t * (1 - t), a * (1 - t * (1 - t) - t * t / 2)}};
         },
         0.4}};
    for (const auto& [fam, t0] : families) {
        const auto d = fisher_decomposition(fam, t0);
        dec = std::max(dec, std::abs(d.J - d.J1 - d.loss()) / d.J);
    }

    double sld = 0.0, cross = 0.0;
    const auto s = spin_half();
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 0.95);
    for (int i = 0; i < 50; ++i) {
        Eigen::Vector3d v(nd(rng), nd(rng), nd(rng));
        const QubitPoint pt{v.normalized() * ud(rng)};
        const auto rho = bloch_state(pt);
        const auto L = sld_set(pt);
        for (int k = 0; k < 3; ++k) sld = std::max(sld, (s[k] - jordan(rho.matrix(), L[k].matrix())).norm());
        const auto fp = fisher_pair(pt);
        const RMatrix Ji = fp.J.matrix().inverse();
        const CMatrix lhs = Ji.cast<Complex>() + Complex(0, 0.5) * (Ji * fp.D * Ji).cast<Complex>();
        cross = std::max(cross, (lhs - fp.Jtilde_inv.matrix()).cwiseAbs().maxCoeff());
    }

    double gid = 0.0;
    for (double nbar : {0.0, 0.5, 2.0}) {
        for (int i = 0; i < 10; ++i) {
            const WeightMatrix G(oracle::random_pd(rng, 2));
            const auto sm = squeezed_params(G, nbar);
            const double b = gaussian_rld_bound(nbar, G);
            gid = std::max(gid, std::abs((G.matrix() * sm.outcome_cov.matrix()).trace() - b) / b);
        }
    }
    const bool ok = dec <= 1e-8 && sld <= 1e-10 && cross <= 1e-10 && gid <= 1e-13;
    return {ok, fmt("decomposition %.2e, SLD %.2e, cross-path %.2e", dec, sld, cross) + fmt(", gaussian trace %.2e", gid)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double max_seconds;
    };
    const std::vector<Criterion> criteria{
        {"bound chain", bound_chain, 10},
        {"holevo oracle equivalence", oracle_equivalence, 60},
        {"euclidean covariant risk", euclidean_risk, 120},
        {"bures covariant risk", bures_risk, 120},
        {"origin and radial asymptotics", appendix_asymptotics, 60},
        {"gaussian no-advantage", gaussian_no_advantage, 120},
        {"spin-to-gaussian limit", gaussian_limit, 60},
        {"general-weight convergence", general_weight, 60},
        {"exact identities", exact_identities, 60},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = out.pass && secs < criteria[i].max_seconds;
        failures += !pass;
        std::printf("criterion %zu [%s]: %s  %s  (%.2f s)\n", i + 1, criteria[i].name, pass ? "PASS" : "FAIL",
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
