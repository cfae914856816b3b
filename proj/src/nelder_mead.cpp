#include "qcrb/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qcrb {

NelderMeadResult nelder_mead(const std::function<double(const RVector&)>& f, const RVector& x0,
                             const NelderMeadOptions& opt) {
    const Eigen::Index n = x0.size();
    if (n == 0) return {x0, f(x0), 1};

    std::vector<RVector> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    for (Eigen::Index i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
    int evals = 0;
    for (auto i = 0u; i < pts.size(); ++i) vals[i] = f(pts[i]), ++evals;

    std::vector<std::size_t> order(n + 1);
    while (evals < opt.max_evals) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
        const auto best = order.front(), worst = order.back(), second = order[n - 1];

        double diam = 0.0;
        for (auto i : order) diam = std::max(diam, (pts[i] - pts[best]).cwiseAbs().maxCoeff());
        if (vals[worst] - vals[best] <= opt.ftol * (1.0 + std::abs(vals[best])) &&
            diam <= opt.xtol * (1.0 + pts[best].cwiseAbs().maxCoeff()))
            break;

        RVector centroid = RVector::Zero(n);
        for (auto i : order)
            if (i != worst) centroid += pts[i];
        centroid /= double(n);

        const RVector xr = centroid + (centroid - pts[worst]);
        const double fr = f(xr);
        ++evals;
        if (fr < vals[best]) {
            const RVector xe = centroid + 2.0 * (centroid - pts[worst]);
            const double fe = f(xe);
            ++evals;
            if (fe < fr) pts[worst] = xe, vals[worst] = fe;
            else pts[worst] = xr, vals[worst] = fr;
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = xr, vals[worst] = fr;
            continue;
        }
        const bool outside = fr < vals[worst];
        const RVector xc = outside ? RVector(centroid + 0.5 * (xr - centroid))
                                   : RVector(centroid + 0.5 * (pts[worst] - centroid));
        const double fc = f(xc);
        ++evals;
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = xc, vals[worst] = fc;
            continue;
        }
        for (auto i : order) {
            if (i == best) continue;
            pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
            vals[i] = f(pts[i]);
            ++evals;
        }
    }
    const auto it = std::min_element(vals.begin(), vals.end());
    return {pts[it - vals.begin()], *it, evals};
}

}  // namespace qcrb
