#pragma once

#include <functional>

#include "qcrb/linalg.hpp"

namespace qcrb {

struct NelderMeadOptions {
    double initial_step = 0.5;
    double ftol = 1e-13;
    double xtol = 1e-12;
    int max_evals = 20000;
};

struct NelderMeadResult {
    RVector x;
    double f;
    int evals;
};

NelderMeadResult nelder_mead(const std::function<double(const RVector&)>& f, const RVector& x0,
                             const NelderMeadOptions& opt = {});

}  // namespace qcrb
