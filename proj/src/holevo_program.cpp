#include "qcrb/holevo_program.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qcrb/errors.hpp"
#include "qcrb/nelder_mead.hpp"

namespace qcrb {

namespace {

CMatrix qubit_extension(double r) {
    CMatrix J = CMatrix::Identity(3, 3);
    J(0, 1) = Complex(0.0, -r);
    J(1, 0) = Complex(0.0, r);
    return J;
}

struct Elimination {
    RMatrix particular;  // m x d, column j hits e_j
    RMatrix null_basis;  // m x (m - d)
};

Elimination eliminate(const HolevoProgram& prog) {
    const auto m = prog.J.dim();
    const auto d = static_cast<Eigen::Index>(prog.d_vectors.size());
    RMatrix C(d, m);
    for (Eigen::Index k = 0; k < d; ++k) C.row(k) = prog.d_vectors[k].transpose() * prog.J.matrix().real();
    Eigen::JacobiSVD<RMatrix> svd(C, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RVector sv = svd.singularValues();
    if (sv.size() < d || sv.minCoeff() <= 1e-12 * std::max(1.0, sv.maxCoeff()))
        throw InfeasibleError("holevo_numeric: constraint matrix is rank deficient");
    const RMatrix V = svd.matrixV();
    const RMatrix pinv = V.leftCols(d) * sv.cwiseInverse().asDiagonal() * svd.matrixU().transpose();
    return {pinv, V.rightCols(m - d)};
}

std::vector<RVector> unpack(const Elimination& e, const RVector& z) {
    const auto d = e.particular.cols();
    const auto f = e.null_basis.cols();
    std::vector<RVector> v(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        v[j] = e.particular.col(j);
        if (f > 0) v[j] += e.null_basis * z.segment(j * f, f);
    }
    return v;
}

}  // namespace

void HolevoProgram::validate() const {
    const auto m = J.dim();
    if (d_vectors.empty()) throw ValidationError("HolevoProgram: no d-vectors");
    if (static_cast<Eigen::Index>(d_vectors.size()) > m) throw InfeasibleError("HolevoProgram: more parameters than extension dimension");
    for (const auto& d : d_vectors)
        if (d.size() != m) throw ValidationError("HolevoProgram: d-vector length mismatch");
    if (G.dim() != static_cast<int>(d_vectors.size())) throw ValidationError("HolevoProgram: weight dimension mismatch");
    if (max_abs(RMatrix(J.matrix().real() - RMatrix::Identity(m, m))) > 1e-10)
        throw ValidationError("HolevoProgram: Re J must be the identity");
}

double holevo_objective(const HolevoProgram& prog, const std::vector<RVector>& v) {
    const auto d = static_cast<Eigen::Index>(v.size());
    RMatrix V(prog.J.dim(), d);
    for (Eigen::Index j = 0; j < d; ++j) V.col(j) = v[j];
    const RMatrix re = V.transpose() * prog.J.matrix().real() * V;
    const RMatrix im = V.transpose() * prog.J.matrix().imag() * V;
    const RMatrix sg = psd_sqrt(prog.G.symmetric()).matrix();
    const CMatrix herm = Complex(0.0, 1.0) * (sg * im * sg).cast<Complex>();
    return (sg * re * sg).trace() + abs_and_trace_norm(HermitianMatrix::hermitian_part(herm)).trace_norm;
}

SymmetricMatrix holevo_mse(const HolevoProgram& prog, const std::vector<RVector>& v) {
    prog.G.require_strict("holevo_mse");
    const auto d = static_cast<Eigen::Index>(v.size());
    RMatrix V(prog.J.dim(), d);
    for (Eigen::Index j = 0; j < d; ++j) V.col(j) = v[j];
    const RMatrix re = V.transpose() * prog.J.matrix().real() * V;
    const RMatrix im = V.transpose() * prog.J.matrix().imag() * V;
    const RMatrix sg = psd_sqrt(prog.G.symmetric()).matrix();
    const RMatrix sg_inv = sg.inverse();
    const CMatrix herm = Complex(0.0, 1.0) * (sg * im * sg).cast<Complex>();
    const RMatrix abs_part = abs_and_trace_norm(HermitianMatrix::hermitian_part(herm)).abs.matrix().real();
    return SymmetricMatrix::symmetric_part(re + sg_inv * abs_part * sg_inv);
}

HolevoResult holevo_numeric(const HolevoProgram& prog, const HolevoOptions& opt) {
    prog.validate();
    const Elimination e = eliminate(prog);
    const auto d = e.particular.cols();
    const int free_dims = static_cast<int>(d * e.null_basis.cols());
    auto objective = [&](const RVector& z) { return holevo_objective(prog, unpack(e, z)); };

    if (free_dims == 0) {
        const RVector z0(0);
        return {objective(z0), unpack(e, z0), opt.restarts, 0};
    }

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> values;
    RVector best_z;
    double best = std::numeric_limits<double>::infinity();
    auto agreeing = [&] {
        return static_cast<int>(std::count_if(values.begin(), values.end(), [&](double v) {
            return v - best <= opt.tol * 100.0 * (1.0 + std::abs(best));
        }));
    };

    for (int start = 0; start < opt.max_restarts; ++start) {
        RVector z(free_dims);
        for (auto& x : z) x = normal(rng);
        NelderMeadOptions nm;
        auto res = nelder_mead(objective, z, nm);
        // Re-inflate the simplex until the value stops moving; the objective has kinks.
        for (int round = 0; round < 50; ++round) {
            nm.initial_step = std::max(1e-6, 0.1 * std::pow(0.5, round % 8));
            auto next = nelder_mead(objective, res.x, nm);
            const bool stalled = res.f - next.f <= opt.tol * 1e-2 * (1.0 + std::abs(res.f));
            if (next.f < res.f) res = next;
            if (stalled && round >= 2) break;
        }
        values.push_back(res.f);
        if (res.f < best) best = res.f, best_z = res.x;
        if (start + 1 >= opt.restarts && agreeing() >= 2) break;
    }
    if (agreeing() < 2) {
        std::ostringstream os;
        os << "holevo_numeric: restarts did not agree after " << values.size() << " attempts";
        throw ConvergenceError(os.str(), best);
    }
    return {best, unpack(e, best_z), agreeing(), free_dims};
}

double projected_rld_bound(const HolevoProgram& prog) {
    prog.validate();
    const auto d = static_cast<Eigen::Index>(prog.d_vectors.size());
    RMatrix C(d, prog.J.dim());
    for (Eigen::Index k = 0; k < d; ++k) C.row(k) = prog.d_vectors[k].transpose();
    const CMatrix rld_fisher = C.cast<Complex>() * prog.J.matrix().inverse() * C.transpose().cast<Complex>();
    return rld_bound(HermitianMatrix::hermitian_part(rld_fisher.inverse()), prog.G);
}

HolevoProgram full_qubit_program(double r, const WeightMatrix& G) {
    require_interior(r);
    std::vector<RVector> d(3, RVector::Zero(3));
    d[0][0] = 1.0;
    d[1][1] = 1.0;
    d[2][2] = 1.0 / std::sqrt(1.0 - r * r);
    return {HermitianMatrix(qubit_extension(r)), d, G};
}

HolevoProgram submodel_program(double r, double phi, const WeightMatrix& G) {
    require_interior(r);
    if (!std::isfinite(phi) || phi < 0.0 || phi > std::numbers::pi / 2)
        throw ValidationError("submodel angle must lie in [0, pi/2]");
    std::vector<RVector> d(2, RVector::Zero(3));
    d[0][0] = 1.0;
    d[1][1] = std::cos(phi);
    d[1][2] = std::sin(phi);
    return {HermitianMatrix(qubit_extension(r)), d, G};
}

}  // namespace qcrb
