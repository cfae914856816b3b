#include "qcrb/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qcrb/errors.hpp"

namespace qcrb {

namespace {

void require_dim(const char* what, Eigen::Index a, Eigen::Index b) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw ValidationError(os.str());
    }
}

RMatrix inverse_checked(const RMatrix& m, const char* what) {
    Eigen::FullPivLU<RMatrix> lu(m);
    const double scale = std::max(1.0, max_abs(m));
    if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-14 * std::pow(scale, double(m.rows())))
        throw SingularityError(std::string(what) + ": singular matrix");
    return lu.inverse();
}

CMatrix inverse_checked(const CMatrix& m, const char* what) {
    Eigen::FullPivLU<CMatrix> lu(m);
    const double scale = std::max(1.0, max_abs(m));
    if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-14 * std::pow(scale, double(m.rows())))
        throw SingularityError(std::string(what) + ": singular matrix");
    return lu.inverse();
}

void require_phi(double phi) {
    if (!std::isfinite(phi) || phi < 0.0 || phi > std::numbers::pi / 2)
        throw ValidationError("submodel angle must lie in [0, pi/2]");
}

}  // namespace

WeightMatrix::WeightMatrix(RMatrix m) : m_(std::move(m)) {
    if (m_.dim() > 3) throw ValidationError("weight matrix dimension must be at most 3");
    const RVector values = symmetric_eig(m_).values;
    min_eig_ = values.minCoeff();
    const double scale = values.cwiseAbs().maxCoeff();
    if (min_eig_ < -kPsdTol * scale) throw NotPsdError("weight matrix is not positive semidefinite");
}

void WeightMatrix::require_strict(const char* what) const {
    if (!strictly_pd()) throw ValidationError(std::string(what) + ": weight matrix must be strictly positive definite");
}

RMatrix WeightMatrix::gtilde() const {
    if (dim() != 3) throw ValidationError("block access requires a 3x3 weight");
    return matrix().topLeftCorner(2, 2);
}

Eigen::Vector2d WeightMatrix::g() const {
    if (dim() != 3) throw ValidationError("block access requires a 3x3 weight");
    return matrix().block(0, 2, 2, 1);
}

double WeightMatrix::s() const {
    if (dim() != 3) throw ValidationError("block access requires a 3x3 weight");
    return matrix()(2, 2);
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::full: return "full";
        case Regime::submodel_1: return "submodel-1";
        case Regime::submodel_2: return "submodel-2";
        case Regime::numeric: return "numeric";
    }
    return "unknown";
}

double sld_bound(const SymmetricMatrix& J, const WeightMatrix& G) {
    require_dim("sld_bound", J.dim(), G.dim());
    return (inverse_checked(J.matrix(), "sld_bound") * G.matrix()).trace();
}

double rld_bound(const HermitianMatrix& Jtilde_inv, const WeightMatrix& G) {
    require_dim("rld_bound", Jtilde_inv.dim(), G.dim());
    const RMatrix sg = psd_sqrt(G.symmetric()).matrix();
    const RMatrix re = sg * Jtilde_inv.matrix().real() * sg;
    const RMatrix im = sg * Jtilde_inv.matrix().imag() * sg;
    // i * (real antisymmetric) is Hermitian with the same singular values.
    const CMatrix herm = Complex(0.0, 1.0) * im.cast<Complex>();
    return re.trace() + abs_and_trace_norm(HermitianMatrix::hermitian_part(herm)).trace_norm;
}

double quasi_cr_qubit(const SymmetricMatrix& J, const WeightMatrix& G) {
    require_dim("quasi_cr_qubit", J.dim(), G.dim());
    const RMatrix sg = psd_sqrt(G.symmetric()).matrix();
    const RMatrix inner = sg * inverse_checked(J.matrix(), "quasi_cr_qubit") * sg;
    const double t = psd_sqrt(SymmetricMatrix::symmetric_part(inner)).matrix().trace();
    return t * t;
}

MseFisher optimal_mse_fisher(const HermitianMatrix& Z, const WeightMatrix& G) {
    require_dim("optimal_mse_fisher", Z.dim(), G.dim());
    G.require_strict("optimal_mse_fisher");
    const RMatrix sg = psd_sqrt(G.symmetric()).matrix();
    const RMatrix sg_inv = inverse_checked(sg, "optimal_mse_fisher");
    const RMatrix re = Z.matrix().real();
    const RMatrix im = sg * Z.matrix().imag() * sg;
    const CMatrix herm = Complex(0.0, 1.0) * im.cast<Complex>();
    const RMatrix abs_im = abs_and_trace_norm(HermitianMatrix::hermitian_part(herm)).abs.matrix().real();
    const RMatrix mse = re + sg_inv * abs_im * sg_inv;
    const RMatrix inner = sg * re * sg + abs_im;
    const RMatrix fisher = sg * inverse_checked(inner, "optimal_mse_fisher") * sg;
    return {SymmetricMatrix::symmetric_part(mse), SymmetricMatrix::symmetric_part(fisher)};
}

HolevoFull holevo_full_qubit(double r, const WeightMatrix& G) {
    require_interior(r);
    require_dim("holevo_full_qubit", 3, G.dim());
    G.require_strict("holevo_full_qubit");
    const RMatrix gt = G.gtilde();
    const double value = G.matrix().trace() - r * r * G.s() + 2.0 * r * std::sqrt(std::max(0.0, gt.determinant()));
    auto targets = optimal_mse_fisher(fisher_pair(r).Jtilde_inv, G);
    return {value, targets.mse, targets.fisher};
}

namespace detail {

double submodel_threshold(double r, double phi) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    if (c <= 0.0) return 0.0;
    if (r == 0.0 || s == 0.0) return std::numeric_limits<double>::infinity();
    return c / (r * s * s);
}

double submodel_value(int regime, double r, double phi, const RMatrix& G) {
    const double s = std::sin(phi), c = std::cos(phi);
    const double det = G.determinant();
    if (regime == 1) return G.trace() + 2.0 * r * c * std::sqrt(det) - r * r * s * s * G(0, 0);
    const double cot = c / s;
    return G.trace() + det / G(0, 0) * cot * cot;
}

RMatrix submodel_mse(int regime, double r, double phi, const RMatrix& G) {
    const double s = std::sin(phi), c = std::cos(phi);
    RMatrix v = RMatrix::Identity(2, 2);
    if (regime == 1) {
        v += r * c * std::sqrt(G.determinant()) * G.inverse();
        v(0, 0) -= r * r * s * s;
        return v;
    }
    const double cot2 = (c / s) * (c / s);
    const double ratio = G(0, 1) / G(0, 0);
    v(0, 0) += cot2 * ratio * ratio;
    v(0, 1) -= cot2 * ratio;
    v(1, 0) -= cot2 * ratio;
    v(1, 1) += cot2;
    return v;
}

}  // namespace detail

SymmetricMatrix DiagonalFamily::operator()(double t) const {
    if (!(t > 0.0) || t > t_max) {
        std::ostringstream os;
        os << "diagonal family parameter " << t << " outside (0, " << t_max << "]";
        throw ValidationError(os.str());
    }
    const double s = std::sin(phi), c = std::cos(phi);
    RMatrix v = RMatrix::Identity(2, 2);
    v(0, 0) += r * c / t - r * r * s * s;
    v(1, 1) += r * c * t;
    return SymmetricMatrix(v);
}

HolevoSubmodel holevo_submodel(double r, double phi, const WeightMatrix& G) {
    require_phi(phi);
    require_interior(r);
    require_dim("holevo_submodel", 2, G.dim());
    G.require_strict("holevo_submodel");
    const RMatrix& g = G.matrix();
    const double threshold = detail::submodel_threshold(r, phi);
    const double ratio = g(0, 0) / std::sqrt(g.determinant());
    const int regime = ratio <= threshold ? 1 : 2;
    const double value = detail::submodel_value(regime, r, phi, g);
    const RMatrix v = detail::submodel_mse(regime, r, phi, g);
    return {value, SymmetricMatrix::symmetric_part(v), regime, DiagonalFamily{r, phi, threshold}};
}

BoundsReport full_model_report(double r, const WeightMatrix& G) {
    const auto fp = fisher_pair(r);
    const auto h = holevo_full_qubit(r, G);
    BoundsReport rep;
    rep.c_sld = sld_bound(fp.J, G);
    rep.c_rld = rld_bound(fp.Jtilde_inv, G);
    rep.c_holevo = h.value;
    rep.c_quasi = quasi_cr_qubit(fp.J, G);
    rep.mse_target = h.mse_target;
    rep.fisher_target = h.fisher_target;
    rep.regime = Regime::full;
    return rep;
}

BoundsReport full_model_report(const QubitPoint& p, const WeightMatrix& G) {
    require_dim("full_model_report", 3, G.dim());
    const Eigen::Matrix3d R = bloch_rotation(p.theta);
    const WeightMatrix local(SymmetricMatrix::symmetric_part(R.transpose() * G.matrix() * R).matrix());
    BoundsReport rep = full_model_report(p.r(), local);
    rep.mse_target = SymmetricMatrix::symmetric_part(R * rep.mse_target.matrix() * R.transpose());
    rep.fisher_target = SymmetricMatrix::symmetric_part(R * rep.fisher_target.matrix() * R.transpose());
    return rep;
}

BoundsReport submodel_report(double r, double phi, const WeightMatrix& G) {
    const auto h = holevo_submodel(r, phi, G);
    const double s = std::sin(phi), c = std::cos(phi);
    // Tangent vectors in the SLD-orthonormal frame of the full model.
    RMatrix dmat(2, 3);
    dmat << 1.0, 0.0, 0.0, 0.0, c, s;
    CMatrix Jfull = CMatrix::Identity(3, 3);
    Jfull(0, 1) = Complex(0.0, -r);
    Jfull(1, 0) = Complex(0.0, r);
    const CMatrix rld_fisher = dmat.cast<Complex>() * inverse_checked(Jfull, "submodel_report") *
                               dmat.transpose().cast<Complex>();
    const SymmetricMatrix Jsub(RMatrix::Identity(2, 2));

    BoundsReport rep;
    rep.c_sld = sld_bound(Jsub, G);
    rep.c_rld = rld_bound(HermitianMatrix::hermitian_part(inverse_checked(rld_fisher, "submodel_report")), G);
    rep.c_holevo = h.value;
    rep.c_quasi = quasi_cr_qubit(Jsub, G);
    rep.mse_target = h.mse_target;
    rep.fisher_target = SymmetricMatrix::symmetric_part(inverse_checked(h.mse_target.matrix(), "submodel_report"));
    rep.regime = h.regime == 1 ? Regime::submodel_1 : Regime::submodel_2;
    return rep;
}

}  // namespace qcrb
