#pragma once

#include <string>

#include "qcrb/linalg.hpp"
#include "qcrb/qubit.hpp"

namespace qcrb {

class WeightMatrix {
public:
    explicit WeightMatrix(RMatrix m);
    static WeightMatrix identity(int dim) { return WeightMatrix(RMatrix::Identity(dim, dim)); }

    const RMatrix& matrix() const { return m_.matrix(); }
    const SymmetricMatrix& symmetric() const { return m_; }
    int dim() const { return static_cast<int>(m_.dim()); }
    bool strictly_pd() const { return min_eig_ > kPsdTol; }
    double min_eigenvalue() const { return min_eig_; }
    void require_strict(const char* what) const;

    // Block form [[Gt, g], [g^T, s]] of a 3x3 weight.
    RMatrix gtilde() const;
    Eigen::Vector2d g() const;
    double s() const;

private:
    SymmetricMatrix m_;
    double min_eig_ = 0.0;
};

enum class Regime { full, submodel_1, submodel_2, numeric };
std::string to_string(Regime r);

struct BoundsReport {
    double c_sld = 0.0;
    double c_rld = 0.0;
    double c_holevo = 0.0;
    double c_quasi = 0.0;
    SymmetricMatrix mse_target;
    SymmetricMatrix fisher_target;
    Regime regime = Regime::full;
};

double sld_bound(const SymmetricMatrix& J, const WeightMatrix& G);
double rld_bound(const HermitianMatrix& Jtilde_inv, const WeightMatrix& G);
double quasi_cr_qubit(const SymmetricMatrix& J, const WeightMatrix& G);

struct MseFisher {
    SymmetricMatrix mse;
    SymmetricMatrix fisher;
};

MseFisher optimal_mse_fisher(const HermitianMatrix& Z, const WeightMatrix& G);

struct HolevoFull {
    double value;
    SymmetricMatrix mse_target;
    SymmetricMatrix fisher_target;
};

HolevoFull holevo_full_qubit(double r, const WeightMatrix& G);

// Diagonal MSE matrices attainable by the submodel, indexed by t in (0, t_max].
struct DiagonalFamily {
    double r;
    double phi;
    double t_max;
    SymmetricMatrix operator()(double t) const;
};

struct HolevoSubmodel {
    double value;
    SymmetricMatrix mse_target;
    int regime;
    DiagonalFamily diagonal_family;
};

HolevoSubmodel holevo_submodel(double r, double phi, const WeightMatrix& G);

BoundsReport full_model_report(double r, const WeightMatrix& G);
BoundsReport full_model_report(const QubitPoint& p, const WeightMatrix& G);
BoundsReport submodel_report(double r, double phi, const WeightMatrix& G);

namespace detail {
// Both regime formulas, valid on either side of the threshold for continuity checks.
double submodel_value(int regime, double r, double phi, const RMatrix& G);
RMatrix submodel_mse(int regime, double r, double phi, const RMatrix& G);
double submodel_threshold(double r, double phi);
}  // namespace detail

}  // namespace qcrb
