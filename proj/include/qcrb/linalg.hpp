#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qcrb {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Hermiticity is checked to 1e-12 scaled by max(1, largest entry).
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(CMatrix m);

    // (M + M^dagger)/2 without validation, for matrices that are Hermitian up to roundoff.
    static HermitianMatrix hermitian_part(const CMatrix& m);

    const CMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    struct NoCheck {};
    HermitianMatrix(CMatrix m, NoCheck) : m_(std::move(m)) {}
    CMatrix m_;
};

class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(RMatrix m);

    static SymmetricMatrix symmetric_part(const RMatrix& m);

    const RMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    struct NoCheck {};
    SymmetricMatrix(RMatrix m, NoCheck) : m_(std::move(m)) {}
    RMatrix m_;
};

struct EigenSystem {
    RVector values;  // ascending
    CMatrix vectors;
};

struct RealEigenSystem {
    RVector values;  // ascending
    RMatrix vectors;
};

EigenSystem hermitian_eig(const HermitianMatrix& h);
RealEigenSystem symmetric_eig(const SymmetricMatrix& s);

// Negative eigenvalues above -1e-10 * max|lambda| are clipped to zero.
HermitianMatrix psd_sqrt(const HermitianMatrix& h);
SymmetricMatrix psd_sqrt(const SymmetricMatrix& s);

struct AbsTrace {
    HermitianMatrix abs;
    double trace_norm;
};

AbsTrace abs_and_trace_norm(const HermitianMatrix& h);

// Jordan product (AB + BA)/2.
CMatrix jordan(const CMatrix& a, const CMatrix& b);

// sum_n w_n (A B)_{nn}; O(d^2).
Complex trace_with_diagonal(const RVector& w, const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& m);
double max_abs(const RMatrix& m);

}  // namespace qcrb
