#include "qcrb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcrb/errors.hpp"

namespace qcrb {

namespace {

template <class M>
void require_square_finite(const M& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
        throw ValidationError(os.str());
    }
    if (!m.allFinite()) throw ValidationError(std::string(what) + ": non-finite entry");
}

void check_psd(const RVector& values, const char* what) {
    const double scale = values.cwiseAbs().maxCoeff();
    if (values.size() > 0 && values.minCoeff() < -kPsdTol * scale) {
        std::ostringstream os;
        os << what << ": not positive semidefinite (min eigenvalue " << values.minCoeff() << ")";
        throw NotPsdError(os.str());
    }
}

}  // namespace

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const RMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

HermitianMatrix::HermitianMatrix(CMatrix m) : m_(std::move(m)) {
    require_square_finite(m_, "HermitianMatrix");
    const double tol = kHermitianTol * std::max(1.0, max_abs(m_));
    if (max_abs(CMatrix(m_ - m_.adjoint())) > tol) throw ValidationError("HermitianMatrix: matrix is not Hermitian");
    m_ = 0.5 * (m_ + m_.adjoint()).eval();
}

HermitianMatrix HermitianMatrix::hermitian_part(const CMatrix& m) {
    require_square_finite(m, "HermitianMatrix");
    return HermitianMatrix(CMatrix(0.5 * (m + m.adjoint())), NoCheck{});
}

SymmetricMatrix::SymmetricMatrix(RMatrix m) : m_(std::move(m)) {
    require_square_finite(m_, "SymmetricMatrix");
    const double tol = kHermitianTol * std::max(1.0, max_abs(m_));
    if (max_abs(RMatrix(m_ - m_.transpose())) > tol) throw ValidationError("SymmetricMatrix: matrix is not symmetric");
    m_ = 0.5 * (m_ + m_.transpose()).eval();
}

SymmetricMatrix SymmetricMatrix::symmetric_part(const RMatrix& m) {
    require_square_finite(m, "SymmetricMatrix");
    return SymmetricMatrix(RMatrix(0.5 * (m + m.transpose())), NoCheck{});
}

EigenSystem hermitian_eig(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.matrix());
    if (es.info() != Eigen::Success) throw SingularityError("hermitian_eig: eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

RealEigenSystem symmetric_eig(const SymmetricMatrix& s) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(s.matrix());
    if (es.info() != Eigen::Success) throw SingularityError("symmetric_eig: eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

HermitianMatrix psd_sqrt(const HermitianMatrix& h) {
    auto es = hermitian_eig(h);
    check_psd(es.values, "psd_sqrt");
    RVector root = es.values.cwiseMax(0.0).cwiseSqrt();
    return HermitianMatrix::hermitian_part(es.vectors * root.asDiagonal() * es.vectors.adjoint());
}

SymmetricMatrix psd_sqrt(const SymmetricMatrix& s) {
    auto es = symmetric_eig(s);
    check_psd(es.values, "psd_sqrt");
    RVector root = es.values.cwiseMax(0.0).cwiseSqrt();
    return SymmetricMatrix::symmetric_part(es.vectors * root.asDiagonal() * es.vectors.transpose());
}

AbsTrace abs_and_trace_norm(const HermitianMatrix& h) {
    auto es = hermitian_eig(h);
    RVector a = es.values.cwiseAbs();
    return {HermitianMatrix::hermitian_part(es.vectors * a.asDiagonal() * es.vectors.adjoint()), a.sum()};
}

CMatrix jordan(const CMatrix& a, const CMatrix& b) { return 0.5 * (a * b + b * a); }

Complex trace_with_diagonal(const RVector& w, const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows() || a.rows() < w.size() || b.cols() < w.size())
        throw ValidationError("trace_with_diagonal: shape mismatch");
    Complex acc = 0.0;
    for (Eigen::Index n = 0; n < w.size(); ++n) {
        if (w[n] == 0.0) continue;
        acc += w[n] * a.row(n).transpose().cwiseProduct(b.col(n)).sum();
    }
    return acc;
}

}  // namespace qcrb
