#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace qextract {

/// Truncated Fock-basis density matrix. Hermitian, unit trace, PSD up to noise.
class DensityMatrix
{
public:
    using Matrix = Eigen::MatrixXcd;

    struct Tolerances
    {
        double hermiticity = 1e-12;
        double trace = 1e-10;
        double eigenvalue = 1e-10;
    };

    explicit DensityMatrix(Matrix elements) : DensityMatrix(std::move(elements), Tolerances{}) {}

    DensityMatrix(Matrix elements, const Tolerances& tol) : rho_(std::move(elements))
    {
        if (rho_.rows() == 0 || rho_.rows() != rho_.cols())
            throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
        if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol.hermiticity)
            throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
        const std::complex<double> tr = rho_.trace();
        if (std::abs(tr - 1.0) > tol.trace)
            throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " + std::to_string(std::abs(tr - 1.0)));
        const Eigen::SelfAdjointEigenSolver<Matrix> eig(rho_, Eigen::EigenvaluesOnly);
        if (eig.eigenvalues().minCoeff() < -tol.eigenvalue)
            throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }

    /// |n><n| in a space of dimension `dim`.
    static DensityMatrix fock(int n, int dim)
    {
        if (n < 0 || dim <= n)
            throw std::invalid_argument("DensityMatrix::fock: need 0 <= n < dim");
        Matrix m = Matrix::Zero(dim, dim);
        m(n, n) = 1.0;
        return DensityMatrix(std::move(m));
    }

    /// |psi><psi| for a normalized amplitude vector.
    static DensityMatrix pure(const Eigen::VectorXcd& psi)
    {
        return DensityMatrix(psi * psi.adjoint());
    }

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Matrix& elements() const { return rho_; }
    std::complex<double> operator()(int m, int n) const { return rho_(m, n); }

    double trace() const { return rho_.trace().real(); }
    double purity() const { return (rho_ * rho_).trace().real(); }

private:
    Matrix rho_;
};

} // namespace qextract
