#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "xstates/tolerances.hpp"

namespace xstates {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

/// Thrown by the dense eigensolver path when the underlying iteration fails
/// to converge, and by hermiticity/finiteness preconditions.
class LinalgError : public std::runtime_error {
  public:
    explicit LinalgError(const std::string& what) : std::runtime_error(what) {}
};

/// 2x2 Hermitian matrix stored as its upper triangle: [[a, b], [conj(b), c]].
/// Hermiticity is structural; only finiteness needs checking.
struct HermitianMatrix2 {
    double a = 0.0;   // top-left
    double c = 0.0;   // bottom-right
    Complex b{0.0, 0.0};  // top-right

    Matrix2c dense() const {
        Matrix2c m;
        m << Complex(a, 0.0), b, std::conj(b), Complex(c, 0.0);
        return m;
    }
};

/// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
///
/// Eigenvalues are e_plus >= e_minus with
///   e_pm = (a+c)/2 +- sqrt(((a-c)/2)^2 + |b|^2).
/// The diagonalizer is special unitary in the canonical chart
///   U = exp(i psi sigma3 / 2) exp(i phi sigma2 / 2),
/// phi in [0, pi], psi in [0, 2pi), so m = U diag(e_plus, e_minus) U^dag.
/// Scalar matrices (a == c, b == 0) get the canonical frame U = I.
struct Eig2Result {
    double e_plus = 0.0;
    double e_minus = 0.0;
    Matrix2c u = Matrix2c::Identity();
    double phi = 0.0;
    double psi = 0.0;
};

Eig2Result eig2(const HermitianMatrix2& m);

/// Builds exp(i psi sigma3/2) exp(i phi sigma2/2) explicitly.
Matrix2c su2_from_angles(double phi, double psi);

/// Entrywise max-norm of any Eigen expression.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

bool is_finite(const Matrix4c& m);

/// Validates ||m - m^dag||_max <= tol and returns m unchanged.
/// Throws LinalgError naming the worst entry otherwise.
const Matrix4c& require_hermitian(const Matrix4c& m, double tol = Tolerances{}.structural);

/// Eigenvalues of a 4x4 Hermitian matrix in descending order, computed with a
/// dense iterative solver that never looks at the X-structure shortcut, so it
/// can serve as an independent oracle. Non-convergence raises LinalgError.
std::array<double, 4> eig4(const Matrix4c& m, double hermiticity_tol = Tolerances{}.structural);

/// Kronecker product of two 2x2 matrices, row-major |ij> convention with the
/// first factor indexing the first qubit.
Matrix4c kron2(const Matrix2c& a, const Matrix2c& b);

/// ab - ba.
Matrix4c commutator(const Matrix4c& a, const Matrix4c& b);

}  // namespace xstates
