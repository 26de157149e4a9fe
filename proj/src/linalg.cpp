#include "xstates/linalg.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace xstates {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Matrix2c su2_from_angles(double phi, double psi) {
    const double ch = std::cos(0.5 * phi);
    const double sh = std::sin(0.5 * phi);
    const Complex ep = std::polar(1.0, 0.5 * psi);
    Matrix2c u;
    u << ep * ch, ep * sh, -std::conj(ep) * sh, std::conj(ep) * ch;
    return u;
}

Eig2Result eig2(const HermitianMatrix2& m) {
    if (!std::isfinite(m.a) || !std::isfinite(m.c) || !std::isfinite(m.b.real()) ||
        !std::isfinite(m.b.imag())) {
        throw LinalgError("eig2: non-finite entry");
    }
    Eig2Result r;
    const double mean = 0.5 * (m.a + m.c);
    const double half_gap = 0.5 * (m.a - m.c);
    const double babs = std::abs(m.b);
    const double rad = std::hypot(half_gap, babs);
    r.e_plus = mean + rad;
    r.e_minus = mean - rad;
    // atan2 with non-negative first argument lands in [0, pi]; the b == 0,
    // a == c corner gives atan2(0, 0) = 0, i.e. the canonical identity frame.
    r.phi = std::atan2(2.0 * babs, m.a - m.c);
    if (babs > 0.0) {
        r.psi = std::arg(-m.b);
        if (r.psi < 0.0) r.psi += kTwoPi;
        if (r.psi >= kTwoPi) r.psi = 0.0;
    } else {
        r.psi = 0.0;
    }
    r.u = su2_from_angles(r.phi, r.psi);
    return r;
}

bool is_finite(const Matrix4c& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    return true;
}

const Matrix4c& require_hermitian(const Matrix4c& m, double tol) {
    if (!is_finite(m)) throw LinalgError("require_hermitian: non-finite entry");
    const double dev = max_abs(m - m.adjoint());
    if (dev > tol) {
        std::ostringstream os;
        os << "require_hermitian: ||m - m^dag||_max = " << dev << " > " << tol;
        throw LinalgError(os.str());
    }
    return m;
}

std::array<double, 4> eig4(const Matrix4c& m, double hermiticity_tol) {
    require_hermitian(m, hermiticity_tol);
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw LinalgError("eig4: eigensolver failed to converge");
    }
    const auto ev = solver.eigenvalues();  // ascending
    return {ev(3), ev(2), ev(1), ev(0)};
}

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
    Matrix4c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Matrix4c commutator(const Matrix4c& a, const Matrix4c& b) { return a * b - b * a; }

}  // namespace xstates
