#include "xstates/orbit.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace xstates {

bool in_partially_ordered_simplex(const OrderedSpectrum& r, double tol) {
    const auto a = r.as_array();
    for (double x : a) {
        if (!std::isfinite(x) || x < -tol || x > 1.0 + tol) return false;
    }
    if (std::abs(r.r1 + r.r2 + r.r3 + r.r4 - 1.0) > tol) return false;
    return r.r2 <= r.r1 + tol && r.r4 <= r.r3 + tol;
}

OrderedSpectrum make_spectrum(double r1, double r2, double r3, double r4, double tol) {
    OrderedSpectrum r{r1, r2, r3, r4};
    if (!in_partially_ordered_simplex(r, tol)) {
        std::ostringstream os;
        os << "spectrum (" << r1 << ", " << r2 << ", " << r3 << ", " << r4
           << ") is outside the partially ordered simplex";
        throw std::invalid_argument(os.str());
    }
    return r;
}

std::string_view to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::Generic4D: return "Generic4D";
        case OrbitKind::DegenerateUpper2D: return "DegenerateUpper2D";
        case OrbitKind::DegenerateLower2D: return "DegenerateLower2D";
        case OrbitKind::MaximallyMixed0D: return "MaximallyMixed0D";
    }
    return "?";
}

std::array<Matrix4c, 7> tangent_vectors(const XState& x) {
    const Matrix4c rho = x.dense();
    std::array<Matrix4c, 7> t;
    for (int i = 0; i < 7; ++i) {
        t[static_cast<std::size_t>(i)] = commutator(alpha_element(i), rho);
    }
    return t;
}

GramMatrix gram(const XState& x) {
    const auto t = tangent_vectors(x);
    GramMatrix g;
    for (int a = 0; a < 7; ++a) {
        for (int b = a; b < 7; ++b) {
            const Complex tr = (t[static_cast<std::size_t>(a)] *
                                t[static_cast<std::size_t>(b)]).trace();
            const double v = 4.0 * tr.real();
            g(a, b) = v;
            g(b, a) = v;
        }
    }
    return g;
}

std::array<double, 7> gram_spectrum(const GramMatrix& g) {
    Eigen::SelfAdjointEigenSolver<GramMatrix> solver(g, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw LinalgError("gram_spectrum: no convergence");
    std::array<double, 7> out;
    for (int i = 0; i < 7; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(6 - i);
    return out;
}

std::pair<double, double> mu_values(const HVector& h) {
    auto sq = [](double x) { return x * x; };
    const double mu1 = sq(h.h3 + h.h6) + sq(h.h8 + h.h10) + sq(h.h7 + h.h11);
    const double mu2 = sq(h.h3 - h.h6) + sq(h.h8 - h.h10) + sq(h.h7 - h.h11);
    return {mu1, mu2};
}

OrbitClass classify_orbit(const XState& x, const Tolerances& tol) {
    const auto [mu1, mu2] = mu_values(h_coefficients(x));
    // mu = 4 * gap^2, so "gap <= band" is "mu <= 4 band^2".
    const double mu_tol = 4.0 * tol.band * tol.band;
    const bool upper_deg = mu1 <= mu_tol;
    const bool lower_deg = mu2 <= mu_tol;
    OrbitClass c;
    if (upper_deg && lower_deg) {
        c.kind = OrbitKind::MaximallyMixed0D;
        c.isotropy_dim = 7;
    } else if (upper_deg) {
        c.kind = OrbitKind::DegenerateUpper2D;
        c.isotropy_dim = 5;
    } else if (lower_deg) {
        c.kind = OrbitKind::DegenerateLower2D;
        c.isotropy_dim = 5;
    } else {
        c.kind = OrbitKind::Generic4D;
        c.isotropy_dim = 3;
    }
    auto in_band = [&](double mu) { return mu > 0.0 && mu <= mu_tol; };
    c.marginal = in_band(mu1) || in_band(mu2);
    return c;
}

Diagonalization diagonalize(const XState& x) {
    const auto [upper, lower] = block_form(x);
    const Eig2Result eu = eig2(upper);
    const Eig2Result el = eig2(lower);
    Diagonalization out;
    out.spectrum = OrderedSpectrum{eu.e_plus, eu.e_minus, el.e_plus, el.e_minus};
    out.frame = DiagonalizingFrame{eu.phi, eu.psi, el.phi, el.psi, 0.0};
    return out;
}

Matrix4c frame_unitary(const DiagonalizingFrame& f) {
    const Complex phase = std::polar(1.0, f.omega);
    const Matrix2c u = phase * su2_from_angles(f.phi1, f.psi1);
    const Matrix2c v = std::conj(phase) * su2_from_angles(f.phi2, f.psi2);
    return from_blocks(u, v);
}

XState reconstruct(const OrderedSpectrum& r, const DiagonalizingFrame& f,
                   const Tolerances& tol) {
    if (!in_partially_ordered_simplex(r, tol.structural)) {
        throw std::invalid_argument("reconstruct: spectrum outside the partially ordered simplex");
    }
    // U diag(r1, r2) U^dag entrywise, likewise for the lower block.
    const double su = 0.5 * (r.r1 + r.r2), du = 0.5 * (r.r1 - r.r2);
    const double sl = 0.5 * (r.r3 + r.r4), dl = 0.5 * (r.r3 - r.r4);
    const double cu = std::cos(f.phi1), squ = std::sin(f.phi1);
    const double cl = std::cos(f.phi2), sql = std::sin(f.phi2);
    std::array<double, 4> d{};
    d[0] = su + du * cu;                       // rho11
    d[3] = su - du * cu;                       // rho44
    d[2] = sl + dl * cl;                       // rho33
    d[1] = sl - dl * cl;                       // rho22
    const Complex c14 = -du * squ * std::polar(1.0, f.psi1);
    const Complex rho32 = -dl * sql * std::polar(1.0, f.psi2);
    return XState::make(d, c14, std::conj(rho32), tol);
}

}  // namespace xstates
