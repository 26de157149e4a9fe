#include "xstates/separability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xstates {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

SeparabilityVerdict verdict_from_margins(double m31, double m32, double band) {
    SeparabilityVerdict v;
    v.margin = std::min(m31, m32);
    v.separable = v.margin >= -band;
    v.marginal = std::abs(v.margin) <= band;
    const bool viol31 = m31 < -band;
    const bool viol32 = m32 < -band;
    if (viol31 && viol32) v.binding = BindingInequality::Both;
    else if (viol31) v.binding = BindingInequality::Ineq31;
    else if (viol32) v.binding = BindingInequality::Ineq32;
    else v.binding = BindingInequality::None;
    return v;
}
}  // namespace

std::string_view to_string(BindingInequality b) {
    switch (b) {
        case BindingInequality::Ineq31: return "Ineq31";
        case BindingInequality::Ineq32: return "Ineq32";
        case BindingInequality::Both: return "Both";
        case BindingInequality::None: return "None";
    }
    return "?";
}

PptOracleResult ppt_oracle(const XState& x, const Tolerances& tol) {
    // Dense route, structure-agnostic.
    const Matrix4c rho = x.dense();
    Matrix4c pt = Matrix4c::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    pt(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
    const double dense_min = eig4(pt, tol.structural)[3];

    // Blockwise route: the partial transpose of an X-state swaps c14 and c23.
    const XState swapped = XState::unchecked(x.d, x.c23, x.c14);
    const auto [upper, lower] = block_form(swapped);
    const double block_min = std::min(eig2(upper).e_minus, eig2(lower).e_minus);

    if (std::abs(dense_min - block_min) > tol.spectral) {
        std::ostringstream os;
        os << "ppt_oracle: dense and blockwise minima disagree (" << dense_min << " vs "
           << block_min << ")";
        throw LinalgError(os.str());
    }
    return {dense_min, dense_min >= -tol.spectral};
}

SeparabilityVerdict ppt_elementwise(const XState& x, const Tolerances& tol) {
    const double m31 = x.d[0] * x.d[3] - std::norm(x.c23);
    const double m32 = x.d[1] * x.d[2] - std::norm(x.c14);
    return verdict_from_margins(m31, m32, tol.band);
}

SeparabilityVerdict ineq_spectrum_angles(const OrderedSpectrum& r, double phi1, double phi2,
                                         const Tolerances& tol) {
    if (!in_partially_ordered_simplex(r, tol.structural)) {
        throw std::invalid_argument("ineq_spectrum_angles: spectrum outside the simplex");
    }
    auto sq = [](double v) { return v * v; };
    const double gu = r.r1 - r.r2, gl = r.r3 - r.r4;
    const double c1 = sq(std::cos(phi1)), s1 = sq(std::sin(phi1));
    const double c2 = sq(std::cos(phi2)), s2 = sq(std::sin(phi2));
    const double m31 = sq(r.r1 + r.r2) - sq(gu) * c1 - sq(gl) * s2;
    const double m32 = sq(r.r3 + r.r4) - sq(gl) * c2 - sq(gu) * s1;
    return verdict_from_margins(m31, m32, tol.band);
}

bool angle_independence_check(const OrderedSpectrum& r, double phi1, double phi2,
                              double psi1, double psi2, int grid, const Tolerances& tol) {
    if (grid < 1) throw std::invalid_argument("angle_independence_check: grid must be >= 1");
    bool first = true;
    bool reference = false;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            DiagonalizingFrame f{phi1, psi1 + kTwoPi * i / grid, phi2,
                                 psi2 + kTwoPi * j / grid, 0.0};
            const bool sep = ppt_oracle(reconstruct(r, f, tol), tol).separable;
            if (first) {
                reference = sep;
                first = false;
            } else if (sep != reference) {
                return false;
            }
        }
    }
    return true;
}

AbsSepVerdict absolutely_separable(const OrderedSpectrum& r, const Tolerances& tol) {
    if (!in_partially_ordered_simplex(r, tol.structural)) {
        throw std::invalid_argument("absolutely_separable: spectrum outside the simplex");
    }
    auto sq = [](double v) { return v * v; };
    AbsSepVerdict v;
    v.slack1 = 4.0 * r.r3 * r.r4 - sq(r.r1 - r.r2);
    v.slack2 = 4.0 * r.r1 * r.r2 - sq(r.r3 - r.r4);
    v.abs_separable = v.slack1 >= -tol.band && v.slack2 >= -tol.band;
    return v;
}

DegenerateBound degenerate_criterion(double zeta) {
    if (!(zeta >= 0.0 && zeta < 1.0)) {
        throw std::domain_error("degenerate_criterion: zeta must lie in [0, 1)");
    }
    const double raw = 4.0 * zeta / ((1.0 - zeta) * (1.0 - zeta));
    return {std::min(1.0, raw), zeta > kZetaCritical};
}

DegenerateCrossCheckReport degenerate_cross_check(double r1eq, double r3, double r4,
                                                  int phi_steps, const Tolerances& tol) {
    if (phi_steps < 2) throw std::invalid_argument("degenerate_cross_check: phi_steps >= 2");
    const OrderedSpectrum r = make_spectrum(r1eq, r1eq, r3, r4);
    const double zeta = r3 > 0.0 ? r4 / r3 : 0.0;
    const double bound = zeta < 1.0 ? degenerate_criterion(zeta).max_cos2_phi2 : 1.0;

    DegenerateCrossCheckReport rep;
    rep.rows.reserve(static_cast<std::size_t>(phi_steps));
    bool any_disagree = false;
    for (int i = 0; i < phi_steps; ++i) {
        const double phi2 = kPi * i / (phi_steps - 1);
        const double c2 = std::cos(phi2) * std::cos(phi2);
        DegenerateCrossCheckRow row;
        row.zeta = zeta;
        row.phi2 = phi2;
        row.r1 = r1eq;
        row.criterion_separable = c2 <= bound + tol.band;
        // phi1 is irrelevant once r1 = r2; psi angles are gauge.
        const auto oracle = ppt_oracle(reconstruct(r, {0.0, 0.0, phi2, 0.0, 0.0}, tol), tol);
        row.oracle_separable = oracle.separable;
        row.oracle_margin = oracle.min_eigenvalue;
        row.agree = row.criterion_separable == row.oracle_separable;
        if (row.agree) {
            ++rep.agreements;
        } else {
            ++rep.disagreements;
            if (!any_disagree) {
                rep.phi2_disagree_min = rep.phi2_disagree_max = phi2;
                any_disagree = true;
            } else {
                rep.phi2_disagree_min = std::min(rep.phi2_disagree_min, phi2);
                rep.phi2_disagree_max = std::max(rep.phi2_disagree_max, phi2);
            }
        }
        rep.rows.push_back(row);
    }
    rep.agreement_rate = static_cast<double>(rep.agreements) / phi_steps;
    return rep;
}

XState werner_state(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("werner_state: p must lie in [0, 1]");
    const double a = 0.25 * (1.0 + p);
    const double b = 0.25 * (1.0 - p);
    return XState::make({a, b, b, a}, Complex(0.5 * p, 0.0), Complex(0.0, 0.0));
}

XState bell_phi_plus() {
    return XState::make({0.5, 0.0, 0.0, 0.5}, Complex(0.5, 0.0), Complex(0.0, 0.0));
}

double werner_threshold(double bisect_tol) {
    // Separable at p = 0, entangled at p = 1; bisect the PPT boundary.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        if (ppt_elementwise(werner_state(mid)).margin >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace xstates
