#pragma once

#include <string_view>
#include <vector>

#include "xstates/orbit.hpp"
#include "xstates/xstate.hpp"

namespace xstates {

/// Which of the two partial-transpose positivity inequalities is violated.
/// Ineq31 is the (r1-r2)^2 cos^2(phi1) + (r3-r4)^2 sin^2(phi2) <= (r1+r2)^2
/// constraint (elementwise: d1*d4 >= |c23|^2); Ineq32 is its companion
/// (elementwise: d2*d3 >= |c14|^2). None means the state is separable.
enum class BindingInequality { Ineq31, Ineq32, Both, None };

std::string_view to_string(BindingInequality b);

struct SeparabilityVerdict {
    bool separable = false;
    double margin = 0.0;  // lesser slack; negative means violated
    BindingInequality binding = BindingInequality::None;
    bool marginal = false;  // |margin| <= band
};

struct AbsSepVerdict {
    bool abs_separable = false;
    double slack1 = 0.0;  // 4 r3 r4 - (r1-r2)^2
    double slack2 = 0.0;  // 4 r1 r2 - (r3-r4)^2
};

struct PptOracleResult {
    double min_eigenvalue = 0.0;
    bool separable = false;
};

/// Dense Peres-Horodecki oracle: builds rho^T2 via <ij|rho^T2|kl> = <il|rho|kj>,
/// eigensolves it, and returns the minimum eigenvalue. For an X-state the
/// partial transpose swaps rho14 and rho23 across the blocks; the equivalent
/// blockwise route is evaluated as well and the two must agree (a mismatch
/// beyond the spectral tolerance throws, never passes silently).
PptOracleResult ppt_oracle(const XState& x, const Tolerances& tol = {});

/// Closed-form X-state PPT verdict:
///   margin = min(d1*d4 - |c23|^2, d2*d3 - |c14|^2).
SeparabilityVerdict ppt_elementwise(const XState& x, const Tolerances& tol = {});

/// The two spectrum-plus-angles inequalities evaluated directly:
///   (r1-r2)^2 cos^2 phi1 + (r3-r4)^2 sin^2 phi2 <= (r1+r2)^2,
///   (r3-r4)^2 cos^2 phi2 + (r1-r2)^2 sin^2 phi1 <= (r3+r4)^2.
/// Separable iff both hold; margin is the lesser slack.
SeparabilityVerdict ineq_spectrum_angles(const OrderedSpectrum& r, double phi1, double phi2,
                                         const Tolerances& tol = {});

/// Sweeps psi1, psi2 over a grid x grid lattice anchored at the given base
/// angles; the oracle verdict on the reconstructed state must not move.
/// Returns whether the invariance held.
bool angle_independence_check(const OrderedSpectrum& r, double phi1, double phi2,
                              double psi1, double psi2, int grid = 8,
                              const Tolerances& tol = {});

/// Absolute separability: the whole orbit is separable iff
///   (r1-r2)^2 <= 4 r3 r4  and  (r3-r4)^2 <= 4 r1 r2.
AbsSepVerdict absolutely_separable(const OrderedSpectrum& r, const Tolerances& tol = {});

struct DegenerateBound {
    double max_cos2_phi2 = 0.0;  // min(1, 4 zeta / (1-zeta)^2)
    bool unconstrained = false;  // zeta > zeta* = 3 - 2 sqrt(2)
};

inline constexpr double kZetaCritical = 0.17157287525380990240;  // 3 - 2 sqrt(2)

/// The degenerate-orbit criterion (upper block degenerate, zeta = r4/r3 < 1):
/// cos^2 phi2 <= 4 zeta / (1-zeta)^2. Throws std::domain_error for zeta
/// outside [0, 1).
DegenerateBound degenerate_criterion(double zeta);

struct DegenerateCrossCheckRow {
    double zeta = 0.0;
    double phi2 = 0.0;
    double r1 = 0.0;
    bool criterion_separable = false;
    bool oracle_separable = false;
    double oracle_margin = 0.0;
    bool agree = false;
};

struct DegenerateCrossCheckReport {
    std::vector<DegenerateCrossCheckRow> rows;
    int agreements = 0;
    int disagreements = 0;
    double agreement_rate = 0.0;
    double phi2_disagree_min = 0.0;  // extent of the disagreement region
    double phi2_disagree_max = 0.0;
};

/// Sweeps phi2 over [0, pi] for the degenerate spectrum (r1eq, r1eq, r3, r4)
/// and compares the closed-form criterion against the dense oracle. The report
/// quantifies agreement; it never alters either side.
DegenerateCrossCheckReport degenerate_cross_check(double r1eq, double r3, double r4,
                                                  int phi_steps = 64,
                                                  const Tolerances& tol = {});

/// p |Phi+><Phi+| + (1-p) I/4.
XState werner_state(double p);

/// The Bell Phi+ projector as an X-state.
XState bell_phi_plus();

/// Bisection of the Werner PPT boundary; converges to 1/3.
double werner_threshold(double bisect_tol = 1e-10);

}  // namespace xstates
