#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "xstates/su4.hpp"
#include "xstates/xstate.hpp"

namespace xstates {

/// Eigenvalue 4-tuple in the partially ordered simplex: sum 1, r2 <= r1,
/// r4 <= r3, all in [0, 1]. (r1, r2) belong to the upper P_pi block,
/// (r3, r4) to the lower one.
struct OrderedSpectrum {
    double r1 = 0, r2 = 0, r3 = 0, r4 = 0;

    std::array<double, 4> as_array() const { return {r1, r2, r3, r4}; }
};

bool in_partially_ordered_simplex(const OrderedSpectrum& r, double tol = Tolerances{}.structural);

/// Validating factory; throws std::invalid_argument outside the simplex.
OrderedSpectrum make_spectrum(double r1, double r2, double r3, double r4,
                              double tol = Tolerances{}.structural);

/// Angles of the blockwise diagonalizer W = P_pi diag(e^{iw} U, e^{-iw} V) P_pi
/// with U = e^{i psi1 s3/2} e^{i phi1 s2/2}, V = e^{i psi2 s3/2} e^{i phi2 s2/2}.
/// omega is pure gauge (isotropy direction lambda_15) and is pinned to 0.
struct DiagonalizingFrame {
    double phi1 = 0, psi1 = 0, phi2 = 0, psi2 = 0;
    double omega = 0;
};

enum class OrbitKind { Generic4D, DegenerateUpper2D, DegenerateLower2D, MaximallyMixed0D };

std::string_view to_string(OrbitKind kind);

struct OrbitClass {
    OrbitKind kind = OrbitKind::Generic4D;
    int isotropy_dim = 3;  // 3 generic, 5 degenerate, 7 maximally mixed
    bool marginal = false;  // classification depended on the tolerance band
};

inline constexpr int orbit_dimension(const OrbitClass& c) { return 7 - c.isotropy_dim; }

/// Tangent vectors t_k = [alpha_k, rho] in the canonical alpha_X order.
/// All are Hermitian (commutator of anti-Hermitian with Hermitian).
std::array<Matrix4c, 7> tangent_vectors(const XState& x);

using GramMatrix = Eigen::Matrix<double, 7, 7>;

/// Gram matrix of the tangent vectors. The scale is calibrated so that the
/// nonzero eigenvalues equal the mu closed forms exactly (the Bell state
/// pins the constant at 4 * Tr(t_k t_l)); the spectrum is then
/// {mu1, mu1, mu2, mu2, 0, 0, 0}.
GramMatrix gram(const XState& x);

/// Eigenvalues of a Gram matrix in descending order.
std::array<double, 7> gram_spectrum(const GramMatrix& g);

/// mu1 = (h3+h6)^2 + (h8+h10)^2 + (h7+h11)^2 and the sign-flipped companion.
/// Identically mu1 = 4 (r1-r2)^2 and mu2 = 4 (r3-r4)^2 in terms of the block
/// spectra, which ties orbit type to spectral degeneracy.
std::pair<double, double> mu_values(const HVector& h);

/// Orbit type from the vanishing pattern of (mu1, mu2). A block gap within
/// (0, band] is classified degenerate and flagged marginal.
OrbitClass classify_orbit(const XState& x, const Tolerances& tol = {});

struct Diagonalization {
    OrderedSpectrum spectrum;
    DiagonalizingFrame frame;
};

/// Blockwise eigendecomposition: rho = W diag(r1, r2, r3, r4)-blocks W^dag.
Diagonalization diagonalize(const XState& x);

/// The unitary W for a frame.
Matrix4c frame_unitary(const DiagonalizingFrame& f);

/// W diag(r) W^dag assembled entrywise (exact X structure, no dense dust).
XState reconstruct(const OrderedSpectrum& r, const DiagonalizingFrame& f,
                   const Tolerances& tol = {});

}  // namespace xstates
