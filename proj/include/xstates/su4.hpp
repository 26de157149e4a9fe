#pragma once

#include <array>
#include <vector>

#include "xstates/linalg.hpp"

namespace xstates {

// ---------------------------------------------------------------------------
// su(4) basis
//
// lambda_1..lambda_6  = (i/2) {sigma_x0, sigma_y0, sigma_z0, sigma_0x, sigma_0y, sigma_0z}
// lambda_7..lambda_15 = (i/2) {sigma_xx, sigma_xy, sigma_xz, sigma_yx, sigma_yy,
//                              sigma_yz, sigma_zx, sigma_zy, sigma_zz}
// with sigma_mn = sigma_m (x) sigma_n. All fifteen are anti-Hermitian and
// satisfy Tr(lambda_j lambda_k) = -delta_jk.
//
// The Cartan split is l = span{lambda_1..6}, p = span{lambda_7..15}.
// ---------------------------------------------------------------------------

const Matrix2c& pauli(int mu);  // 0 -> I, 1 -> sigma_x, 2 -> sigma_y, 3 -> sigma_z

/// lambda_k for k in 1..15; throws std::out_of_range otherwise. The matrices
/// are generated once from the tensor-product definition and cross-checked
/// at startup against an independently hard-coded list.
const Matrix4c& lambda(int k);

/// Permutation swapping basis indices 2 and 4 (1-based); P^2 = I, P = P^T.
/// Conjugation by it carries an X-matrix to block-diagonal form.
const Matrix4c& p_pi();

/// The X-state subalgebra alpha_X = {lambda_15, lambda_10, lambda_6,
/// -lambda_11, lambda_8, lambda_3, lambda_7}. Throughout the library,
/// 7-component coefficient vectors use the canonical index order
/// (3, 6, 7, 8, 10, 11, 15); the sign flag below applies the -lambda_11
/// convention without mutating the stored basis.
inline constexpr std::array<int, 7> kAlphaOrder = {3, 6, 7, 8, 10, 11, 15};

inline constexpr double alpha_sign(int k) { return k == 11 ? -1.0 : 1.0; }

/// alpha_sign(k) * lambda(k) for the i-th element of kAlphaOrder.
Matrix4c alpha_element(int i);

/// Expected value of [lambda_row, lambda_col] as a signed basis index
/// (+k for +lambda_k, -k for -lambda_k, 0 for a vanishing commutator).
/// Source: the su(4) commutator table, with the one antisymmetry-violating
/// printed cell ([lambda_5, lambda_15]) repaired to -lambda_13.
int expected_commutator(int row, int col);

struct TableMismatch {
    int row = 0;
    int col = 0;
    int expected = 0;  // signed index, 0 = zero matrix
    int got = 0;
    double deviation = 0.0;
};

struct CommutatorTableReport {
    bool pass = false;
    int checked = 0;
    int matched = 0;
    double max_deviation = 0.0;
    std::vector<TableMismatch> mismatches;
};

/// Evaluates all 225 commutators numerically and matches each against the
/// tabulated entry. Passes iff every pair matches with deviation <= tol.
CommutatorTableReport verify_commutator_table(double tol = 1e-12);

struct CartanViolation {
    int row = 0;
    int col = 0;
    double residual = 0.0;  // coefficient mass outside the allowed span
};

struct CartanReport {
    bool pass = false;
    double max_residual = 0.0;
    std::vector<CartanViolation> violations;
};

/// Projects each pairwise commutator onto the basis via the trace inner
/// product and asserts [l,l] in l, [p,l] in p, [p,p] in l.
CartanReport verify_cartan_split(double tol = 1e-12);

// ---------------------------------------------------------------------------
// Pseudospins: S_z = i(lambda_3 + lambda_6), S_pm = pm(lambda_8 + lambda_10)
// + i(lambda_7 - lambda_11); T_z = i(lambda_3 - lambda_6), T_pm =
// mp(lambda_8 - lambda_10) + i(lambda_7 + lambda_11). Each triple closes an
// su(2) and the two commute with each other.
// ---------------------------------------------------------------------------

struct PseudospinGenerators {
    Matrix4c s_z, s_plus, s_minus;
    Matrix4c t_z, t_plus, t_minus;
    // Cartesian triples {(X+ + X-)/2, i(X+ - X-)/2, X_z}.
    std::array<Matrix4c, 3> s;
    std::array<Matrix4c, 3> t;
};

PseudospinGenerators pseudospin_generators();

struct PseudospinReport {
    bool pass = false;
    double max_residual = 0.0;
    std::vector<std::string> failures;
};

/// Checks [S_z, S_pm] = pm 2 S_pm, [S_+, S_-] = 4 S_z, the same for T, and
/// that every S commutes with every T.
PseudospinReport verify_pseudospin(double tol = 1e-12);

// ---------------------------------------------------------------------------
// The global group G_X = exp(g_X)
// ---------------------------------------------------------------------------

/// Coefficients over alpha_X in the canonical order; v11 multiplies
/// -lambda_11 per the subalgebra's sign convention.
struct GxCoefficients {
    double v3 = 0.0, v6 = 0.0, v7 = 0.0, v8 = 0.0, v10 = 0.0, v11 = 0.0, v15 = 0.0;

    std::array<double, 7> as_array() const { return {v3, v6, v7, v8, v10, v11, v15}; }
    static GxCoefficients from_array(const std::array<double, 7>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
    }
};

/// exp(sum_k v_k * alpha_k), a special unitary that preserves X-structure
/// under conjugation. Throws LinalgError on non-finite coefficients.
Matrix4c exp_gx(const GxCoefficients& v);

/// The local subgroup element with per-qubit angles:
///   exp(i phi1 sigma3/2) (x) exp(i phi2 sigma3/2) = exp(phi1 lambda_3 + phi2 lambda_6).
Matrix4c local_group_element(double phi1, double phi2);

/// The two SU(2) tensor factors of local_group_element.
std::pair<Matrix2c, Matrix2c> local_group_factors(double phi1, double phi2);

struct PpiIdentity {
    int k = 0;           // basis index (the alpha_X sign is applied)
    double deviation = 0.0;
    bool pass = false;
};

struct PpiConjugationReport {
    bool pass = false;
    double max_deviation = 0.0;
    std::array<PpiIdentity, 7> identities{};
};

/// Verifies the block-diagonal forms of P_pi a P_pi for every alpha_X
/// element a against the hard-coded list
///   lambda_3 -> (i/2) diag(sigma3, -sigma3),  lambda_6 -> (i/2) diag(sigma3, sigma3),
///   lambda_7 -> (i/2) diag(sigma1, sigma1),   lambda_8 -> (i/2) diag(sigma2, sigma2),
///   lambda_10 -> (i/2) diag(sigma2, -sigma2), -lambda_11 -> (i/2) diag(sigma1, -sigma1),
///   lambda_15 -> (i/2) diag(I, -I).
/// These are permutations of exact constants, so the tolerance is tight.
PpiConjugationReport ppi_conjugation_table(double tol = 1e-15);

/// Assembles P_pi * blockdiag(upper, lower) * P_pi.
Matrix4c from_blocks(const Matrix2c& upper, const Matrix2c& lower);

}  // namespace xstates
