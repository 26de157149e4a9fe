#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "xstates/linalg.hpp"
#include "xstates/tolerances.hpp"

namespace xstates {

enum class XStateErrorKind {
    TraceViolation,
    PositivityViolation,
    NonFinite,
    NotXStructured,
};

/// Structured rejection from X-state validation. `block` is 1 for the
/// {rho11, rho44, rho14} positivity block, 2 for {rho22, rho33, rho23},
/// 0 when not applicable.
class XStateError : public std::runtime_error {
  public:
    XStateError(XStateErrorKind kind, int block, const std::string& what)
        : std::runtime_error(what), kind_(kind), block_(block) {}

    XStateErrorKind kind() const { return kind_; }
    int block() const { return block_; }

  private:
    XStateErrorKind kind_;
    int block_;
};

/// A two-qubit X-state: diagonal (rho11..rho44) plus anti-diagonal entries
/// rho14 and rho23 (their conjugates are implied by Hermiticity). Basis
/// order is |00>, |01>, |10>, |11>.
///
/// Constructed through make() (validating: unit trace, non-negative
/// diagonal, blockwise positivity) or unchecked() for perturbation tests.
struct XState {
    std::array<double, 4> d{};  // rho11, rho22, rho33, rho44
    Complex c14{};
    Complex c23{};

    static XState make(const std::array<double, 4>& d, Complex c14, Complex c23,
                       const Tolerances& tol = {});
    static XState unchecked(const std::array<double, 4>& d, Complex c14, Complex c23);

    Matrix4c dense() const;
};

/// Succeeds iff every non-X position of m has magnitude <= tol.structural,
/// then validates as XState::make. Hermiticity of m is required.
XState from_dense(const Matrix4c& m, const Tolerances& tol = {});

/// Upper/lower blocks of the P_pi block-diagonal form:
///   upper = [[rho11, rho14], [rho41, rho44]],
///   lower = [[rho33, rho32], [rho23, rho22]].
std::pair<HermitianMatrix2, HermitianMatrix2> block_form(const XState& x);

/// The seven real expansion coefficients of an X-state over alpha_X,
///   rho = (1/4)(I + 2i sum_k h_k lambda_k^alpha),
/// in the canonical order (3, 6, 7, 8, 10, 11, 15).
struct HVector {
    double h3 = 0, h6 = 0, h7 = 0, h8 = 0, h10 = 0, h11 = 0, h15 = 0;

    std::array<double, 7> as_array() const { return {h3, h6, h7, h8, h10, h11, h15}; }
    static HVector from_array(const std::array<double, 7>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
    }
};

HVector h_coefficients(const XState& x);

/// Inverse of h_coefficients; validates positivity of the result.
XState h_to_xstate(const HVector& h, const Tolerances& tol = {});

// --- serialization ---------------------------------------------------------
// JSON: {"d": [r,r,r,r], "c14": {"re": r, "im": r}, "c23": {"re": r, "im": r}}
// CSV row: d1,d2,d3,d4,c14re,c14im,c23re,c23im

std::string xstate_to_json(const XState& x);
XState xstate_from_json(std::string_view text, const Tolerances& tol = {});

std::string xstate_to_csv_row(const XState& x);
XState xstate_from_csv_row(std::string_view line, const Tolerances& tol = {});

}  // namespace xstates
