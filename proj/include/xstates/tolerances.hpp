#pragma once

namespace xstates {

/// Numerical tolerances used across the library. The defaults are the ones
/// every test and CLI run is calibrated against; override with care.
struct Tolerances {
    /// Structural checks: hermiticity, unit trace, unitarity, X-zero positions.
    double structural = 1e-12;
    /// Spectral agreement: eigenvalue cross-checks, reconstruction error.
    double spectral = 1e-10;
    /// Boundary classification band: verdicts within this distance of a
    /// degeneracy or separability boundary are flagged marginal, never
    /// silently rounded.
    double band = 1e-9;
};

}  // namespace xstates
