#pragma once

#include <cstdint>
#include <vector>

#include "xstates/orbit.hpp"
#include "xstates/separability.hpp"
#include "xstates/xstate.hpp"

namespace xstates {

/// SplitMix64 (Steele, Lea, Flood): the seed advances by the 64-bit golden
/// gamma and each output is a finalizing hash of the counter, so streams are
/// bit-reproducible on every platform. Uniform doubles take the top 53 bits.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::uint64_t state_;
};

enum class Measure { SpectrumUniform, ParamUniformRejection };

struct SamplerConfig {
    Measure measure = Measure::SpectrumUniform;
    std::uint64_t seed = 0;
    int count = 1;  // >= 1
};

/// Deterministic stream of draws for a config; identical configs produce
/// identical streams byte for byte.
class XStateSampler {
  public:
    explicit XStateSampler(const SamplerConfig& cfg);

    /// Uniform on the 3-simplex (normalized exponential spacings), then
    /// sorted within the (r1, r2) and (r3, r4) pairs to land in the
    /// partially ordered simplex.
    OrderedSpectrum next_spectrum();

    /// SpectrumUniform: spectrum plus independent uniform angles
    /// (phi in [0, pi], psi in [0, 2pi)), reconstructed as W D W^dag.
    /// ParamUniformRejection: diagonal on the simplex, then c14 and c23
    /// uniform in their positivity discs |c14|^2 <= d1 d4, |c23|^2 <= d2 d3.
    XState next();

    const SamplerConfig& config() const { return cfg_; }

  private:
    SamplerConfig cfg_;
    SplitMix64 rng_;
};

std::vector<OrderedSpectrum> sample_spectra(const SamplerConfig& cfg);
std::vector<XState> sample_xstates(const SamplerConfig& cfg);

/// Vertices of the partially ordered simplex (a tetrahedron in r-space):
///   A = (1,0,0,0), B = (1/2,1/2,0,0), C = (0,0,1,0), D = (0,0,1/2,1/2),
/// placed at the regular tetrahedron inscribed in the unit cube. The
/// fully ordered sub-simplex ABC'D' has C' = (1/3,1/3,1/3,0) and
/// D' = (1/4,1/4,1/4,1/4).
inline constexpr double kTetraVertices[4][3] = {
    {1.0, 1.0, 1.0},    // A
    {1.0, -1.0, -1.0},  // B
    {-1.0, 1.0, -1.0},  // C
    {-1.0, -1.0, 1.0},  // D
};

struct SimplexPoint {
    OrderedSpectrum r;
    std::array<double, 3> xyz{};  // affine tetrahedron embedding
};

/// Barycentric weights of r over the ABCD vertices:
///   w = (r1 - r2, 2 r2, r3 - r4, 2 r4); non-negative iff r is in the simplex.
std::array<double, 4> barycentric_weights(const OrderedSpectrum& r);

SimplexPoint embed(const OrderedSpectrum& r);

/// Inverse of embed on the simplex (used to validate invertibility).
OrderedSpectrum spectrum_from_weights(const std::array<double, 4>& w);

struct RegionRecord {
    OrderedSpectrum r;
    std::array<double, 3> xyz{};
    bool abs_separable = false;
    bool full_order = false;  // r1 >= r2 >= r3 >= r4 (tetrahedron ABC'D')
};

/// Integer barycentric grid of the ABCD tetrahedron at the given resolution
/// (all weight 4-tuples j/resolution with sum resolution). Resolution 2
/// yields exactly the 4 vertices and 6 edge midpoints. Throws
/// std::invalid_argument for resolution < 2.
std::vector<RegionRecord> region_export(int resolution, const Tolerances& tol = {});

}  // namespace xstates
