#include "xstates/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace xstates {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;
}

XStateSampler::XStateSampler(const SamplerConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg.count < 1) throw std::invalid_argument("sampler: count must be >= 1");
}

OrderedSpectrum XStateSampler::next_spectrum() {
    double e[4];
    double sum = 0.0;
    for (double& x : e) {
        // Exponential spacings; uniform01 is in [0, 1) so 1-u is in (0, 1].
        x = -std::log(1.0 - rng_.uniform01());
        sum += x;
    }
    for (double& x : e) x /= sum;
    OrderedSpectrum r;
    r.r1 = std::max(e[0], e[1]);
    r.r2 = std::min(e[0], e[1]);
    r.r3 = std::max(e[2], e[3]);
    r.r4 = std::min(e[2], e[3]);
    return r;
}

XState XStateSampler::next() {
    if (cfg_.measure == Measure::SpectrumUniform) {
        const OrderedSpectrum r = next_spectrum();
        DiagonalizingFrame f;
        f.phi1 = rng_.uniform(0.0, kPi);
        f.psi1 = rng_.uniform(0.0, kTwoPi);
        f.phi2 = rng_.uniform(0.0, kPi);
        f.psi2 = rng_.uniform(0.0, kTwoPi);
        return reconstruct(r, f);
    }
    // ParamUniformRejection: diagonal on the simplex, off-diagonals uniform
    // in the closed discs that keep each block positive semi-definite.
    double e[4];
    double sum = 0.0;
    for (double& x : e) {
        x = -std::log(1.0 - rng_.uniform01());
        sum += x;
    }
    std::array<double, 4> d{};
    for (int i = 0; i < 4; ++i) d[static_cast<std::size_t>(i)] = e[i] / sum;
    auto disc = [&](double radius_sq) {
        const double rad = std::sqrt(radius_sq * rng_.uniform01());
        const double theta = rng_.uniform(0.0, kTwoPi);
        return std::polar(rad, theta);
    };
    const Complex c14 = disc(d[0] * d[3]);
    const Complex c23 = disc(d[1] * d[2]);
    return XState::make(d, c14, c23);
}

std::vector<OrderedSpectrum> sample_spectra(const SamplerConfig& cfg) {
    XStateSampler s(cfg);
    std::vector<OrderedSpectrum> out;
    out.reserve(static_cast<std::size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i) out.push_back(s.next_spectrum());
    return out;
}

std::vector<XState> sample_xstates(const SamplerConfig& cfg) {
    XStateSampler s(cfg);
    std::vector<XState> out;
    out.reserve(static_cast<std::size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i) out.push_back(s.next());
    return out;
}

std::array<double, 4> barycentric_weights(const OrderedSpectrum& r) {
    return {r.r1 - r.r2, 2.0 * r.r2, r.r3 - r.r4, 2.0 * r.r4};
}

OrderedSpectrum spectrum_from_weights(const std::array<double, 4>& w) {
    OrderedSpectrum r;
    r.r1 = w[0] + 0.5 * w[1];
    r.r2 = 0.5 * w[1];
    r.r3 = w[2] + 0.5 * w[3];
    r.r4 = 0.5 * w[3];
    return r;
}

SimplexPoint embed(const OrderedSpectrum& r) {
    const auto w = barycentric_weights(r);
    SimplexPoint p;
    p.r = r;
    for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (int v = 0; v < 4; ++v) acc += w[static_cast<std::size_t>(v)] * kTetraVertices[v][c];
        p.xyz[static_cast<std::size_t>(c)] = acc;
    }
    return p;
}

std::vector<RegionRecord> region_export(int resolution, const Tolerances& tol) {
    if (resolution < 2) throw std::invalid_argument("region_export: resolution must be >= 2");
    std::vector<RegionRecord> out;
    const double n = resolution;
    for (int a = 0; a <= resolution; ++a) {
        for (int b = 0; b <= resolution - a; ++b) {
            for (int c = 0; c <= resolution - a - b; ++c) {
                const int dd = resolution - a - b - c;
                const std::array<double, 4> w = {a / n, b / n, c / n, dd / n};
                const OrderedSpectrum r = spectrum_from_weights(w);
                RegionRecord rec;
                rec.r = r;
                rec.xyz = embed(r).xyz;
                rec.abs_separable = absolutely_separable(r, tol).abs_separable;
                rec.full_order = r.r2 >= r.r3 - tol.structural;
                out.push_back(rec);
            }
        }
    }
    return out;
}

}  // namespace xstates
