#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "test_helpers.hpp"
#include "xstates/orbit.hpp"

using namespace xstates;
using xstates::testing::random_gx;

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

XState max_mixed() { return XState::make({0.25, 0.25, 0.25, 0.25}, {}, {}); }
XState bell() { return XState::make({0.5, 0.0, 0.0, 0.5}, Complex(0.5, 0.0), {}); }

std::array<double, 7> expected_gram_spectrum(const XState& x) {
    const auto [mu1, mu2] = mu_values(h_coefficients(x));
    std::array<double, 7> t{mu1, mu1, mu2, mu2, 0.0, 0.0, 0.0};
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}
}  // namespace

TEST_CASE("tangent vectors vanish exactly where they should") {
    for (const auto& t : tangent_vectors(max_mixed())) CHECK(max_abs(t) == 0.0);

    // Diagonal states commute with the diagonal directions 3, 6, 15.
    const auto td = tangent_vectors(XState::make({0.4, 0.3, 0.2, 0.1}, {}, {}));
    CHECK(max_abs(td[0]) == 0.0);   // lambda_3
    CHECK(max_abs(td[1]) == 0.0);   // lambda_6
    CHECK(max_abs(td[6]) == 0.0);   // lambda_15

    const auto tb = tangent_vectors(bell());
    CHECK(max_abs(tb[6]) == 0.0);   // t_15 = 0
    CHECK(max_abs(tb[0]) > 0.1);    // t_3 != 0
}

TEST_CASE("tangent vectors are Hermitian") {
    SamplerConfig cfg{Measure::ParamUniformRejection, 12, 50};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        for (const auto& t : tangent_vectors(sampler.next())) {
            CHECK(max_abs(Matrix4c(t - t.adjoint())) <= 1e-15);
        }
    }
}

TEST_CASE("gram of the maximally mixed state is zero") {
    CHECK(gram(max_mixed()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gram of the Bell state has spectrum {4,4,0,...}") {
    const auto spec = gram_spectrum(gram(bell()));
    CHECK(spec[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(spec[1] == doctest::Approx(4.0).epsilon(1e-12));
    for (int i = 2; i < 7; ++i) CHECK(std::abs(spec[static_cast<std::size_t>(i)]) <= 1e-12);
}

TEST_CASE("gram spectrum is {mu1,mu1,mu2,mu2,0,0,0} on random states") {
    SamplerConfig cfg{Measure::SpectrumUniform, 2024, 300};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const GramMatrix g = gram(x);
        CHECK(max_abs(Eigen::Matrix<double, 7, 7>(g - g.transpose())) == 0.0);
        const auto spec = gram_spectrum(g);
        const auto target = expected_gram_spectrum(x);
        for (int k = 0; k < 7; ++k) {
            CHECK(std::abs(spec[static_cast<std::size_t>(k)] -
                           target[static_cast<std::size_t>(k)]) <= 1e-10);
        }
        CHECK(spec[6] >= -1e-10);  // PSD
    }
}

TEST_CASE("mu closed forms") {
    CHECK(mu_values({}) == std::pair{0.0, 0.0});
    CHECK(mu_values(h_coefficients(bell())) == std::pair{4.0, 0.0});
    HVector h;
    h.h3 = 1.0;
    h.h6 = -1.0;
    CHECK(mu_values(h) == std::pair{0.0, 4.0});
}

TEST_CASE("mu values are 4x the squared block gaps") {
    SamplerConfig cfg{Measure::ParamUniformRejection, 808, 300};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const auto [mu1, mu2] = mu_values(h_coefficients(x));
        const auto diag = diagonalize(x);
        const double gu = diag.spectrum.r1 - diag.spectrum.r2;
        const double gl = diag.spectrum.r3 - diag.spectrum.r4;
        CHECK(mu1 == doctest::Approx(4.0 * gu * gu).epsilon(1e-10));
        CHECK(mu2 == doctest::Approx(4.0 * gl * gl).epsilon(1e-10));
    }
}

TEST_CASE("orbit classification of named states") {
    const auto mm = classify_orbit(max_mixed());
    CHECK(mm.kind == OrbitKind::MaximallyMixed0D);
    CHECK(mm.isotropy_dim == 7);
    CHECK(orbit_dimension(mm) == 0);

    const auto gen = classify_orbit(XState::make({0.4, 0.3, 0.2, 0.1}, {}, {}));
    CHECK(gen.kind == OrbitKind::Generic4D);
    CHECK(gen.isotropy_dim == 3);
    CHECK(orbit_dimension(gen) == 4);

    // d1 = d2 is not an X-block degeneracy: the blocks pair indices {1,4} and
    // {2,3}, so the block spectra are {0.35, 0.1} and {0.35, 0.2} and both mu
    // values stay away from zero.
    const auto near = classify_orbit(XState::make({0.35, 0.35, 0.2, 0.1}, {}, {}));
    CHECK(near.kind == OrbitKind::Generic4D);
    const auto [mu1, mu2] = mu_values(h_coefficients(XState::make({0.35, 0.35, 0.2, 0.1}, {}, {})));
    CHECK(mu1 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(mu2 == doctest::Approx(0.09).epsilon(1e-12));

    // A true upper-block degeneracy: rho11 = rho44, rho14 = 0.
    const auto up = classify_orbit(XState::make({0.35, 0.2, 0.1, 0.35}, {}, {}));
    CHECK(up.kind == OrbitKind::DegenerateUpper2D);
    CHECK(up.isotropy_dim == 5);
    CHECK(orbit_dimension(up) == 2);

    // Lower-block degeneracy: rho22 = rho33, rho23 = 0 (h6 = h3 branch).
    const XState low = XState::make({0.4, 0.15, 0.15, 0.3}, {}, {});
    const auto lo = classify_orbit(low);
    CHECK(lo.kind == OrbitKind::DegenerateLower2D);
    const HVector hl = h_coefficients(low);
    CHECK(hl.h6 == doctest::Approx(hl.h3).epsilon(1e-14));

    // The Bell state has mu2 = 0 (lower block is empty).
    CHECK(classify_orbit(bell()).kind == OrbitKind::DegenerateLower2D);
}

TEST_CASE("gram rank equals the orbit dimension of the assigned class") {
    SamplerConfig cfg{Measure::SpectrumUniform, 31337, 200};
    XStateSampler sampler(cfg);
    Tolerances tol;
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const auto cls = classify_orbit(x, tol);
        const auto spec = gram_spectrum(gram(x));
        // Numerical zeros of the Gram sit at machine noise on an O(1) scale,
        // so the rank cutoff is the band, not the squared-band mu threshold.
        int rank = 0;
        for (double v : spec) {
            if (v > tol.band) ++rank;
        }
        if (!cls.marginal) CHECK(rank == orbit_dimension(cls));
    }
}

TEST_CASE("mu values and classification are invariant along G_X orbits") {
    SplitMix64 rng(515);
    SamplerConfig cfg{Measure::ParamUniformRejection, 616, 100};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const Matrix4c g = exp_gx(random_gx(rng, 1.0));
        const XState moved = from_dense(Matrix4c(g * x.dense() * g.adjoint()),
                                        Tolerances{1e-11, 1e-10, 1e-9});
        const auto [m1a, m2a] = mu_values(h_coefficients(x));
        const auto [m1b, m2b] = mu_values(h_coefficients(moved));
        CHECK(std::abs(m1a - m1b) <= 1e-9);
        CHECK(std::abs(m2a - m2b) <= 1e-9);
        CHECK(classify_orbit(moved).kind == classify_orbit(x).kind);
    }
}

TEST_CASE("h transforms linearly under conjugation (mu-block norms preserved)") {
    SplitMix64 rng(717);
    SamplerConfig cfg{Measure::ParamUniformRejection, 818, 50};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const XState y = sampler.next();
        const Matrix4c g = exp_gx(random_gx(rng, 1.0));
        const Tolerances tol{1e-10, 1e-10, 1e-9};
        auto conj = [&](const XState& s) {
            return h_coefficients(from_dense(Matrix4c(g * s.dense() * g.adjoint()), tol));
        };
        // Linearity on the midpoint mixture.
        const XState mid = XState::make(
            {0.5 * (x.d[0] + y.d[0]), 0.5 * (x.d[1] + y.d[1]), 0.5 * (x.d[2] + y.d[2]),
             0.5 * (x.d[3] + y.d[3])},
            0.5 * (x.c14 + y.c14), 0.5 * (x.c23 + y.c23));
        const auto hx = conj(x).as_array(), hy = conj(y).as_array(), hm = conj(mid).as_array();
        for (int k = 0; k < 7; ++k) {
            CHECK(std::abs(hm[static_cast<std::size_t>(k)] -
                           0.5 * (hx[static_cast<std::size_t>(k)] +
                                  hy[static_cast<std::size_t>(k)])) <= 1e-9);
        }
    }
}

TEST_CASE("diagonalize named states") {
    const auto db = diagonalize(bell());
    CHECK(db.spectrum.r1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(db.spectrum.r2) <= 1e-15);
    CHECK(std::abs(db.spectrum.r3) <= 1e-15);
    CHECK(std::abs(db.spectrum.r4) <= 1e-15);
    CHECK(db.frame.phi1 == doctest::Approx(0.5 * kPi).epsilon(1e-14));

    // Block-descending diagonal: canonical frame throughout.
    const auto dd = diagonalize(XState::make({0.4, 0.2, 0.3, 0.1}, {}, {}));
    CHECK(dd.frame.phi1 == 0.0);
    CHECK(dd.frame.psi1 == 0.0);
    CHECK(dd.frame.phi2 == 0.0);
    CHECK(dd.frame.psi2 == 0.0);
    CHECK(dd.spectrum.r1 == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(dd.spectrum.r2 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(dd.spectrum.r3 == doctest::Approx(0.3).epsilon(1e-15));  // lower block holds (rho33, rho22)
    CHECK(dd.spectrum.r4 == doctest::Approx(0.2).epsilon(1e-14));

    // Ascending lower block: descending eigenvalue order forces the swap
    // frame phi = pi (still a diagonal frame, psi = 0).
    const auto da = diagonalize(XState::make({0.4, 0.3, 0.2, 0.1}, {}, {}));
    CHECK(da.frame.phi1 == 0.0);
    CHECK(da.frame.phi2 == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(da.frame.psi2 == 0.0);
    CHECK(da.spectrum.r3 == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(da.spectrum.r4 == doctest::Approx(0.2).epsilon(1e-14));

    // Scalar blocks: tie-break rule gives the identity frame.
    const auto dm = diagonalize(max_mixed());
    CHECK(dm.frame.phi1 == 0.0);
    CHECK(dm.frame.phi2 == 0.0);
    CHECK(dm.frame.psi1 == 0.0);
    CHECK(dm.frame.psi2 == 0.0);
}

TEST_CASE("diagonalize round trip and W block-phase pattern") {
    SamplerConfig cfg{Measure::ParamUniformRejection, 919, 300};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const auto [r, f] = diagonalize(x);
        CHECK(in_partially_ordered_simplex(r, 1e-12));

        // Reconstruction through the closed form.
        CHECK(max_abs(Matrix4c(reconstruct(r, f).dense() - x.dense())) <= 1e-10);

        // And through the dense W D W^dag route; the diagonal lives in the
        // block frame, so it is P-conjugated into the original basis.
        const Matrix4c w = frame_unitary(f);
        Matrix4c d = Matrix4c::Zero();
        d(0, 0) = r.r1, d(1, 1) = r.r2, d(2, 2) = r.r3, d(3, 3) = r.r4;
        CHECK(max_abs(Matrix4c(w * (p_pi() * d * p_pi()).eval() * w.adjoint() - x.dense())) <=
              1e-10);

        // W is special unitary and P_pi W P_pi is block diagonal.
        CHECK(std::abs(w.determinant() - Complex(1.0, 0.0)) <= 1e-12);
        const Matrix4c bd = p_pi() * w * p_pi();
        CHECK(max_abs(bd.block<2, 2>(0, 2)) == 0.0);
        CHECK(max_abs(bd.block<2, 2>(2, 0)) == 0.0);
        CHECK(std::abs(bd.block<2, 2>(0, 0).determinant() - Complex(1.0, 0.0)) <= 1e-12);
    }
}

TEST_CASE("reconstruct then diagonalize recovers spectrum and angles") {
    SplitMix64 rng(1021);
    SamplerConfig cfg{Measure::SpectrumUniform, 1122, 200};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const OrderedSpectrum r = sampler.next_spectrum();
        DiagonalizingFrame f;
        f.phi1 = rng.uniform(0.05, kPi - 0.05);
        f.psi1 = rng.uniform(0.0, 2.0 * kPi);
        f.phi2 = rng.uniform(0.05, kPi - 0.05);
        f.psi2 = rng.uniform(0.0, 2.0 * kPi);
        const auto [r2, f2] = diagonalize(reconstruct(r, f));
        CHECK(r2.r1 == doctest::Approx(r.r1).epsilon(1e-11));
        CHECK(r2.r4 == doctest::Approx(r.r4).epsilon(1e-11));
        CHECK(f2.phi1 == doctest::Approx(f.phi1).epsilon(1e-9));
        CHECK(f2.phi2 == doctest::Approx(f.phi2).epsilon(1e-9));
        CHECK(f2.psi1 == doctest::Approx(f.psi1).epsilon(1e-9));
        CHECK(f2.psi2 == doctest::Approx(f.psi2).epsilon(1e-9));
    }
}

TEST_CASE("make_spectrum validates the simplex") {
    CHECK_NOTHROW(make_spectrum(0.4, 0.3, 0.2, 0.1));
    CHECK_THROWS_AS(make_spectrum(0.3, 0.4, 0.2, 0.1), std::invalid_argument);  // r2 > r1
    CHECK_THROWS_AS(make_spectrum(0.4, 0.3, 0.1, 0.2), std::invalid_argument);  // r4 > r3
    CHECK_THROWS_AS(make_spectrum(0.4, 0.4, 0.4, 0.4), std::invalid_argument);  // sum != 1
    CHECK_THROWS_AS(make_spectrum(1.2, -0.2, 0.0, 0.0), std::invalid_argument);
}
