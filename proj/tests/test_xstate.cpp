#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "xstates/su4.hpp"
#include "xstates/xstate.hpp"

using namespace xstates;

namespace {
XState max_mixed() { return XState::make({0.25, 0.25, 0.25, 0.25}, {}, {}); }
XState bell() { return XState::make({0.5, 0.0, 0.0, 0.5}, Complex(0.5, 0.0), {}); }
}  // namespace

TEST_CASE("make accepts the maximally mixed state and the Bell projector") {
    CHECK_NOTHROW(max_mixed());
    CHECK_NOTHROW(bell());  // pure-state boundary: d1 d4 = |c14|^2 exactly
}

TEST_CASE("make rejects positivity violations naming the block") {
    try {
        XState::make({0.5, 0.0, 0.0, 0.5}, Complex(0.6, 0.0), {});
        FAIL("expected XStateError");
    } catch (const XStateError& e) {
        CHECK(e.kind() == XStateErrorKind::PositivityViolation);
        CHECK(e.block() == 1);
    }
    try {
        XState::make({0.25, 0.25, 0.25, 0.25}, {}, Complex(0.3, 0.0));
        FAIL("expected XStateError");
    } catch (const XStateError& e) {
        CHECK(e.kind() == XStateErrorKind::PositivityViolation);
        CHECK(e.block() == 2);
    }
}

TEST_CASE("make rejects trace violations, negatives and non-finite input") {
    CHECK_THROWS_AS(XState::make({0.3, 0.3, 0.3, 0.3}, {}, {}), XStateError);
    CHECK_THROWS_AS(XState::make({-0.1, 0.4, 0.4, 0.3}, {}, {}), XStateError);
    CHECK_THROWS_AS(XState::make({std::nan(""), 0.25, 0.25, 0.25}, {}, {}), XStateError);
    try {
        XState::make({0.2, 0.2, 0.2, 0.2}, {}, {});
        FAIL("expected XStateError");
    } catch (const XStateError& e) {
        CHECK(e.kind() == XStateErrorKind::TraceViolation);
    }
}

TEST_CASE("from_dense accepts X matrices and rejects anything else") {
    CHECK_NOTHROW(from_dense(Matrix4c(Matrix4c::Identity() * 0.25)));

    Matrix4c bad = Matrix4c::Identity() * 0.25;
    bad(0, 1) = bad(1, 0) = 0.1;
    try {
        from_dense(bad);
        FAIL("expected XStateError");
    } catch (const XStateError& e) {
        CHECK(e.kind() == XStateErrorKind::NotXStructured);
        CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }

    // Product of two diagonal qubit states is a valid diagonal X-state.
    Matrix2c q1 = Matrix2c::Zero(), q2 = Matrix2c::Zero();
    q1(0, 0) = 0.7, q1(1, 1) = 0.3;
    q2(0, 0) = 0.2, q2(1, 1) = 0.8;
    const XState x = from_dense(kron2(q1, q2));
    CHECK(x.d[0] == doctest::Approx(0.14));
    CHECK(x.d[3] == doctest::Approx(0.24));
}

TEST_CASE("block_form bookkeeping") {
    const auto [mu, ml] = block_form(max_mixed());
    CHECK(mu.a == 0.25);
    CHECK(mu.c == 0.25);
    CHECK(std::abs(mu.b) == 0.0);
    CHECK(ml.a == 0.25);

    const auto [bu, bl] = block_form(bell());
    CHECK(bu.a == 0.5);
    CHECK(bu.c == 0.5);
    CHECK(bu.b == Complex(0.5, 0.0));
    CHECK(bl.a == 0.0);
    CHECK(bl.c == 0.0);

    const XState dg = XState::make({0.4, 0.3, 0.2, 0.1}, {}, {});
    const auto [du, dl] = block_form(dg);
    CHECK(du.a == 0.4);
    CHECK(du.c == 0.1);
    CHECK(dl.a == 0.2);
    CHECK(dl.c == 0.3);
}

TEST_CASE("block form reassembles to the dense matrix exactly") {
    SamplerConfig cfg{Measure::ParamUniformRejection, 99, 200};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const auto [u, l] = block_form(x);
        CHECK(max_abs(Matrix4c(from_blocks(u.dense(), l.dense()) - x.dense())) == 0.0);
    }
}

TEST_CASE("h coefficients of the named states") {
    const HVector h0 = h_coefficients(max_mixed());
    for (double v : h0.as_array()) CHECK(v == 0.0);

    const HVector hb = h_coefficients(bell());
    CHECK(hb.h3 == 0.0);
    CHECK(hb.h6 == 0.0);
    CHECK(hb.h7 == -1.0);
    CHECK(hb.h8 == 0.0);
    CHECK(hb.h10 == 0.0);
    CHECK(hb.h11 == -1.0);
    CHECK(hb.h15 == -1.0);

    const HVector hd = h_coefficients(XState::make({0.4, 0.3, 0.2, 0.1}, {}, {}));
    CHECK(hd.h3 == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK(hd.h6 == doctest::Approx(-0.2).epsilon(1e-14));
    CHECK(std::abs(hd.h15) <= 1e-15);
    CHECK(hd.h7 == 0.0);
    CHECK(hd.h8 == 0.0);
}

TEST_CASE("h_to_xstate inverts h_coefficients") {
    CHECK(max_abs(Matrix4c(h_to_xstate({}).dense() - max_mixed().dense())) == 0.0);

    HVector hb;
    hb.h7 = -1.0;
    hb.h11 = -1.0;
    hb.h15 = -1.0;
    CHECK(max_abs(Matrix4c(h_to_xstate(hb).dense() - bell().dense())) <= 1e-15);

    HVector bad;
    bad.h3 = -10.0;
    CHECK_THROWS_AS(h_to_xstate(bad), XStateError);
}

TEST_CASE("round trips dense <-> XState <-> h are the identity") {
    SamplerConfig cfg{Measure::ParamUniformRejection, 4242, 1000};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const XState via_dense = from_dense(x.dense());
        CHECK(max_abs(Matrix4c(via_dense.dense() - x.dense())) <= 1e-12);
        const XState via_h = h_to_xstate(h_coefficients(x));
        CHECK(max_abs(Matrix4c(via_h.dense() - x.dense())) <= 1e-12);
    }
}

TEST_CASE("unchecked skips validation") {
    CHECK_NOTHROW(XState::unchecked({0.9, 0.0, 0.0, 0.0}, Complex(2.0, 0.0), {}));
}

TEST_CASE("json serialization round trip") {
    SamplerConfig cfg{Measure::ParamUniformRejection, 5151, 100};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const XState back = xstate_from_json(xstate_to_json(x));
        CHECK(back.d == x.d);
        CHECK(back.c14 == x.c14);
        CHECK(back.c23 == x.c23);
    }
    const XState b = xstate_from_json(
        R"({"d":[0.5,0,0,0.5],"c14":{"re":0.5,"im":0},"c23":{"re":0,"im":0}})");
    CHECK(b.c14 == Complex(0.5, 0.0));
}

TEST_CASE("csv serialization round trip") {
    SamplerConfig cfg{Measure::ParamUniformRejection, 6161, 100};
    XStateSampler sampler(cfg);
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        const XState back = xstate_from_csv_row(xstate_to_csv_row(x));
        CHECK(back.d == x.d);
        CHECK(back.c14 == x.c14);
        CHECK(back.c23 == x.c23);
    }
}

TEST_CASE("malformed serialized states are rejected") {
    CHECK_THROWS(xstate_from_json(R"({"d":[1,0,0],"c14":{"re":0,"im":0}})"));
    CHECK_THROWS_AS(xstate_from_csv_row("0.25,0.25,0.25"), XStateError);
    CHECK_THROWS_AS(xstate_from_csv_row("0.25,0.25,0.25,0.25,zz,0,0,0"), XStateError);
}
