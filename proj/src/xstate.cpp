#include "xstates/xstate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace xstates {

namespace {

bool all_finite(const std::array<double, 4>& d, Complex c14, Complex c23) {
    for (double x : d)
        if (!std::isfinite(x)) return false;
    return std::isfinite(c14.real()) && std::isfinite(c14.imag()) &&
           std::isfinite(c23.real()) && std::isfinite(c23.imag());
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

XState XState::make(const std::array<double, 4>& d, Complex c14, Complex c23,
                    const Tolerances& tol) {
    if (!all_finite(d, c14, c23)) {
        throw XStateError(XStateErrorKind::NonFinite, 0, "xstate: non-finite entry");
    }
    const double trace = d[0] + d[1] + d[2] + d[3];
    if (std::abs(trace - 1.0) > tol.structural) {
        throw XStateError(XStateErrorKind::TraceViolation, 0,
                          "xstate: trace = " + fmt(trace) + ", expected 1");
    }
    for (double x : d) {
        if (x < -tol.structural) {
            throw XStateError(XStateErrorKind::PositivityViolation, 0,
                              "xstate: negative diagonal entry " + fmt(x));
        }
    }
    if (d[0] * d[3] < std::norm(c14) - tol.structural) {
        throw XStateError(XStateErrorKind::PositivityViolation, 1,
                          "xstate: d1*d4 = " + fmt(d[0] * d[3]) + " < |c14|^2 = " +
                              fmt(std::norm(c14)));
    }
    if (d[1] * d[2] < std::norm(c23) - tol.structural) {
        throw XStateError(XStateErrorKind::PositivityViolation, 2,
                          "xstate: d2*d3 = " + fmt(d[1] * d[2]) + " < |c23|^2 = " +
                              fmt(std::norm(c23)));
    }
    return XState{d, c14, c23};
}

XState XState::unchecked(const std::array<double, 4>& d, Complex c14, Complex c23) {
    return XState{d, c14, c23};
}

Matrix4c XState::dense() const {
    Matrix4c m = Matrix4c::Zero();
    for (int i = 0; i < 4; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    m(0, 3) = c14;
    m(3, 0) = std::conj(c14);
    m(1, 2) = c23;
    m(2, 1) = std::conj(c23);
    return m;
}

XState from_dense(const Matrix4c& m, const Tolerances& tol) {
    require_hermitian(m, tol.structural);
    std::vector<std::pair<int, int>> offenders;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool x_position = (i == j) || (i + j == 3);
            if (!x_position && std::abs(m(i, j)) > tol.structural) offenders.emplace_back(i, j);
        }
    }
    if (!offenders.empty()) {
        std::ostringstream os;
        os << "from_dense: non-X entries at";
        for (auto [i, j] : offenders) os << " (" << i + 1 << "," << j + 1 << ")";
        throw XStateError(XStateErrorKind::NotXStructured, 0, os.str());
    }
    return XState::make({m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real()},
                        m(0, 3), m(1, 2), tol);
}

std::pair<HermitianMatrix2, HermitianMatrix2> block_form(const XState& x) {
    HermitianMatrix2 upper{x.d[0], x.d[3], x.c14};
    HermitianMatrix2 lower{x.d[2], x.d[1], std::conj(x.c23)};  // [[rho33, rho32],[rho23, rho22]]
    return {upper, lower};
}

HVector h_coefficients(const XState& x) {
    // Real/imaginary expansion of the defining combinations; e.g.
    // h8 = i(-rho14 + rho23 - rho32 + rho41) = 2 Im(rho14) - 2 Im(rho23).
    HVector h;
    h.h3 = -x.d[0] - x.d[1] + x.d[2] + x.d[3];
    h.h6 = -x.d[0] + x.d[1] - x.d[2] + x.d[3];
    h.h15 = -x.d[0] + x.d[1] + x.d[2] - x.d[3];
    h.h7 = -2.0 * (x.c14.real() + x.c23.real());
    h.h11 = -2.0 * (x.c14.real() - x.c23.real());
    h.h8 = 2.0 * (x.c14.imag() - x.c23.imag());
    h.h10 = 2.0 * (x.c14.imag() + x.c23.imag());
    return h;
}

XState h_to_xstate(const HVector& h, const Tolerances& tol) {
    // rho = (1/4)(I - h3 s_z0 - h6 s_0z - h15 s_zz - h7 s_xx - h8 s_xy
    //             - h10 s_yx + h11 s_yy), expanded entrywise over the reals
    // (2i * h * (i/2)sigma = -h sigma; the -lambda_11 convention flips h11).
    std::array<double, 4> d{};
    d[0] = 0.25 * (1.0 - h.h3 - h.h6 - h.h15);
    d[1] = 0.25 * (1.0 - h.h3 + h.h6 + h.h15);
    d[2] = 0.25 * (1.0 + h.h3 - h.h6 + h.h15);
    d[3] = 0.25 * (1.0 + h.h3 + h.h6 - h.h15);
    const Complex c14 = 0.25 * Complex(-h.h7 - h.h11, h.h8 + h.h10);
    const Complex c23 = 0.25 * Complex(-h.h7 + h.h11, -h.h8 + h.h10);
    return XState::make(d, c14, c23, tol);
}

std::string xstate_to_json(const XState& x) {
    nlohmann::json j{
        {"d", {x.d[0], x.d[1], x.d[2], x.d[3]}},
        {"c14", {{"re", x.c14.real()}, {"im", x.c14.imag()}}},
        {"c23", {{"re", x.c23.real()}, {"im", x.c23.imag()}}},
    };
    return j.dump();
}

XState xstate_from_json(std::string_view text, const Tolerances& tol) {
    nlohmann::json j = nlohmann::json::parse(text);  // throws json::parse_error
    const auto& d = j.at("d");
    if (!d.is_array() || d.size() != 4) {
        throw XStateError(XStateErrorKind::NonFinite, 0, "xstate json: \"d\" must be 4 reals");
    }
    auto cplx = [&](const char* key) {
        const auto& c = j.at(key);
        return Complex(c.at("re").get<double>(), c.at("im").get<double>());
    };
    return XState::make({d[0].get<double>(), d[1].get<double>(), d[2].get<double>(),
                         d[3].get<double>()},
                        cplx("c14"), cplx("c23"), tol);
}

std::string xstate_to_csv_row(const XState& x) {
    std::ostringstream os;
    os << fmt(x.d[0]) << ',' << fmt(x.d[1]) << ',' << fmt(x.d[2]) << ',' << fmt(x.d[3]) << ','
       << fmt(x.c14.real()) << ',' << fmt(x.c14.imag()) << ',' << fmt(x.c23.real()) << ','
       << fmt(x.c23.imag());
    return os.str();
}

XState xstate_from_csv_row(std::string_view line, const Tolerances& tol) {
    std::array<double, 8> v{};
    std::size_t field = 0;
    std::size_t pos = 0;
    while (field < 8) {
        const std::size_t next = line.find(',', pos);
        const std::string token(line.substr(pos, next == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : next - pos));
        std::size_t used = 0;
        try {
            v[field] = std::stod(token, &used);
        } catch (const std::exception&) {
            throw XStateError(XStateErrorKind::NonFinite, 0,
                              "xstate csv: field " + std::to_string(field + 1) +
                                  " is not a number: \"" + token + "\"");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
            ++used;
        if (used != token.size()) {
            throw XStateError(XStateErrorKind::NonFinite, 0,
                              "xstate csv: trailing garbage in field " +
                                  std::to_string(field + 1));
        }
        ++field;
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    if (field != 8) {
        throw XStateError(XStateErrorKind::NonFinite, 0,
                          "xstate csv: expected 8 fields, got " + std::to_string(field));
    }
    return XState::make({v[0], v[1], v[2], v[3]}, Complex(v[4], v[5]), Complex(v[6], v[7]),
                        tol);
}

}  // namespace xstates
