#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "xstates/orbit.hpp"
#include "xstates/sampler.hpp"
#include "xstates/separability.hpp"
#include "xstates/su4.hpp"
#include "xstates/xstate.hpp"

namespace xstates::cli {

namespace {

using nlohmann::json;

constexpr double kPi = 3.141592653589793238462643383279;

struct Options {
    Tolerances tol;
    std::string format = "jsonl";  // subcommands may override their default
    std::string in_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int count = 1000;
    int resolution = 16;
    int samples = 1000;
    std::string measure = "spectrum-uniform";
    std::string family = "werner";
    bool spectra_only = false;
    double sweep_r1 = 0.25;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void emit_header(std::ostream& out, const Options& o, const std::string& command) {
    if (o.format == "csv") {
        out << "# command=" << command << " tol_structural=" << fmt(o.tol.structural)
            << " tol_band=" << fmt(o.tol.band) << "\n";
    } else {
        json h{{"record", "header"},
               {"command", command},
               {"tol_structural", o.tol.structural},
               {"tol_band", o.tol.band}};
        out << h.dump() << "\n";
    }
}

struct ParsedStates {
    std::vector<XState> states;
};

// Accepts a JSON array, a stream of JSON objects (one per line), or CSV rows.
ParsedStates read_states(std::istream& in, const Tolerances& tol) {
    std::ostringstream whole;
    whole << in.rdbuf();
    const std::string text = whole.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::runtime_error("input contains no states");

    ParsedStates out;
    if (text[first] == '[') {
        json arr = json::parse(text);
        int idx = 0;
        for (const auto& item : arr) {
            try {
                out.states.push_back(xstate_from_json(item.dump(), tol));
            } catch (const std::exception& e) {
                throw std::runtime_error("entry " + std::to_string(idx + 1) + ": " + e.what());
            }
            ++idx;
        }
        return out;
    }
    if (text[first] == '{') {
        // A single object may span multiple lines (pretty-printed); only fall
        // back to line-by-line JSONL when the whole text is not one document.
        const json whole = json::parse(text, nullptr, false);
        if (!whole.is_discarded()) {
            out.states.push_back(xstate_from_json(whole.dump(), tol));
            return out;
        }
    }

    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        try {
            if (line[pos] == '{') {
                out.states.push_back(xstate_from_json(line, tol));
            } else {
                out.states.push_back(xstate_from_csv_row(line, tol));
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.states.empty()) throw std::runtime_error("input contains no states");
    return out;
}

ParsedStates read_states_path(const Options& o) {
    if (o.in_path.empty() || o.in_path == "-") return read_states(std::cin, o.tol);
    std::ifstream f(o.in_path);
    if (!f) throw std::runtime_error("cannot open input file: " + o.in_path);
    try {
        return read_states(f, o.tol);
    } catch (const std::exception& e) {
        throw std::runtime_error(o.in_path + ": " + e.what());
    }
}

// --- verify ----------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    std::string detail;
};

void sampled_checks(std::vector<CheckResult>& checks, const Options& o) {
    SamplerConfig cfg{Measure::SpectrumUniform, o.seed != 0 ? o.seed : 20250811ULL, o.samples};
    XStateSampler sampler(cfg);
    SamplerConfig cfg2{Measure::ParamUniformRejection, cfg.seed + 1, o.samples};
    XStateSampler sampler2(cfg2);

    double worst_gram = 0.0, worst_roundtrip = 0.0;
    int class_disagree = 0, sep_disagree = 0;
    for (int i = 0; i < o.samples; ++i) {
        const XState x = (i % 2 == 0) ? sampler.next() : sampler2.next();

        const auto [mu1, mu2] = mu_values(h_coefficients(x));
        auto spec = gram_spectrum(gram(x));
        std::array<double, 7> target{mu1, mu1, mu2, mu2, 0.0, 0.0, 0.0};
        std::sort(target.begin(), target.end(), std::greater<>());
        for (int k = 0; k < 7; ++k) {
            worst_gram = std::max(worst_gram,
                                  std::abs(spec[static_cast<std::size_t>(k)] -
                                           target[static_cast<std::size_t>(k)]));
        }

        const auto diag = diagonalize(x);
        const Matrix4c w = frame_unitary(diag.frame);
        // The diagonal lives in the block frame; P_pi carries it back.
        Matrix4c d = Matrix4c::Zero();
        const auto rr = diag.spectrum.as_array();
        d(0, 0) = rr[0];
        d(1, 1) = rr[1];
        d(2, 2) = rr[2];
        d(3, 3) = rr[3];
        worst_roundtrip = std::max(worst_roundtrip,
                                   max_abs(w * (p_pi() * d * p_pi()).eval() * w.adjoint() -
                                           x.dense()));

        const OrbitClass by_mu = classify_orbit(x, o.tol);
        const bool upper_deg = diag.spectrum.r1 - diag.spectrum.r2 <= o.tol.band;
        const bool lower_deg = diag.spectrum.r3 - diag.spectrum.r4 <= o.tol.band;
        OrbitKind by_gap = OrbitKind::Generic4D;
        if (upper_deg && lower_deg) by_gap = OrbitKind::MaximallyMixed0D;
        else if (upper_deg) by_gap = OrbitKind::DegenerateUpper2D;
        else if (lower_deg) by_gap = OrbitKind::DegenerateLower2D;
        if (by_mu.kind != by_gap && !by_mu.marginal) ++class_disagree;

        const auto elementwise = ppt_elementwise(x, o.tol);
        const auto oracle = ppt_oracle(x, o.tol);
        if (elementwise.separable != oracle.separable && !elementwise.marginal &&
            std::abs(oracle.min_eigenvalue) > o.tol.band) {
            ++sep_disagree;
        }
    }
    checks.push_back({"gram_structure", worst_gram <= 1e-9, worst_gram,
                      std::to_string(o.samples) + " samples, spectrum {mu1,mu1,mu2,mu2,0,0,0}"});
    checks.push_back({"diag_roundtrip", worst_roundtrip <= 1e-10, worst_roundtrip,
                      "W diag(r) W^dag reconstruction"});
    checks.push_back({"orbit_consistency", class_disagree == 0,
                      static_cast<double>(class_disagree),
                      "mu-based vs block-gap classification"});
    checks.push_back({"sep_concordance", sep_disagree == 0, static_cast<double>(sep_disagree),
                      "elementwise vs dense-oracle verdicts"});
}

int cmd_verify(std::ostream& out, const Options& o) {
    std::vector<CheckResult> checks;

    const auto table = verify_commutator_table();
    checks.push_back({"commutator_table", table.pass, table.max_deviation,
                      std::to_string(table.matched) + "/" + std::to_string(table.checked) +
                          " commutators"});
    const auto cartan = verify_cartan_split();
    checks.push_back({"cartan_split", cartan.pass, cartan.max_residual,
                      "[l,l] in l, [p,l] in p, [p,p] in l"});
    const auto spins = verify_pseudospin();
    checks.push_back({"pseudospin", spins.pass, spins.max_residual,
                      "su(2) x su(2) relations"});
    const auto ppi = ppi_conjugation_table();
    checks.push_back({"ppi_conjugation", ppi.pass, ppi.max_deviation,
                      "7 block-diagonal identities"});

    sampled_checks(checks, o);

    emit_header(out, o, "verify");
    bool all = true;
    if (o.format == "csv") {
        out << "name,pass,deviation,detail\n";
        for (const auto& c : checks) {
            out << c.name << ',' << (c.pass ? 1 : 0) << ',' << fmt(c.deviation) << ",\""
                << c.detail << "\"\n";
            all = all && c.pass;
        }
    } else {
        for (const auto& c : checks) {
            json j{{"record", "check"},
                   {"name", c.name},
                   {"pass", c.pass},
                   {"deviation", c.deviation},
                   {"detail", c.detail}};
            out << j.dump() << "\n";
            all = all && c.pass;
        }
        json s{{"record", "summary"}, {"pass", all}, {"checks", checks.size()}};
        out << s.dump() << "\n";
    }
    return all ? 0 : 1;
}

// --- classify / check-sep ----------------------------------------------------

int cmd_classify(std::ostream& out, const Options& o) {
    const auto input = read_states_path(o);
    emit_header(out, o, "classify");
    if (o.format == "csv") {
        out << "index,orbit_kind,isotropy_dim,orbit_dim,mu1,mu2,r1,r2,r3,r4,"
               "phi1,psi1,phi2,psi2,omega,marginal\n";
    }
    int idx = 0;
    for (const XState& x : input.states) {
        const auto cls = classify_orbit(x, o.tol);
        const auto [mu1, mu2] = mu_values(h_coefficients(x));
        const auto diag = diagonalize(x);
        const auto& r = diag.spectrum;
        const auto& f = diag.frame;
        if (o.format == "csv") {
            out << idx << ',' << to_string(cls.kind) << ',' << cls.isotropy_dim << ','
                << orbit_dimension(cls) << ',' << fmt(mu1) << ',' << fmt(mu2) << ','
                << fmt(r.r1) << ',' << fmt(r.r2) << ',' << fmt(r.r3) << ',' << fmt(r.r4) << ','
                << fmt(f.phi1) << ',' << fmt(f.psi1) << ',' << fmt(f.phi2) << ','
                << fmt(f.psi2) << ',' << fmt(f.omega) << ',' << (cls.marginal ? 1 : 0) << "\n";
        } else {
            json j{{"record", "classify"},
                   {"index", idx},
                   {"orbit_kind", std::string(to_string(cls.kind))},
                   {"isotropy_dim", cls.isotropy_dim},
                   {"orbit_dim", orbit_dimension(cls)},
                   {"mu1", mu1},
                   {"mu2", mu2},
                   {"spectrum", {r.r1, r.r2, r.r3, r.r4}},
                   {"angles",
                    {{"phi1", f.phi1}, {"psi1", f.psi1}, {"phi2", f.phi2}, {"psi2", f.psi2},
                     {"omega", f.omega}}},
                   {"marginal", cls.marginal}};
            out << j.dump() << "\n";
        }
        ++idx;
    }
    return 0;
}

int cmd_check_sep(std::ostream& out, const Options& o) {
    const auto input = read_states_path(o);
    emit_header(out, o, "check-sep");
    if (o.format == "csv") out << "index,separable,margin,binding,marginal,oracle_min_eig\n";
    int idx = 0;
    for (const XState& x : input.states) {
        const auto v = ppt_elementwise(x, o.tol);
        const auto oracle = ppt_oracle(x, o.tol);
        if (o.format == "csv") {
            out << idx << ',' << (v.separable ? 1 : 0) << ',' << fmt(v.margin) << ','
                << to_string(v.binding) << ',' << (v.marginal ? 1 : 0) << ','
                << fmt(oracle.min_eigenvalue) << "\n";
        } else {
            json j{{"record", "check-sep"},
                   {"index", idx},
                   {"separable", v.separable},
                   {"margin", v.margin},
                   {"binding", std::string(to_string(v.binding))},
                   {"marginal", v.marginal},
                   {"oracle_min_eig", oracle.min_eigenvalue}};
            out << j.dump() << "\n";
        }
        ++idx;
    }
    return 0;
}

// --- sample / sweep / region-export ------------------------------------------

int cmd_sample(std::ostream& out, const Options& o) {
    SamplerConfig cfg;
    cfg.measure = o.measure == "param-uniform-rejection" ? Measure::ParamUniformRejection
                                                         : Measure::SpectrumUniform;
    cfg.seed = o.seed;
    cfg.count = o.count;
    XStateSampler sampler(cfg);
    emit_header(out, o, "sample");
    if (o.spectra_only) {
        if (o.format == "csv") out << "r1,r2,r3,r4\n";
        for (int i = 0; i < cfg.count; ++i) {
            const auto r = sampler.next_spectrum();
            if (o.format == "csv") {
                out << fmt(r.r1) << ',' << fmt(r.r2) << ',' << fmt(r.r3) << ',' << fmt(r.r4)
                    << "\n";
            } else {
                json j{{"record", "spectrum"}, {"r", {r.r1, r.r2, r.r3, r.r4}}};
                out << j.dump() << "\n";
            }
        }
        return 0;
    }
    if (o.format == "csv") out << "d1,d2,d3,d4,c14re,c14im,c23re,c23im\n";
    for (int i = 0; i < cfg.count; ++i) {
        const XState x = sampler.next();
        if (o.format == "csv") out << xstate_to_csv_row(x) << "\n";
        else out << xstate_to_json(x) << "\n";
    }
    return 0;
}

int cmd_sweep(std::ostream& out, const Options& o) {
    emit_header(out, o, "sweep");
    if (o.family == "werner") {
        out << "parameter,separable,margin\n";
        const int n = std::max(2, o.count);
        for (int i = 0; i < n; ++i) {
            const double p = static_cast<double>(i) / (n - 1);
            const auto v = ppt_elementwise(werner_state(p), o.tol);
            out << fmt(p) << ',' << (v.separable ? 1 : 0) << ',' << fmt(v.margin) << "\n";
        }
        return 0;
    }
    if (o.family == "degenerate") {
        // (zeta, phi2, r1) grid comparing the closed-form criterion with the oracle.
        out << "zeta,phi2,r1,criterion_separable,oracle_separable,oracle_margin,agree\n";
        const int nz = 12, nr = 5;
        const int phi_steps = std::max(8, o.count / (nz * nr));
        for (int zi = 0; zi < nz; ++zi) {
            const double zeta = 0.9 * zi / (nz - 1);
            for (int ri = 1; ri <= nr; ++ri) {
                const double r1 = 0.5 * ri / (nr + 1);
                const double r3 = (1.0 - 2.0 * r1) / (1.0 + zeta);
                const double r4 = zeta * r3;
                const auto rep = degenerate_cross_check(r1, r3, r4, phi_steps, o.tol);
                for (const auto& row : rep.rows) {
                    out << fmt(row.zeta) << ',' << fmt(row.phi2) << ',' << fmt(row.r1) << ','
                        << (row.criterion_separable ? 1 : 0) << ',' << (row.oracle_separable ? 1 : 0)
                        << ',' << fmt(row.oracle_margin) << ',' << (row.agree ? 1 : 0) << "\n";
                }
            }
        }
        return 0;
    }
    throw std::runtime_error("unknown sweep family: " + o.family);
}

int cmd_region(std::ostream& out, const Options& o) {
    const auto records = region_export(o.resolution, o.tol);
    emit_header(out, o, "region-export");
    out << "# vertices A=(1,0,0,0) B=(0.5,0.5,0,0) C=(0,0,1,0) D=(0,0,0.5,0.5) "
           "mapped to (1,1,1) (1,-1,-1) (-1,1,-1) (-1,-1,1)\n";
    out << "# full-order sub-simplex ABC'D' with C'=(1/3,1/3,1/3,0) D'=(1/4,1/4,1/4,1/4)\n";
    out << "r1,r2,r3,r4,x,y,z,abs_sep,full_order\n";
    for (const auto& rec : records) {
        out << fmt(rec.r.r1) << ',' << fmt(rec.r.r2) << ',' << fmt(rec.r.r3) << ','
            << fmt(rec.r.r4) << ',' << fmt(rec.xyz[0]) << ',' << fmt(rec.xyz[1]) << ','
            << fmt(rec.xyz[2]) << ',' << (rec.abs_separable ? 1 : 0) << ','
            << (rec.full_order ? 1 : 0) << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"two-qubit X-state orbit classification and separability toolkit"};
    app.require_subcommand(1);

    // Tolerance overrides share one validation window, echoed in every header.
    const auto tol_range = CLI::Range(1e-300, 1e-3);
    app.add_option("--tol-structural", o.tol.structural,
                   "structural tolerance override, must lie in (0, 1e-3]")
        ->check(tol_range);
    app.add_option("--tol-band", o.tol.band,
                   "marginal band override, must lie in (0, 1e-3]")
        ->check(tol_range);
    app.add_option("--out", o.out_path, "write records to a file instead of stdout");

    auto add_format = [&](CLI::App* sub, const char* def) {
        o.format = def;
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"jsonl", "csv"}));
    };

    auto* verify = app.add_subcommand("verify", "run the algebraic identity suite");
    verify->add_option("--samples", o.samples, "sampled concordance draws")->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed, "sampling seed");
    add_format(verify, "jsonl");

    auto* classify = app.add_subcommand("classify", "orbit classification records");
    classify->add_option("--in", o.in_path, "state file (JSON/JSONL/CSV), '-' for stdin");
    add_format(classify, "jsonl");

    auto* checksep = app.add_subcommand("check-sep", "separability verdicts");
    checksep->add_option("--in", o.in_path, "state file (JSON/JSONL/CSV), '-' for stdin");
    add_format(checksep, "jsonl");

    auto* sample = app.add_subcommand("sample", "draw reproducible random X-states");
    sample->add_option("--seed", o.seed, "stream seed");
    sample->add_option("--count", o.count, "number of draws")->check(CLI::PositiveNumber);
    sample->add_option("--measure", o.measure, "sampling measure")
        ->check(CLI::IsMember({"spectrum-uniform", "param-uniform-rejection"}));
    sample->add_flag("--spectra", o.spectra_only, "emit spectra instead of states");
    add_format(sample, "jsonl");

    auto* sweep = app.add_subcommand("sweep", "one-parameter family sweeps (CSV)");
    sweep->add_option("--family", o.family, "werner or degenerate")
        ->check(CLI::IsMember({"werner", "degenerate"}));
    sweep->add_option("--count", o.count, "grid size")->check(CLI::PositiveNumber);

    auto* region = app.add_subcommand("region-export", "absolute-separability point cloud (CSV)");
    region->add_option("--resolution", o.resolution, "grid resolution (>= 2)")
        ->check(CLI::Range(2, 1 << 20));

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    // sweep and region-export are columnar by nature.
    if (sweep->parsed() || region->parsed()) o.format = "csv";

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file_out.open(o.out_path);
        if (!file_out) {
            err << "error: cannot open output file: " << o.out_path << "\n";
            return 2;
        }
        sink = &file_out;
    }

    try {
        if (verify->parsed()) return cmd_verify(*sink, o);
        if (classify->parsed()) return cmd_classify(*sink, o);
        if (checksep->parsed()) return cmd_check_sep(*sink, o);
        if (sample->parsed()) return cmd_sample(*sink, o);
        if (sweep->parsed()) return cmd_sweep(*sink, o);
        if (region->parsed()) return cmd_region(*sink, o);
    } catch (const XStateError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace xstates::cli
