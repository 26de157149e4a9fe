#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../tools/cli_app.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("xstates");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code =
        xstates::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

std::vector<json> parse_jsonl(const std::string& text) {
    std::vector<json> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) records.push_back(json::parse(line));
    }
    return records;
}

}  // namespace

TEST_CASE("verify passes on a correct build and reports the full table") {
    const auto r = run_cli({"verify", "--samples", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.find("225/225 commutators") != std::string::npos);
    const auto records = parse_jsonl(r.out);
    CHECK(records.front().at("record") == "header");
    bool summary_seen = false;
    for (const auto& rec : records) {
        if (rec.at("record") == "check") CHECK(rec.at("pass") == true);
        if (rec.at("record") == "summary") {
            summary_seen = true;
            CHECK(rec.at("pass") == true);
        }
    }
    CHECK(summary_seen);
}

TEST_CASE("classify labels the maximally mixed fixture") {
    const auto p = write_temp("xs_cli_mm.json",
                              R"({"d":[0.25,0.25,0.25,0.25],"c14":{"re":0,"im":0},"c23":{"re":0,"im":0}})");
    const auto r = run_cli({"classify", "--in", p.string()});
    REQUIRE(r.code == 0);
    const auto records = parse_jsonl(r.out);
    REQUIRE(records.size() == 2);
    CHECK(records[1].at("orbit_kind") == "MaximallyMixed0D");
    CHECK(records[1].at("isotropy_dim") == 7);
    CHECK(records[1].at("orbit_dim") == 0);
}

TEST_CASE("check-sep on the Bell fixture") {
    const auto p = write_temp("xs_cli_bell.json",
                              R"({"d":[0.5,0,0,0.5],"c14":{"re":0.5,"im":0},"c23":{"re":0,"im":0}})");
    const auto r = run_cli({"check-sep", "--in", p.string()});
    REQUIRE(r.code == 0);
    const auto records = parse_jsonl(r.out);
    REQUIRE(records.size() == 2);
    CHECK(records[1].at("separable") == false);
    CHECK(records[1].at("margin").get<double>() == doctest::Approx(-0.25));
    CHECK(records[1].at("binding") == "Ineq32");
    CHECK(records[1].at("oracle_min_eig").get<double>() == doctest::Approx(-0.5));
}

TEST_CASE("classify accepts a pretty-printed single JSON object") {
    const auto p = write_temp("xs_cli_pretty.json", R"({
  "d": [0.25, 0.25, 0.25, 0.25],
  "c14": {"re": 0, "im": 0},
  "c23": {"re": 0, "im": 0}
})");
    const auto r = run_cli({"classify", "--in", p.string()});
    REQUIRE(r.code == 0);
    CHECK(parse_jsonl(r.out).at(1).at("orbit_kind") == "MaximallyMixed0D");
}

TEST_CASE("verify emits a csv report when asked") {
    const auto r = run_cli({"verify", "--samples", "50", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("name,pass,deviation,detail") != std::string::npos);
    CHECK(r.out.find("commutator_table,1,") != std::string::npos);
}

TEST_CASE("check-sep accepts CSV rows and array JSON") {
    const auto csv = write_temp("xs_cli_states.csv",
                                "0.25,0.25,0.25,0.25,0,0,0,0\n0.5,0,0,0.5,0.5,0,0,0\n");
    const auto r = run_cli({"check-sep", "--in", csv.string(), "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("index,separable,margin") != std::string::npos);

    const auto arr = write_temp("xs_cli_states_arr.json",
                                R"([{"d":[0.25,0.25,0.25,0.25],"c14":{"re":0,"im":0},"c23":{"re":0,"im":0}}])");
    const auto r2 = run_cli({"check-sep", "--in", arr.string()});
    CHECK(r2.code == 0);
}

TEST_CASE("malformed input files fail with exit code 2 and a line number") {
    const auto p = write_temp("xs_cli_bad.csv", "0.25,0.25,0.25,0.25,0,0,0,0\n1,2,nope\n");
    const auto r = run_cli({"check-sep", "--in", p.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    const auto missing = run_cli({"classify", "--in", "/nonexistent/states.json"});
    CHECK(missing.code == 2);
}

TEST_CASE("invalid states fail validation with exit code 2") {
    const auto p = write_temp("xs_cli_invalid.json",
                              R"({"d":[0.5,0,0,0.5],"c14":{"re":0.6,"im":0},"c23":{"re":0,"im":0}})");
    const auto r = run_cli({"classify", "--in", p.string()});
    CHECK(r.code == 2);
}

TEST_CASE("unknown flags and out-of-range tolerances are input errors") {
    CHECK(run_cli({"verify", "--no-such-flag"}).code == 2);
    CHECK(run_cli({"--tol-band", "0.5", "verify"}).code == 2);
    CHECK(run_cli({"--tol-structural", "0", "verify"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("tolerance overrides are echoed in the output header") {
    const auto r = run_cli({"--tol-band", "1e-8", "region-export", "--resolution", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("tol_band=1e-08") != std::string::npos);
}

TEST_CASE("sample streams are deterministic and parseable") {
    const std::vector<std::string> args{"sample", "--seed", "5", "--count", "20"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto records = parse_jsonl(a.out);
    CHECK(records.size() == 21);  // header + 20 states
    for (std::size_t i = 1; i < records.size(); ++i) {
        CHECK(records[i].at("d").size() == 4);
    }

    const auto csv = run_cli({"sample", "--seed", "5", "--count", "5", "--format", "csv",
                              "--measure", "param-uniform-rejection"});
    CHECK(csv.out.find("d1,d2,d3,d4,c14re,c14im,c23re,c23im") != std::string::npos);
}

TEST_CASE("werner sweep brackets the 1/3 threshold") {
    const auto r = run_cli({"sweep", "--family", "werner", "--count", "7"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::pair<double, int>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.find("parameter") == 0) continue;
        double p, margin;
        int sep;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%d,%lf", &p, &sep, &margin) == 3);
        rows.emplace_back(p, sep);
    }
    REQUIRE(rows.size() == 7);
    for (const auto& [p, sep] : rows) {
        CHECK(sep == (p <= 1.0 / 3.0 ? 1 : 0));
    }
}

TEST_CASE("degenerate sweep emits the cross-check grid") {
    const auto r = run_cli({"sweep", "--family", "degenerate", "--count", "480"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("zeta,phi2,r1,criterion_separable,oracle_separable,oracle_margin,agree") !=
          std::string::npos);
    // Some rows must disagree (the zeta -> 0 region) and some must agree.
    CHECK(r.out.find(",1\n") != std::string::npos);
    CHECK(r.out.find(",0\n") != std::string::npos);
}

TEST_CASE("region export emits the documented schema and vertex table") {
    const auto r = run_cli({"region-export", "--resolution", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("r1,r2,r3,r4,x,y,z,abs_sep,full_order") != std::string::npos);
    CHECK(r.out.find("vertices A=(1,0,0,0)") != std::string::npos);
    int rows = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#' && line[0] != 'r') ++rows;
    }
    CHECK(rows == 10);
    CHECK(run_cli({"region-export", "--resolution", "1"}).code == 2);
}

TEST_CASE("--out writes the records to a file") {
    const fs::path p = fs::temp_directory_path() / "xs_cli_region.csv";
    std::error_code ec;
    fs::remove(p, ec);
    const auto r = run_cli({"--out", p.string(), "region-export", "--resolution", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(p);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str().find("r1,r2,r3,r4") != std::string::npos);
}

TEST_CASE("help exits zero") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}
