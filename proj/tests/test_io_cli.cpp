#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsurg/catalog.hpp"
#include "torsurg/cli.hpp"
#include "torsurg/modeljson.hpp"
#include "torsurg/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace torsurg;
namespace fs = std::filesystem;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path tmpdir() {
    const fs::path d = fs::temp_directory_path() / "torsurg_test";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("model JSON round-trip") {
    const ManifoldModel m = builtin_M();
    const ManifoldModel back = model_from_json(model_to_json(m));
    CHECK(back == m);

    // through a surgery, including the log
    SurgerySpec s;
    s.coefficients["T2"] = {3, 1};
    s.coefficients["T4"] = {-1, 1};
    const ManifoldModel after = apply_surgeries(m, s);
    CHECK(model_from_json(model_to_json(after)) == after);

    const fs::path p = tmpdir() / "model.json";
    save_model_file(after, p.string());
    CHECK(load_model_file(p.string()) == after);
}

TEST_CASE("model JSON validation") {
    nlohmann::json j = model_to_json(builtin_M());
    j["b2"] = 15;  // block ranks no longer sum to b2
    CHECK_THROWS(model_from_json(j));
    nlohmann::json j2 = model_to_json(builtin_M());
    j2["tori"][0]["meridian"] = "zz";  // undeclared generator
    CHECK_THROWS(model_from_json(j2));
}

TEST_CASE("cli: info and usage errors") {
    std::string out;
    CHECK(cli({"info"}, &out) == 0);
    CHECK(out.find("chi=6 sigma=-2 b1=6 b2=16") != std::string::npos);
    CHECK(out.find("T4") != std::string::npos);

    CHECK(cli({"nonsense"}) == 2);
    CHECK(cli({}) == 2);
    CHECK(cli({"classify-subsets", "--sizes", ""}) == 2);
    CHECK(cli({"info", "--model", "/nonexistent/file.json"}) == 2);
    CHECK(cli({"--help"}, &out) == 0);
    CHECK(out.find("classify-subsets") != std::string::npos);

    // variant p covers sizes 4 and 5 only: empty tables are noted, not an error
    std::string err;
    CHECK(cli({"classify-subsets", "--sizes", "1", "--p", "2"}, &out, &err) == 0);
    CHECK(err.find("no rows") != std::string::npos);
}

TEST_CASE("cli: sw-family") {
    std::string out;
    CHECK(cli({"sw-family", "--pmax", "5"}, &out) == 0);
    CHECK(out.find("pairwise distinct: yes") != std::string::npos);
    CHECK(cli({"sw-family", "--pmax", "0"}) == 2);
    CHECK(cli({"--json", "sw-family", "--pmax", "3"}, &out) == 0);
    const auto arr = nlohmann::json::parse(out);
    REQUIRE(arr.size() == 3);
    CHECK(arr[2]["value"] == 3);
}

TEST_CASE("cli: prototype emits the published label lines") {
    std::string out;
    CHECK(cli({"prototype", "--set", "T1,T3,T4,T1',T2'", "--p", "1"}, &out) == 0);
    CHECK(out.find("label: #2 CP^2 #4 CP~2 # (S^1 x S^3)") != std::string::npos);
    CHECK(out.find("pi2: Z[Z]^6") != std::string::npos);
    CHECK(out.find("kodaira: 2") != std::string::npos);

    CHECK(cli({"prototype", "--set", "T3,T4,T1',T2'", "--p", "1"}, &out) == 0);
    CHECK(out.find("label: #2 CP^2 #4 CP~2 # (T^2 x S^2)") != std::string::npos);
    CHECK(out.find("pi2: Z + Z[Z^2]^6") != std::string::npos);

    // domain failure -> exit 1
    CHECK(cli({"prototype", "--set", "T1,T2,T3,T1'", "--p", "1"}) == 1);

    CHECK(cli({"--json", "prototype", "--set", "T3,T4,T1',T2'", "--p", "2"}, &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["label"] == "#2 CP^2 #4 CP~2 # (T^2 x S^2)");
    CHECK(j["pi2"] == "Z + Z[Z^2]^6");
    CHECK(j["sw_value"] == 2);
    CHECK(j["kodaira"].is_null());
}

TEST_CASE("cli: eqform renders the constant reduced form") {
    std::string out;
    CHECK(cli({"eqform", "--set", "T3,T4,T1',T2'", "--p", "1"}, &out) == 0);
    CHECK(out.find("over Z[Z^2], size 6") != std::string::npos);
    CHECK(out.find("unimodular: yes   extended: yes") != std::string::npos);
}

TEST_CASE("cli: classify-subsets exit codes and determinism") {
    std::string out1, out2, err;
    // sizes with no deviations from the published lists: exit 0
    CHECK(cli({"classify-subsets", "--sizes", "4,5", "--p", "-1"}, &out1, &err) == 0);
    CHECK(err.find("published-table match: ok") != std::string::npos);
    CHECK(cli({"classify-subsets", "--sizes", "4,5", "--p", "-1"}, &out2) == 0);
    CHECK(out1 == out2);  // byte-identical reruns

    // the two published triples that are provably non-abelian surface as a diff
    std::string err3;
    CHECK(cli({"classify-subsets", "--sizes", "3", "--p", "-1"}, &out1, &err3) == 1);
    CHECK(err3.find("MISMATCH T2,T4,T2'") != std::string::npos);
    CHECK(err3.find("MISMATCH T3,T4,T1'") != std::string::npos);
    CHECK(err3.find("Q8 witness") != std::string::npos);

    // variant p sweep on sizes 4,5 matches the -1 verdicts: exit 0
    CHECK(cli({"classify-subsets", "--sizes", "5", "--p", "2,3"}, &out1, &err) == 0);
    // 6 free-abelian(1) rows per p
    CHECK(std::count(out1.begin(), out1.end(), '\n') >= 12);
}

TEST_CASE("cli: run script, reports, emit-model round-trip") {
    const fs::path dir = tmpdir();
    const fs::path script = dir / "script.json";
    const fs::path model_out = dir / "out_model.json";
    {
        std::ofstream f(script);
        f << R"({
  "base": "M",
  "operations": [
    {"op": "surgery", "coefficients": {
      "T1": {"p": -1}, "T3": {"p": -1}, "T4": {"p": -1},
      "T1'": {"p": -1}, "T2'": {"p": -1}}}
  ],
  "reports": ["invariants", "pi1", "prototype"]
})";
    }
    std::string out;
    CHECK(cli({"run", script.string(), "--emit-model", model_out.string()}, &out) == 0);
    CHECK(out.find("chi=6 sigma=-2 b1=1 b2=6") != std::string::npos);
    CHECK(out.find("free-abelian rank 1, generators a1") != std::string::npos);
    CHECK(out.find("#2 CP^2 #4 CP~2 # (S^1 x S^3)") != std::string::npos);

    // emitted model re-parses to the same model
    const ManifoldModel expect = [&] {
        SurgerySpec s;
        for (const auto& nm : {"T1", "T3", "T4", "T1'", "T2'"}) s.coefficients[nm] = {-1, 1};
        return apply_surgeries(builtin_M(), s);
    }();
    CHECK(load_model_file(model_out.string()) == expect);

    // stabilize + reverse round-trip through the script engine
    const fs::path script2 = dir / "script2.json";
    {
        std::ofstream f(script2);
        f << R"({
  "base": "M",
  "operations": [
    {"op": "surgery", "coefficients": {"T2": {"p": 2}}},
    {"op": "reverse", "core": "T2"},
    {"op": "stabilize"}
  ],
  "reports": ["invariants"]
})";
    }
    CHECK(cli({"run", script2.string()}, &out) == 0);
    CHECK(out.find("chi=8 sigma=-2 b1=6 b2=18") != std::string::npos);

    // unknown torus -> exit 1 naming it
    const fs::path script3 = dir / "script3.json";
    {
        std::ofstream f(script3);
        f << R"({"base": "M", "operations": [{"op": "surgery",
              "coefficients": {"T9": {"p": -1}}}], "reports": []})";
    }
    std::string err;
    CHECK(cli({"run", script3.string()}, &out, &err) == 1);
    CHECK(err.find("T9") != std::string::npos);

    // malformed JSON -> exit 2
    const fs::path script4 = dir / "script4.json";
    {
        std::ofstream f(script4);
        f << "{ not json";
    }
    CHECK(cli({"run", script4.string()}) == 2);
}

TEST_CASE("golden: classify-subsets table formats") {
    std::string text, json_text;
    REQUIRE(cli({"classify-subsets", "--sizes", "0,3,4,5", "--p", "-1"}, &text) == 1);
    REQUIRE(cli({"--json", "classify-subsets", "--sizes", "0,3,4,5", "--p", "-1"},
                &json_text) == 1);
    const fs::path golden_dir = TORSURG_GOLDEN_DIR;
    CHECK(text == slurp(golden_dir / "sweep_default.txt"));
    CHECK(json_text == slurp(golden_dir / "sweep_default.json"));
}

TEST_CASE("golden: prototype report") {
    std::string text;
    REQUIRE(cli({"prototype", "--set", "T1,T3,T4,T1',T2'", "--p", "1"}, &text) == 0);
    const fs::path golden_dir = TORSURG_GOLDEN_DIR;
    CHECK(text == slurp(golden_dir / "prototype_rank1.txt"));
}

TEST_CASE("cli binary runs end to end") {
    // exercise the installed binary through the shell, exit code 0
    const std::string cmd = std::string(TORSURG_CLI_PATH) + " sw-family --pmax 3 > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
}
