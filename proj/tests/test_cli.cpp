#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "curv/cli.hpp"

using namespace curv;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::dispatch(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("curv_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const std::string& text) {
        fs::path p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string jfile(const std::string& name, const Json& j) { return file(name, j.dump()); }
};

}  // namespace

TEST_CASE("build then chi", "[cli]") {
    TempDir tmp;
    std::string out = (tmp.path / "oct.json").string();
    RunResult b = run({"build", "--kind", "cross", "--d", "3", "--out", out});
    REQUIRE(b.code == 0);
    RunResult c = run({"chi", out});
    REQUIRE(c.code == 0);
    CHECK(c.json()["chi"] == 2);
    CHECK(c.json()["schema_version"] == 1);
}

TEST_CASE("build product reproduces the 676-vertex square", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    std::string prod = (tmp.path / "prod.json").string();
    RunResult p = run({"build", "--kind", "product", "--in", oct, "--in2", oct, "--out", prod});
    REQUIRE(p.code == 0);
    CHECK(load_graph(read_json_file(prod)).graph.order() == 676);
}

TEST_CASE("verify kinds and exit codes", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    RunResult sphere = run({"verify", "--kind", "sphere", "--dim", "2", oct});
    CHECK(sphere.code == 0);
    CHECK(sphere.json()["holds"] == true);

    std::string w = (tmp.path / "w.json").string();
    REQUIRE(run({"build", "--kind", "wheel", "--n", "6", "--out", w}).code == 0);
    RunResult not_sphere = run({"verify", "--kind", "sphere", "--dim", "2", w});
    CHECK(not_sphere.code == 1);
    CHECK(not_sphere.json()["holds"] == false);

    RunResult contractible = run({"verify", "--kind", "contractible", w});
    CHECK(contractible.code == 0);
    REQUIRE(contractible.json().contains("collapse_order"));
    CHECK(contractible.json()["collapse_order"].size() == 7);
}

TEST_CASE("levitt curvature of the icosahedron is 1/6 everywhere", "[cli]") {
    TempDir tmp;
    std::string ico = (tmp.path / "ico.json").string();
    REQUIRE(run({"build", "--kind", "icosa", "--out", ico}).code == 0);
    RunResult r = run({"curvature", "--levitt", ico});
    REQUIRE(r.code == 0);
    Json values = r.json()["curvature"]["values"];
    CHECK(values.size() == 12);
    for (const auto& [v, k] : values.items()) CHECK(k == Json("1/6"));
}

TEST_CASE("indices of a staircase coloring on C_4", "[cli]") {
    TempDir tmp;
    std::string c4 = (tmp.path / "c4.json").string();
    REQUIRE(run({"build", "--kind", "cycle", "--n", "4", "--out", c4}).code == 0);
    std::string f = tmp.jfile("f.json", Json{{"values", {{"0", 0}, {"1", 1}, {"2", 2}, {"3", 3}}}});
    RunResult r = run({"indices", "--coloring", f, "--symmetric", c4});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["indices"]["0"] == 1);
    CHECK(j["indices"]["3"] == -1);
    CHECK(j["sum"] == 0);
    CHECK(j["symmetric"]["1"] == 0);
}

TEST_CASE("wheels subcommand lists the octahedron circle", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    RunResult r = run({"wheels", "--vertex", "0", oct});
    REQUIRE(r.code == 0);
    CHECK(r.json()["wheels"].size() == 1);
    CHECK(r.json()["truncated"] == false);
}

TEST_CASE("crofton distance via the CLI", "[cli]") {
    TempDir tmp;
    std::string path_graph = tmp.jfile(
        "p.json", Json{{"vertices", {0, 1, 2, 3}}, {"edges", {{0, 1}, {1, 2}, {2, 3}}}});
    std::string m = tmp.jfile(
        "m.json",
        Json{{"weights", {1}},
             {"colorings", {Json{{"values", {{"0", 1}, {"1", 2}, {"2", -1}, {"3", -2}}}}}}});
    RunResult r = run({"distance", "--measure", m, "--from", "0", "--to", "3", path_graph});
    REQUIRE(r.code == 0);
    CHECK(r.json()["distance"] == 1);
}

TEST_CASE("search on the octahedron: positive, exact, reproducible", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    RunResult a = run({"search", "--mode", "euler", "--seed", "7", "--threads", "1", oct});
    REQUIRE(a.code == 0);
    Json j = a.json();
    CHECK(j["status"] == "positive");
    CHECK(j["t_star"] == "1/3");
    CHECK(j["certificate_verified"] == true);
    CHECK(j["gauss_bonnet_ceiling"] == "1/3");

    RunResult b = run({"search", "--mode", "euler", "--seed", "7", "--threads", "1", oct});
    CHECK(a.out == b.out);  // same RunConfig, byte-identical output
}

TEST_CASE("search exit code 2 on a flat torus", "[cli]") {
    TempDir tmp;
    std::string c4 = (tmp.path / "c4.json").string();
    REQUIRE(run({"build", "--kind", "cycle", "--n", "4", "--out", c4}).code == 0);
    std::string torus = (tmp.path / "torus.json").string();
    REQUIRE(run({"build", "--kind", "product", "--in", c4, "--in2", c4, "--out", torus}).code == 0);
    RunResult r = run({"search", "--mode", "euler", "--rounds", "3", "--random-pool", "8",
                       "--threads", "1", torus});
    CHECK(r.code == 2);
    CHECK(r.json()["status"] == "nonpositive-within-pool");
    CHECK_THAT(r.json()["note"].get<std::string>(),
               Catch::Matchers::ContainsSubstring("not a nonexistence proof"));
}

TEST_CASE("usage and data error exit codes", "[cli]") {
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"build", "--kind", "dodecahedron"}).code == cli::kExitUsage);

    TempDir tmp;
    std::string bad = tmp.file("bad.json", "{\n  \"vertices\": [1,\n}");
    RunResult r = run({"chi", bad});
    CHECK(r.code == cli::kExitData);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("line 3"));

    std::string missing = (tmp.path / "nope.json").string();
    CHECK(run({"chi", missing}).code == cli::kExitData);
}

TEST_CASE("verify supports exhaustive puncture mode", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    RunResult r = run({"verify", "--kind", "sphere", "--dim", "2", "--exhaustive-puncture", oct});
    CHECK(r.code == 0);
    CHECK(r.json()["holds"] == true);
}

TEST_CASE("wheels universal mode via the CLI", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    RunResult r = run({"wheels", "--vertex", "0", "--mode", "universal", oct});
    REQUIRE(r.code == 0);
    CHECK(r.json()["mode"] == "universal");
    CHECK(r.json()["wheels"].size() == 1);
    CHECK(run({"wheels", "--vertex", "0", "--mode", "sideways", oct}).code == cli::kExitUsage);
}

TEST_CASE("indices rejects a coloring with ambiguous levels", "[cli]") {
    TempDir tmp;
    std::string c4 = (tmp.path / "c4.json").string();
    REQUIRE(run({"build", "--kind", "cycle", "--n", "4", "--out", c4}).code == 0);
    std::string f = tmp.jfile("f.json", Json{{"values", {{"0", 0}, {"1", 0}, {"2", 1}, {"3", 2}}}});
    RunResult r = run({"indices", "--coloring", f, c4});
    CHECK(r.code == cli::kExitData);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("ambiguous level"));
}

TEST_CASE("search writes its report to --out", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    std::string report = (tmp.path / "report.json").string();
    RunResult r = run({"search", "--mode", "euler", "--threads", "1", "--out", report, oct});
    REQUIRE(r.code == 0);
    Json j = read_json_file(report);
    CHECK(j["t_star"] == "1/3");
    CHECK(j["measure"]["weights"].size() == j["measure"]["colorings"].size());
    CHECK(r.out == j.dump(2) + "\n");  // stdout mirrors the file
}

TEST_CASE("search pivot budget exhausts with exit code 3", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    RunResult r = run({"search", "--mode", "euler", "--pivot-budget", "1", "--threads", "1", oct});
    CHECK(r.code == 3);
    CHECK(r.json()["status"] == "budget-exhausted");
}

TEST_CASE("environment variable overrides the default pivot budget", "[cli]") {
    TempDir tmp;
    std::string oct = (tmp.path / "oct.json").string();
    REQUIRE(run({"build", "--kind", "cross", "--d", "3", "--out", oct}).code == 0);
    ::setenv("CURV_PIVOT_BUDGET", "1", 1);
    RunResult r = run({"search", "--mode", "euler", "--threads", "1", oct});
    ::unsetenv("CURV_PIVOT_BUDGET");
    CHECK(r.code == 3);
}

TEST_CASE("uniform curvature beyond the exhaustive budget needs --sample", "[cli]") {
    TempDir tmp;
    std::string ico = (tmp.path / "ico.json").string();
    REQUIRE(run({"build", "--kind", "icosa", "--out", ico}).code == 0);
    RunResult refuse = run({"curvature", "--uniform", ico});
    CHECK(refuse.code == cli::kExitData);
    CHECK_THAT(refuse.err, Catch::Matchers::ContainsSubstring("sampling"));

    RunResult ok = run({"curvature", "--uniform", "--sample", "500", "--seed", "3", ico});
    REQUIRE(ok.code == 0);
    CHECK(ok.json()["method"] == "uniform-sampled");
    CHECK(ok.json()["samples"] == 500);
    CHECK(ok.json().contains("max_std_error"));
    RunResult again = run({"curvature", "--uniform", "--sample", "500", "--seed", "3", ico});
    CHECK(ok.out == again.out);
}

TEST_CASE("help exits zero", "[cli]") {
    CHECK(run({"--help"}).code == 0);
}
