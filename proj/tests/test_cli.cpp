#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "condgeo/cli.hpp"
#include "condgeo/io.hpp"
#include "fixtures.hpp"

using namespace condgeo;
namespace fs = std::filesystem;

namespace {

const std::string kPlaneExample = std::string(CONDGEO_MODELS_DIR) + "/plane_example.json";
const std::string kAbstractExample = std::string(CONDGEO_MODELS_DIR) + "/abstract_example.json";

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("condgeo_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("model files round trip") {
    TempDir tmp;

    LoadedModel fig = loadModelFile(kPlaneExample);
    Json figJson = modelToJson(fig);
    writeFile(tmp.file("fig.json"), figJson.dump());
    CHECK(modelToJson(loadModelFile(tmp.file("fig.json"))) == figJson);

    LoadedModel run = loadModelFile(kAbstractExample);
    Json runJson = modelToJson(run);
    writeFile(tmp.file("run.json"), runJson.dump());
    CHECK(modelToJson(loadModelFile(tmp.file("run.json"))) == runJson);
}

TEST_CASE("decimal literals load exactly") {
    LoadedModel fig = loadModelFile(kPlaneExample);
    const PlaneModel& m = std::get<PlaneModel>(fig);
    CHECK(m.points[2].x == Rational(12, 5));    // "2.4"
    CHECK(m.points[3].x == Rational(19, 10));   // "1.9"
    CHECK(m.points[3].y == Rational(43, 10));   // "4.3"
    CHECK(m.points[4].y == Rational(3, 2));     // "1.5"
}

TEST_CASE("check against the five-point plane file") {
    CliResult trueCond = cli({"check", "--model", kPlaneExample, "--formula", "(p|q) ~> r"});
    CHECK(trueCond.code == 0);
    CHECK(trueCond.out.find("\"holds\": true") != std::string::npos);

    CliResult falseCond = cli({"check", "--model", kPlaneExample, "--formula", "p ~> r"});
    CHECK(falseCond.code == 1);

    // Non-extreme clauses go through the materialized geometry.
    CliResult general =
        cli({"check", "--model", kPlaneExample, "--formula", "(p|q) ~> r", "--clause", "general"});
    CHECK(general.code == 0);
}

TEST_CASE("check against the nine-set abstract file") {
    std::string alpha = "(T ~> p) & (q ~> p) & (~(p <-> q) ~> p) & ~(~q ~> p)"
                        " & ~((p <-> q) ~> p) & ~(~p ~> ~q)";
    CHECK(cli({"check", "--model", kAbstractExample, "--formula", alpha}).code == 0);
    CHECK(cli({"check", "--model", kAbstractExample, "--formula", "~q ~> p"}).code == 1);

    // Level-0 formulas report their extension.
    CliResult ext = cli({"check", "--model", kAbstractExample, "--formula", "p | ~p"});
    CHECK(ext.code == 0);
    CliResult part = cli({"check", "--model", kAbstractExample, "--formula", "p"});
    CHECK(part.code == 1);
    CHECK(part.out.find("extension") != std::string::npos);
}

TEST_CASE("embed then check the six-conjunct formula on the output") {
    TempDir tmp;
    std::string alpha = "(T ~> p) & (q ~> p) & (~(p <-> q) ~> p) & ~(~q ~> p)"
                        " & ~((p <-> q) ~> p) & ~(~p ~> ~q)";
    CliResult embed = cli({"embed", "--model", kAbstractExample, "--out", tmp.file("plane.json"),
                           "--svg", tmp.file("plane.svg"), "--formula", alpha});
    REQUIRE(embed.code == 0);
    Json cert = Json::parse(embed.out);
    CHECK(cert.at("verdict") == "pass");
    CHECK(cert.at("impossible").empty());
    CHECK(cert.at("truth").size() == 1);
    CHECK(cert.at("truth")[0].at("abstract") == true);
    CHECK(cert.at("truth")[0].at("plane") == true);
    CHECK(cert.at("points").size() == cert.at("chains").size() * 4);

    CHECK(cli({"check", "--model", tmp.file("plane.json"), "--formula", alpha}).code == 0);
    CHECK(fs::exists(tmp.file("plane.svg")));
}

TEST_CASE("validate exit codes per class") {
    std::string gamma1 = "(p|q~>p)|(p|q~>q)";
    CHECK(cli({"validate", "--formula", gamma1, "--class", "chain", "--bound", "4"}).code == 0);

    CliResult refuted = cli({"validate", "--formula", gamma1, "--class", "all", "--bound", "4"});
    CHECK(refuted.code == 1);

    // The reported countermodel re-confirms false through `check`.
    TempDir tmp;
    Json verdict = Json::parse(refuted.out);
    REQUIRE(verdict.at("verdict") == "countermodel");
    writeFile(tmp.file("counter.json"), verdict.at("model").dump());
    CHECK(cli({"check", "--model", tmp.file("counter.json"), "--formula", gamma1}).code == 1);
}

TEST_CASE("validate without a class") {
    CHECK(cli({"validate", "--formula", "p ~> p"}).code == 0);
    CHECK(cli({"validate", "--formula", "(p|q~>p)|(p|q~>q)"}).code == 1);

    // Three letters falls back to the randomized refuter.
    std::string gamma2 = "(p|q|r ~> p|q) | (p|q|r ~> p|r) | (p|q|r ~> q|r)";
    CHECK(cli({"validate", "--formula", gamma2}).code == 1);

    // A valid three-letter formula exhausts the budget: unknown.
    CliResult unknown = cli({"validate", "--formula", "p|q|r ~> p|q|r", "--budget", "500"});
    CHECK(unknown.code == 2);
}

TEST_CASE("decompose emits chains") {
    CliResult r = cli({"decompose", "--model", kAbstractExample});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.contains("chains"));
    CHECK(j.at("chains").size() >= 2);
    for (const auto& chain : j.at("chains")) CHECK(chain.size() == 4);
}

TEST_CASE("enumerate streams geometries") {
    CliResult all = cli({"enumerate", "--n", "2"});
    CHECK(all.code == 0);
    int lines = 0;
    std::istringstream in(all.out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 6);

    CliResult withEmpty = cli({"enumerate", "--n", "2", "--require-empty"});
    int lines2 = 0;
    std::istringstream in2(withEmpty.out);
    while (std::getline(in2, line))
        if (!line.empty()) ++lines2;
    CHECK(lines2 == 3);

    CHECK(cli({"enumerate", "--n", "9"}).code == 3);
}

TEST_CASE("verify-morphism") {
    TempDir tmp;
    // Identity on the nine-set example.
    Json identity;
    identity["map"] = Json::object();
    for (const char* w : {"pq", "pq'", "p'q", "p'q'"})
        identity["map"][w] = w;
    writeFile(tmp.file("id.json"), identity.dump());
    CHECK(cli({"verify-morphism", "--from", kAbstractExample, "--to", kAbstractExample, "--map",
               tmp.file("id.json"), "--strong"})
              .code == 0);

    // Collapsing everything onto one world is a morphism here but cannot
    // realize the whole target family.
    Json collapse;
    collapse["map"] = Json::object();
    for (const char* w : {"pq", "pq'", "p'q", "p'q'"})
        collapse["map"][w] = "pq";
    writeFile(tmp.file("collapse.json"), collapse.dump());
    CHECK(cli({"verify-morphism", "--from", kAbstractExample, "--to", kAbstractExample, "--map",
               tmp.file("collapse.json")})
              .code == 0);
    CliResult notStrong = cli({"verify-morphism", "--from", kAbstractExample, "--to",
                               kAbstractExample, "--map", tmp.file("collapse.json"), "--strong"});
    CHECK(notStrong.code == 1);
    CHECK(Json::parse(notStrong.out).contains("witness"));

    // Quotient onto the chain with a at the bottom: the image {b} of the
    // upper members is not upward closed there.
    Json chain;
    chain["worlds"] = {"a", "b"};
    chain["convex"] = {Json::array(), {"a"}, {"a", "b"}};
    writeFile(tmp.file("chain.json"), chain.dump());
    Json quotient;
    quotient["map"] = {{"pq", "a"}, {"pq'", "a"}, {"p'q", "b"}, {"p'q'", "b"}};
    writeFile(tmp.file("quotient.json"), quotient.dump());
    CliResult r = cli({"verify-morphism", "--from", kAbstractExample, "--to", tmp.file("chain.json"),
                       "--map", tmp.file("quotient.json")});
    CHECK(r.code == 1);

    // Partial maps are rejected as input errors.
    Json partial;
    partial["map"] = {{"pq", "pq"}};
    writeFile(tmp.file("partial.json"), partial.dump());
    CHECK(cli({"verify-morphism", "--from", kAbstractExample, "--to", kAbstractExample, "--map",
               tmp.file("partial.json")})
              .code == 3);
}

TEST_CASE("render writes deterministic svg") {
    TempDir tmp;
    CHECK(cli({"render", "--model", kPlaneExample, "--svg", tmp.file("a.svg"), "--highlight", "p & r | q & r"})
              .code == 0);
    CHECK(cli({"render", "--model", kPlaneExample, "--svg", tmp.file("b.svg"), "--highlight", "p & r | q & r"})
              .code == 0);
    CHECK(readFile(tmp.file("a.svg")) == readFile(tmp.file("b.svg")));
    CHECK(readFile(tmp.file("a.svg")).find("<polygon") != std::string::npos);

    CHECK(cli({"render", "--model", kAbstractExample, "--svg", tmp.file("no.svg")}).code == 3);
}

TEST_CASE("embedding a model whose worlds are all impossible") {
    TempDir tmp;
    // Every member contains the sole world, so it is impossible; the plane
    // model is empty and conditionals stay vacuously true on both sides.
    writeFile(tmp.file("core.json"), R"({"worlds":["a"],"convex":[["a"]],"valuation":{"p":["a"]}})");
    CliResult embed = cli({"embed", "--model", tmp.file("core.json"), "--out",
                           tmp.file("empty.json"), "--formula", "T ~> F", "--formula", "p ~> F"});
    REQUIRE(embed.code == 0);
    Json cert = Json::parse(embed.out);
    CHECK(cert.at("impossible") == Json::array({"a"}));
    CHECK(cert.at("points").empty());
    CHECK(cert.at("verdict") == "pass");
    for (const auto& row : cert.at("truth")) {
        CHECK(row.at("abstract") == true);
        CHECK(row.at("plane") == true);
    }
    CHECK(cli({"check", "--model", tmp.file("empty.json"), "--formula", "T ~> F"}).code == 0);
}

TEST_CASE("input errors exit with code 3") {
    TempDir tmp;
    CHECK(cli({"check", "--model", "/nonexistent.json", "--formula", "p ~> p"}).code == 3);
    CHECK(cli({"check", "--model", kPlaneExample, "--formula", "p ~>"}).code == 3);
    CHECK(cli({"validate", "--formula", "(p ~> q) ~> r"}).code == 3);
    CHECK(cli({"bogus-subcommand"}).code == 3);

    writeFile(tmp.file("float.json"), R"({"points":[{"id":"a","x":2.4,"y":0}],"valuation":{}})");
    CHECK(cli({"check", "--model", tmp.file("float.json"), "--formula", "T ~> T"}).code == 3);

    writeFile(tmp.file("notgeom.json"),
              R"({"worlds":["a","b"],"convex":[["a","b"],[]],"valuation":{}})");
    CHECK(cli({"check", "--model", tmp.file("notgeom.json"), "--formula", "T ~> T"}).code == 3);
}

}  // TEST_SUITE
