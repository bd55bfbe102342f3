#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using braidwire::testsupport::fixture;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch() {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() /
                   ("braidwire_cli_" + std::to_string(++counter));
    fs::create_directories(dir);
    return dir;
}

// Runs the installed binary through the shell; args must not need
// quoting.
RunResult run(const std::string& args, const std::string& envPrefix = "") {
    fs::path dir = scratch();
    fs::path outFile = dir / "stdout.txt";
    fs::path errFile = dir / "stderr.txt";
    std::string cmd = envPrefix + BRAIDWIRE_BIN " " + args + " >" +
                      outFile.string() + " 2>" + errFile.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(outFile);
    r.err = slurp(errFile);
    return r;
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("braid subcommand writes the word") {
    fs::path out = scratch();
    RunResult r = run("braid " + fixture("hadamard_word.csv") + " --out " +
                      out.string() + " --format json,ascii,svg");
    CAPTURE(r.err);
    CHECK(r.code == 0);
    CHECK(has(r.out, "strands 4"));
    CHECK(has(r.out, "letters 3"));

    Json j = Json::parse(slurp(out / "braid.json"));
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["strands"] == 4);
    CHECK(j["letters"].size() == 3);
    CHECK(j["letters"][0]["strand"] == 1);

    CHECK(has(slurp(out / "braid.txt"), "σ2"));
    std::string svg = slurp(out / "braid.svg");
    CHECK(svg.rfind("<?xml", 0) == 0);
}

TEST_CASE("braid subcommand with ticker selection") {
    fs::path out = scratch();
    RunResult r = run("braid " + fixture("dow7_window.csv") +
                      " --tickers PG,NKE,HD,UNH,DIS,AXP --out " + out.string());
    CHECK(r.code == 0);
    CHECK(has(r.out, "strands 6"));
    CHECK(has(r.out, "letters 3"));
    Json j = Json::parse(slurp(out / "braid.json"));
    CHECK(j["letters"][0]["strand"] == 4);
    CHECK(j["letters"][1]["sign"] == -1);
}

TEST_CASE("circuit subcommand recognizes the hadamard fixture") {
    fs::path out = scratch();
    RunResult r = run("circuit " + fixture("hadamard_word.csv") + " --out " +
                      out.string() + " --format json,qasm,svg,ascii");
    CAPTURE(r.err);
    CHECK(r.code == 0);
    CHECK(has(r.out, "gates 1"));

    Json j = Json::parse(slurp(out / "circuit.json"));
    CHECK(j["items"][0]["name"] == "H");
    CHECK(j["word"]["letters"].size() == 3);

    std::string qasm = slurp(out / "circuit.qasm");
    CHECK(has(qasm, "qreg q[1];"));
    CHECK(has(qasm, "h q[0];"));

    CHECK(slurp(out / "circuit.svg").rfind("<?xml", 0) == 0);
    std::string braidSvg = slurp(out / "reduced_braid.svg");
    CHECK(has(braidSvg, ">H<"));
    CHECK(has(slurp(out / "reduced_braid.txt"), "σ1"));
}

TEST_CASE("circuit subcommand on an identity word") {
    fs::path out = scratch();
    RunResult r =
        run("circuit " + fixture("identity_word.csv") + " --out " + out.string());
    CHECK(r.code == 0);
    CHECK(has(r.out, "gates 0"));
    std::string qasm = slurp(out / "circuit.qasm");
    CHECK(has(qasm, "qreg q[1];"));
    CHECK_FALSE(has(qasm, "h q["));
}

TEST_CASE("circuit subcommand emits cz") {
    fs::path out = scratch();
    RunResult r =
        run("circuit " + fixture("cz_word.csv") + " --out " + out.string());
    CHECK(r.code == 0);
    CHECK(has(slurp(out / "circuit.qasm"), "cz q[0],q[1];"));
}

TEST_CASE("circuit output is byte deterministic across runs") {
    fs::path a = scratch();
    fs::path b = scratch();
    for (const fs::path& out : {a, b}) {
        RunResult r = run("circuit " + fixture("cz_word.csv") + " --out " +
                          out.string() + " --format json,qasm,svg,ascii");
        REQUIRE(r.code == 0);
    }
    for (const char* name : {"circuit.json", "circuit.qasm", "circuit.svg",
                             "reduced_braid.svg", "reduced_braid.txt"})
        CHECK(slurp(a / name) == slurp(b / name));
}

TEST_CASE("verify subcommand") {
    RunResult r = run("verify");
    CHECK(r.code == 0);
    CHECK(has(r.out, "all hard checks passed"));
    CHECK(has(r.out, "INFO"));
    CHECK_FALSE(has(r.out, "FAIL"));

    RunResult bad = run("verify --corrupt-tables");
    CHECK(bad.code == 1);
    CHECK(has(bad.out, "FAIL"));
}

TEST_CASE("search subcommand") {
    RunResult r = run("search H --strands 4 --max-len 3");
    CHECK(r.code == 0);
    CHECK(has(r.out, "count 12"));
    CHECK(has(r.out, "σ1·σ2·σ1"));

    RunResult none = run("search Y --strands 4 --max-len 2");
    CHECK(none.code == 0);
    CHECK(has(none.out, "count 0"));

    RunResult unknown = run("search QQQ --strands 4");
    CHECK(unknown.code == 2);

    RunResult badLen = run("search H --strands 4 --max-len 20");
    CHECK(badLen.code == 2);
}

TEST_CASE("validate subcommand") {
    RunResult good = run("validate " + fixture("dow4_spring.csv"));
    CHECK(good.code == 0);
    CHECK(has(good.out, "admissible"));

    RunResult bad = run("validate " + fixture("wide_spread_pair.csv"));
    CHECK(bad.code == 2);
    CHECK(has(bad.out + bad.err, "fewer than four"));
    CHECK(has(bad.out + bad.err, "price spread ratio"));
}

TEST_CASE("error exit codes") {
    fs::path out = scratch();
    // Missing input file: parse failure.
    CHECK(run("braid /no/such/file.csv --out " + out.string()).code == 3);
    // Odd ticker count: validation failure.
    CHECK(run("braid " + fixture("dow7_window.csv") + " --out " + out.string())
              .code == 2);
    // Malformed prices: parse failure.
    fs::path bad = out / "bad.csv";
    std::ofstream(bad) << "date,AA,BB,CC,DD\n2024-01-01,1,2,x,4\n";
    CHECK(run("braid " + bad.string() + " --out " + out.string()).code == 3);
    // Unknown flag: usage failure.
    CHECK(run("braid --frobnicate").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("help is available") {
    RunResult r = run("--help");
    CHECK(r.code == 0);
    CHECK(has(r.out, "braid"));
    CHECK(has(r.out, "circuit"));
    CHECK(has(r.out, "verify"));
}

TEST_CASE("config file via environment variable") {
    fs::path out = scratch();
    fs::path cfg = out / "braidwire.toml";
    std::ofstream(cfg) << "[circuit]\nmax-window=4\n";
    RunResult r = run("circuit " + fixture("hadamard_word.csv") + " --out " +
                          out.string(),
                      "BRAIDWIRE_CONFIG=" + cfg.string() + " ");
    CAPTURE(r.err);
    CHECK(r.code == 0);
    CHECK(has(r.out, "gates 1"));
}
