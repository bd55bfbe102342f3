#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "braidwire/braid.hpp"
#include "braidwire/emit.hpp"
#include "braidwire/errors.hpp"
#include "braidwire/gates.hpp"
#include "braidwire/ingest.hpp"
#include "support.hpp"

using namespace braidwire;
using braidwire::testsupport::fixture;

namespace {

RecognizedCircuit recognize_fixture(const std::string& name) {
    PortfolioSeries series = load_csv(fixture(name));
    BraidWord word = free_reduce(braid_word(series));
    IsingRep rep = ising_rep(word.strands);
    return recognize(word, rep, standard_library(rep.qubits()));
}

}  // namespace

TEST_CASE("circuit document resolves register indices") {
    RecognizedCircuit rec = recognize_fixture("hadamard_word.csv");
    CircuitDocument doc = circuit_document(rec);
    CHECK(doc.qubits == 1);
    REQUIRE(doc.ops.size() == 1);
    CHECK(doc.ops[0].name == "H");
    CHECK(doc.ops[0].qubits == std::vector<int>{0});
    CHECK(doc.ops[0].from == "2024-01-01");
    CHECK(doc.ops[0].to == "2024-01-04");
    CHECK(doc.residues.empty());

    RecognizedCircuit cz = recognize_fixture("cz_word.csv");
    CircuitDocument two = circuit_document(cz);
    CHECK(two.qubits == 2);
    REQUIRE(two.ops.size() == 1);
    CHECK(two.ops[0].name == "CZ");
    CHECK(two.ops[0].qubits == std::vector<int>{0, 1});

    RecognizedCircuit z1z2 =
        recognize(make_word(6, {{3, 1}, {3, 1}}), ising_rep(6),
                  standard_library(2));
    CircuitDocument zz = circuit_document(z1z2);
    REQUIRE(zz.ops.size() == 1);
    CHECK(zz.ops[0].name == "Z1Z2");
    CHECK(zz.ops[0].qubits == std::vector<int>{0, 1});
}

TEST_CASE("qasm emission") {
    CircuitDocument doc = circuit_document(recognize_fixture("hadamard_word.csv"));
    CHECK(emit_qasm(doc) ==
          "OPENQASM 2.0;\n"
          "include \"qelib1.inc\";\n"
          "// braid qubits are numbered from 1; register index = qubit - 1\n"
          "qreg q[1];\n"
          "h q[0];\n");

    CircuitDocument cz = circuit_document(recognize_fixture("cz_word.csv"));
    std::string text = emit_qasm(cz);
    CHECK(text.find("qreg q[2];\n") != std::string::npos);
    CHECK(text.find("cz q[0],q[1];\n") != std::string::npos);

    // An identity word leaves nothing but the header.
    CircuitDocument empty =
        circuit_document(recognize_fixture("identity_word.csv"));
    std::string header = emit_qasm(empty);
    CHECK(header ==
          "OPENQASM 2.0;\n"
          "include \"qelib1.inc\";\n"
          "// braid qubits are numbered from 1; register index = qubit - 1\n"
          "qreg q[1];\n");

    // Z1Z2 expands to two statements.
    CircuitDocument zz = circuit_document(recognize(
        make_word(6, {{3, 1}, {3, 1}}), ising_rep(6), standard_library(2)));
    std::string zzText = emit_qasm(zz);
    CHECK(zzText.find("z q[0];\nz q[1];\n") != std::string::npos);
}

TEST_CASE("qasm residues become comments") {
    BraidWord w = make_word(4, {{2, 1}});
    w.letters[0].from = "2024-01-01";
    w.letters[0].to = "2024-01-02";
    CircuitDocument doc = circuit_document(
        recognize(w, ising_rep(4), standard_library(1)));
    REQUIRE(doc.residues.size() == 1);
    std::string text = emit_qasm(doc);
    CHECK(text.find("// residue: σ2 (2024-01-01 -> 2024-01-02)\n") !=
          std::string::npos);
    // Comments do not count as ops.
    CHECK(qasm_check(text) == 0);
}

TEST_CASE("qasm reparse accepts every emitted fixture") {
    for (const char* name : {"hadamard_word.csv", "x_word.csv",
                             "identity_word.csv", "cz_word.csv"}) {
        CircuitDocument doc = circuit_document(recognize_fixture(name));
        CHECK_NOTHROW(qasm_check(emit_qasm(doc)));
    }
    CircuitDocument zz = circuit_document(recognize(
        make_word(6, {{3, 1}, {3, 1}}), ising_rep(6), standard_library(2)));
    CHECK(qasm_check(emit_qasm(zz)) == 2);
}

TEST_CASE("qasm reparse rejects tampered text") {
    std::string good = emit_qasm(
        circuit_document(recognize_fixture("hadamard_word.csv")));
    CHECK(qasm_check(good) == 1);

    auto swap = [&](const std::string& from, const std::string& to) {
        std::string t = good;
        t.replace(t.find(from), from.size(), to);
        return t;
    };
    CHECK_THROWS_AS(qasm_check(swap("OPENQASM 2.0;", "OPENQASM 3.0;")),
                    ParseError);
    CHECK_THROWS_AS(qasm_check(swap("include \"qelib1.inc\";", "include \"x\";")),
                    ParseError);
    CHECK_THROWS_AS(qasm_check(swap("h q[0];", "h q[0]")), ParseError);
    CHECK_THROWS_AS(qasm_check(swap("h q[0];", "h q[1];")), ParseError);
    CHECK_THROWS_AS(qasm_check(swap("h q[0];", "cx q[0],q[1];")), ParseError);
    CHECK_THROWS_AS(qasm_check(swap("h q[0];", "cz q[0],q[0];")), ParseError);
    CHECK_THROWS_AS(qasm_check("OPENQASM 2.0;\n"), ParseError);
}

TEST_CASE("gates outside the qasm subset are refused") {
    CircuitDocument doc;
    doc.qubits = 2;
    doc.ops.push_back({"CNOT", {0, 1}, 0, 1, "", ""});
    CHECK_THROWS_AS(emit_qasm(doc), ValidationError);

    CircuitDocument none;
    none.qubits = 0;
    CHECK_THROWS_AS(emit_qasm(none), ValidationError);
}

TEST_CASE("ascii braid diagram") {
    BraidWord w = make_word(4, {{2, 1}});
    std::string art = render_braid_ascii(w, {"A", "B", "C", "D"});
    CHECK(art ==
          "A ─────── A\n"
          "B ──╲ ╱── C\n"
          "C ──╱ ╲── B\n"
          "D ─────── D\n"
          "    σ2\n");

    // Empty words render straight strands without a caption.
    std::string flat = render_braid_ascii(make_word(4, {}), {});
    CHECK(flat ==
          "1 ─────── 1\n"
          "2 ─────── 2\n"
          "3 ─────── 3\n"
          "4 ─────── 4\n");
}

TEST_CASE("ascii diagram tracks occupants through crossings") {
    BraidWord w = make_word(4, {{1, 1}, {2, 1}, {1, 1}});
    std::string art = render_braid_ascii(w, {"AA", "BB", "CC", "DD"});
    // Final order after s1 s2 s1: position 1 holds CC, 2 holds BB, 3 AA.
    CHECK(art.find("AA ") == 0);
    CHECK(art.find(" CC\n") != std::string::npos);
    CHECK(art.find(" AA\n") != std::string::npos);
    CHECK(art.find("σ1") != std::string::npos);
    CHECK(art.find("σ2") != std::string::npos);
}

TEST_CASE("svg braid diagram") {
    BraidWord w = make_word(4, {{1, 1}, {2, -1}});
    std::vector<std::string> labels = {"PG", "NKE", "HD", "UNH"};
    std::string svg = render_svg_braid(w, labels);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("class=\"crossing over\"") != std::string::npos);
    CHECK(svg.find("class=\"crossing under\"") != std::string::npos);
    CHECK(svg.find("PG") != std::string::npos);
    CHECK(svg.find("σ2⁻¹") != std::string::npos);
    CHECK(render_svg_braid(w, labels) == svg);

    RecognizedCircuit rec = recognize_fixture("hadamard_word.csv");
    std::string overlaid =
        render_svg_braid(rec.word, {}, gate_overlays(rec));
    CHECK(overlaid.find(">H<") != std::string::npos);
}

TEST_CASE("svg circuit diagram") {
    CircuitDocument doc = circuit_document(recognize_fixture("cz_word.csv"));
    std::string svg = render_svg_circuit(doc);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("q[0]") != std::string::npos);
    CHECK(svg.find("q[1]") != std::string::npos);
    CHECK(render_svg_circuit(doc) == svg);

    CircuitDocument h = circuit_document(recognize_fixture("hadamard_word.csv"));
    std::string hsvg = render_svg_circuit(h);
    CHECK(hsvg.find(">H<") != std::string::npos);
}

TEST_CASE("overlay windows cover the recognized gates") {
    RecognizedCircuit rec = recognize_fixture("hadamard_word.csv");
    auto overlays = gate_overlays(rec);
    REQUIRE(overlays.size() == 1);
    CHECK(overlays[0].startCol == 0);
    CHECK(overlays[0].endCol == 2);
    CHECK(overlays[0].label == "H");
}

TEST_CASE("atomic file writes") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "braidwire_emit_test";
    fs::create_directories(dir);
    fs::path target = dir / "out.txt";

    write_file_atomic(target.string(), "first\n");
    write_file_atomic(target.string(), "second\n");
    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "second\n");
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));

    CHECK_THROWS_AS(
        write_file_atomic((dir / "no" / "such" / "dir" / "x").string(), "y"),
        ParseError);
    fs::remove_all(dir);
}
