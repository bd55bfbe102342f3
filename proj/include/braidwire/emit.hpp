#pragma once

#include <string>
#include <vector>

#include "braidwire/braid.hpp"
#include "braidwire/gates.hpp"

namespace braidwire {

// Flat circuit ready for serialization. Qubit indices are 0-based
// register indices (braid qubit 1 is register 0); ops keep their source
// window so text formats can interleave residues in time order.
struct CircuitOp {
    std::string name;         // library gate name (H, S2dg, CZ, Z1Z2, ...)
    std::vector<int> qubits;  // 0-based register indices
    size_t start = 0;         // source window in the braid word
    size_t length = 0;
    std::string from, to;
};

struct CircuitResidue {
    std::vector<Crossing> letters;
    size_t start = 0;
    std::string from, to;
};

struct CircuitDocument {
    int qubits = 0;
    std::vector<CircuitOp> ops;
    std::vector<CircuitResidue> residues;
};

// Resolves recognized gate names to register indices.
CircuitDocument circuit_document(const RecognizedCircuit& circuit);

// OPENQASM 2.0 subset: header, one quantum register, one line per op.
// Z1Z2 expands to two z lines; residues become comment lines; CNOT has
// no mapping and raises ValidationError.
std::string emit_qasm(const CircuitDocument& doc);

// Statement-level re-parse of the emitted subset (version line, include,
// one qreg, ops from {h, s, sdg, x, y, z, id, cz} with in-range
// operands). Returns the op-statement count; throws ParseError on any
// violation.
size_t qasm_check(const std::string& text);

// Gate windows of a recognition, for drawing boxes over the braid.
struct Overlay {
    size_t startCol = 0;  // letter columns, inclusive
    size_t endCol = 0;
    std::string label;
};

std::vector<Overlay> gate_overlays(const RecognizedCircuit& circuit);

// Fixed-width text diagram: one row per strand (strand 1 on top), one
// 7-column cell per letter, caption row with the sigma symbols,
// occupant labels on both ends. Empty labels fall back to position
// numbers.
std::string render_braid_ascii(const BraidWord& word,
                               const std::vector<std::string>& labels);

// SVG braid diagram, time left to right, strand 1 topmost. The strand
// entering a positive crossing from the lower-numbered position is
// drawn continuous (in front); the other one is broken at the crossing.
// Output is byte-deterministic.
std::string render_svg_braid(const BraidWord& word,
                             const std::vector<std::string>& labels,
                             const std::vector<Overlay>& overlays = {});

// SVG circuit diagram: one wire per qubit, one column per op or
// residue in source order.
std::string render_svg_circuit(const CircuitDocument& doc);

// Writes via a temp file in the same directory plus rename, so readers
// never observe a half-written file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace braidwire
