#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidwire/braid.hpp"
#include "braidwire/cyclo.hpp"
#include "braidwire/rep.hpp"

namespace braidwire {

struct GateDef {
    std::string name;
    int qubitCount = 1;
    CycloMatrix matrix;
    std::string displaySymbol;
};

using GateLibrary = std::vector<GateDef>;

// Named target unitaries per qubit count.
// 1 qubit: I, H, S, Sdg, X, Y, Z.
// 2 qubits: the non-identity 1-qubit gates embedded on each qubit
//           (H1, H2, S1, S2, S1dg, S2dg, X1, X2, Y1, Y2, Z1, Z2), the
//           parallel pair Z1Z2, CZ and CNOT.
// 3 qubits: the analogous embeddings plus CZ on adjacent pairs (CZ12,
//           CZ23).
GateLibrary standard_library(int qubits);

// nullptr when no gate of that name exists.
const GateDef* find_gate(const GateLibrary& library, const std::string& name);

// Tensor embedding of a 1-qubit gate with identities elsewhere; the
// first qubit is the most significant index. Names gain the qubit
// number after the base letter: (Sdg, 2, 3) -> S2dg.
GateDef gate_on_qubit(const GateDef& base, int qubit, int totalQubits);

// One window of a scanned braid word: either a recognized gate (the
// window's product equals phase * gate.matrix exactly) or a residue of
// unmatched letters kept verbatim.
struct CircuitItem {
    enum class Kind { Gate, Residue };
    Kind kind = Kind::Gate;
    std::string name;      // gate name; empty for residues
    size_t start = 0;      // window [start, start + length) in the word
    size_t length = 0;
    CycloValue phase;      // gates only
    std::string from, to;  // tick timestamps when the word has them
};

struct RecognizedCircuit {
    int strands = 0;
    int qubits = 0;
    BraidWord word;  // the word that was scanned
    std::vector<CircuitItem> items;
    // Windows whose product was projectively the identity. They are
    // dropped from the circuit but recorded so the items plus the
    // elided windows always partition the word.
    std::vector<std::pair<size_t, size_t>> elided;  // (start, length)
};

// Greedy left-to-right segmentation: at each position take the longest
// window (up to maxWindow letters) whose product is projectively the
// identity (elided) or a library gate; ties break toward the longest
// window, then the earliest library entry. Letters matching nothing
// accumulate into residues. The input should already be free-reduced.
RecognizedCircuit recognize(const BraidWord& word, const IsingRep& rep,
                            const GateLibrary& library, int maxWindow = 6);

// Exhaustive search over all words of 1..maxLength letters in the
// 2(strands-1) signed generators whose product is projectively the
// target. Sorted by length, then lexicographically with letter order
// sigma_1, sigma_1^-1, sigma_2, ... maxLength is capped at 8.
// The _serial variant is the plain reference; the default one splits
// the search by first letter across threads and merges in the same
// deterministic order.
std::vector<BraidWord> enumerate_realizations(const GateDef& target,
                                              const IsingRep& rep,
                                              int maxLength);
std::vector<BraidWord> enumerate_realizations_serial(const GateDef& target,
                                                     const IsingRep& rep,
                                                     int maxLength);

// Report shape: {schemaVersion, strands, qubits, items: [{type:
// "gate"|"residue", ...}], elided: [{start, length}]}.
Json recognition_to_json(const RecognizedCircuit& circuit);

}  // namespace braidwire
