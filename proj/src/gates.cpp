#include "braidwire/gates.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace braidwire {

namespace {

GateDef one_qubit(const std::string& name, const std::string& symbol,
                  CycloMatrix m) {
    return GateDef{name, 1, std::move(m), symbol};
}

CycloMatrix hadamard() {
    const CycloValue r = CycloValue::inv_sqrt2();
    CycloMatrix m(2);
    m.at(0, 0) = r;
    m.at(0, 1) = r;
    m.at(1, 0) = r;
    m.at(1, 1) = -r;
    return m;
}

std::vector<GateDef> one_qubit_basis() {
    const CycloValue one = CycloValue::one();
    const CycloValue i = CycloValue::i();

    CycloMatrix s(2);
    s.at(0, 0) = one;
    s.at(1, 1) = i;

    CycloMatrix sdg(2);
    sdg.at(0, 0) = one;
    sdg.at(1, 1) = -i;

    CycloMatrix x(2);
    x.at(0, 1) = one;
    x.at(1, 0) = one;

    CycloMatrix y(2);
    y.at(0, 1) = -i;
    y.at(1, 0) = i;

    CycloMatrix z(2);
    z.at(0, 0) = one;
    z.at(1, 1) = -one;

    return {one_qubit("I", "I", CycloMatrix::identity(2)),
            one_qubit("H", "H", hadamard()),
            one_qubit("S", "S", s),
            one_qubit("Sdg", "S†", sdg),
            one_qubit("X", "X", x),
            one_qubit("Y", "Y", y),
            one_qubit("Z", "Z", z)};
}

CycloMatrix cz_matrix() {
    CycloMatrix m = CycloMatrix::identity(4);
    m.at(3, 3) = -CycloValue::one();
    return m;
}

CycloMatrix cnot_matrix() {
    CycloMatrix m(4);
    m.at(0, 0) = CycloValue::one();
    m.at(1, 1) = CycloValue::one();
    m.at(2, 3) = CycloValue::one();
    m.at(3, 2) = CycloValue::one();
    return m;
}

}  // namespace

GateLibrary standard_library(int qubits) {
    if (qubits < 1 || qubits > 3)
        throw std::invalid_argument("gate library covers 1 to 3 qubits, got " +
                                    std::to_string(qubits));
    std::vector<GateDef> basis = one_qubit_basis();
    if (qubits == 1) return basis;

    GateLibrary lib;
    for (const GateDef& base : basis) {
        if (base.name == "I") continue;  // identity windows are elided anyway
        for (int q = 1; q <= qubits; ++q)
            lib.push_back(gate_on_qubit(base, q, qubits));
    }

    if (qubits == 2) {
        const GateDef* z = find_gate(basis, "Z");
        lib.push_back(
            GateDef{"Z1Z2", 2, tensor(z->matrix, z->matrix), "Z1Z2"});
        lib.push_back(GateDef{"CZ", 2, cz_matrix(), "CZ"});
        lib.push_back(GateDef{"CNOT", 2, cnot_matrix(), "CNOT"});
    } else {
        CycloMatrix id2 = CycloMatrix::identity(2);
        lib.push_back(GateDef{"CZ12", 3, tensor(cz_matrix(), id2), "CZ"});
        lib.push_back(GateDef{"CZ23", 3, tensor(id2, cz_matrix()), "CZ"});
    }
    return lib;
}

const GateDef* find_gate(const GateLibrary& library, const std::string& name) {
    for (const GateDef& g : library)
        if (g.name == name) return &g;
    return nullptr;
}

GateDef gate_on_qubit(const GateDef& base, int qubit, int totalQubits) {
    if (base.qubitCount != 1)
        throw std::invalid_argument("gate_on_qubit embeds 1-qubit gates only");
    if (qubit < 1 || qubit > totalQubits)
        throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                    " out of range 1.." +
                                    std::to_string(totalQubits));

    CycloMatrix acc(1);
    acc.at(0, 0) = CycloValue::one();
    CycloMatrix id2 = CycloMatrix::identity(2);
    for (int q = 1; q <= totalQubits; ++q)
        acc = tensor(acc, q == qubit ? base.matrix : id2);

    std::string stem = base.name;
    std::string suffix;
    if (stem.size() > 2 && stem.substr(stem.size() - 2) == "dg") {
        suffix = "dg";
        stem.resize(stem.size() - 2);
    }
    GateDef out;
    out.name = stem + std::to_string(qubit) + suffix;
    out.qubitCount = totalQubits;
    out.matrix = std::move(acc);
    out.displaySymbol = base.displaySymbol;
    return out;
}

RecognizedCircuit recognize(const BraidWord& word, const IsingRep& rep,
                            const GateLibrary& library, int maxWindow) {
    if (maxWindow < 1)
        throw std::invalid_argument("maxWindow must be at least 1");
    if (word.strands != rep.strands)
        throw std::invalid_argument(
            "braid word over " + std::to_string(word.strands) +
            " strands fed to a " + std::to_string(rep.strands) +
            "-strand representation");
    for (const GateDef& g : library)
        if (g.qubitCount != rep.qubits())
            throw std::invalid_argument(
                "library gate " + g.name + " acts on " +
                std::to_string(g.qubitCount) + " qubits but the " +
                std::to_string(rep.strands) + "-strand model encodes " +
                std::to_string(rep.qubits()));

    RecognizedCircuit out;
    out.strands = rep.strands;
    out.qubits = rep.qubits();
    out.word = word;

    const CycloMatrix id = CycloMatrix::identity(rep.dim);
    const size_t len = word.letters.size();
    size_t pos = 0;
    while (pos < len) {
        // Grow the window one letter at a time, remembering the longest
        // match seen. Identity is tested before the library so a window
        // that cancels is always elided rather than labeled.
        size_t bestLen = 0;
        const GateDef* bestGate = nullptr;
        CycloValue bestPhase;
        CycloMatrix product = id;
        const size_t window = std::min<size_t>(
            static_cast<size_t>(maxWindow), len - pos);
        for (size_t take = 1; take <= window; ++take) {
            const Crossing& letter = word.letters[pos + take - 1];
            product = product * generator_matrix(rep, letter.strand,
                                                 letter.sign);
            ProjectiveMatch match = projective_equal(product, id);
            if (match.equal) {
                bestLen = take;
                bestGate = nullptr;
                continue;
            }
            for (const GateDef& gate : library) {
                match = projective_equal(product, gate.matrix);
                if (match.equal) {
                    bestLen = take;
                    bestGate = &gate;
                    bestPhase = match.phase;
                    break;
                }
            }
        }

        if (bestLen == 0) {
            // Unmatched letter: extend the current residue or open one.
            if (!out.items.empty() &&
                out.items.back().kind == CircuitItem::Kind::Residue &&
                out.items.back().start + out.items.back().length == pos) {
                CircuitItem& res = out.items.back();
                res.length += 1;
                res.to = word.letters[pos].to;
            } else {
                CircuitItem res;
                res.kind = CircuitItem::Kind::Residue;
                res.start = pos;
                res.length = 1;
                res.from = word.letters[pos].from;
                res.to = word.letters[pos].to;
                out.items.push_back(std::move(res));
            }
            pos += 1;
        } else if (bestGate == nullptr) {
            out.elided.emplace_back(pos, bestLen);
            pos += bestLen;
        } else {
            CircuitItem hit;
            hit.kind = CircuitItem::Kind::Gate;
            hit.name = bestGate->name;
            hit.start = pos;
            hit.length = bestLen;
            hit.phase = bestPhase;
            hit.from = word.letters[pos].from;
            hit.to = word.letters[pos + bestLen - 1].to;
            out.items.push_back(std::move(hit));
            pos += bestLen;
        }
    }
    return out;
}

namespace {

// Depth-first walk over all generator words in letter order
// sigma_1, sigma_1^-1, sigma_2, ... Words matching the target land in
// sink[length]; visiting order makes each bucket lexicographic.
struct RealizationSearch {
    const IsingRep& rep;
    const CycloMatrix& target;
    int maxLength;
    std::vector<Crossing> alphabet;
    std::vector<Crossing> path;
    std::vector<std::vector<BraidWord>>& sink;

    RealizationSearch(const IsingRep& r, const CycloMatrix& t, int maxLen,
                      std::vector<std::vector<BraidWord>>& s)
        : rep(r), target(t), maxLength(maxLen), sink(s) {
        for (int strand = 1; strand < rep.strands; ++strand) {
            for (int sign : {1, -1}) {
                Crossing c;
                c.strand = strand;
                c.sign = sign;
                alphabet.push_back(c);
            }
        }
    }

    void record() {
        BraidWord w;
        w.strands = rep.strands;
        w.letters = path;
        sink[path.size()].push_back(std::move(w));
    }

    void extend(const CycloMatrix& product) {
        for (const Crossing& letter : alphabet) {
            CycloMatrix next =
                product * generator_matrix(rep, letter.strand, letter.sign);
            path.push_back(letter);
            if (projective_equal(next, target).equal) record();
            if (static_cast<int>(path.size()) < maxLength) extend(next);
            path.pop_back();
        }
    }
};

void check_search_args(const GateDef& target, const IsingRep& rep,
                       int maxLength) {
    if (maxLength < 1 || maxLength > 8)
        throw std::invalid_argument(
            "realization search length must be 1..8, got " +
            std::to_string(maxLength));
    if (target.matrix.dim() != rep.dim)
        throw std::invalid_argument(
            "gate " + target.name + " acts on dimension " +
            std::to_string(target.matrix.dim()) + " but the " +
            std::to_string(rep.strands) + "-strand model has dimension " +
            std::to_string(rep.dim));
}

std::vector<BraidWord> flatten(std::vector<std::vector<BraidWord>>& byLength) {
    std::vector<BraidWord> out;
    for (auto& bucket : byLength)
        for (auto& w : bucket) out.push_back(std::move(w));
    return out;
}

}  // namespace

std::vector<BraidWord> enumerate_realizations_serial(const GateDef& target,
                                                     const IsingRep& rep,
                                                     int maxLength) {
    check_search_args(target, rep, maxLength);
    std::vector<std::vector<BraidWord>> byLength(
        static_cast<size_t>(maxLength) + 1);
    RealizationSearch search(rep, target.matrix, maxLength, byLength);
    search.extend(CycloMatrix::identity(rep.dim));
    return flatten(byLength);
}

std::vector<BraidWord> enumerate_realizations(const GateDef& target,
                                              const IsingRep& rep,
                                              int maxLength) {
    check_search_args(target, rep, maxLength);
    const int branches = 2 * (rep.strands - 1);

    // One bucket per first letter; each thread explores its subtree and
    // the merge below restores the global (length, lexicographic)
    // order.
    std::vector<std::vector<std::vector<BraidWord>>> buckets(
        static_cast<size_t>(branches));
    for (auto& b : buckets)
        b.resize(static_cast<size_t>(maxLength) + 1);

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (int first = 0; first < branches; ++first) {
        auto& bucket = buckets[static_cast<size_t>(first)];
        RealizationSearch search(rep, target.matrix, maxLength, bucket);
        const Crossing& letter = search.alphabet[static_cast<size_t>(first)];
        CycloMatrix product = generator_matrix(rep, letter.strand, letter.sign);
        search.path.push_back(letter);
        if (projective_equal(product, target.matrix).equal) search.record();
        if (maxLength > 1) search.extend(product);
    }

    std::vector<BraidWord> out;
    for (int len = 1; len <= maxLength; ++len)
        for (int first = 0; first < branches; ++first)
            for (auto& w : buckets[static_cast<size_t>(first)]
                                  [static_cast<size_t>(len)])
                out.push_back(std::move(w));
    return out;
}

Json recognition_to_json(const RecognizedCircuit& circuit) {
    Json j;
    j["schemaVersion"] = 1;
    j["strands"] = circuit.strands;
    j["qubits"] = circuit.qubits;
    j["items"] = Json::array();
    for (const CircuitItem& item : circuit.items) {
        Json entry;
        if (item.kind == CircuitItem::Kind::Gate) {
            entry["type"] = "gate";
            entry["name"] = item.name;
        } else {
            entry["type"] = "residue";
            Json letters = Json::array();
            for (size_t k = item.start; k < item.start + item.length; ++k)
                letters.push_back(letter_symbol(circuit.word.letters[k]));
            entry["letters"] = std::move(letters);
        }
        entry["window"] = Json{{"start", item.start}, {"length", item.length}};
        if (item.kind == CircuitItem::Kind::Gate)
            entry["phase"] = item.phase.to_json();
        entry["from"] = item.from;
        entry["to"] = item.to;
        j["items"].push_back(std::move(entry));
    }
    j["elided"] = Json::array();
    for (auto [start, length] : circuit.elided)
        j["elided"].push_back(Json{{"start", start}, {"length", length}});
    return j;
}

}  // namespace braidwire
