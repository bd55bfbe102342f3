#include "braidwire/emit.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "braidwire/errors.hpp"

namespace braidwire {

namespace {

struct GateNameInfo {
    std::string base;         // H, S, Sdg, X, Y, Z, I, CZ, Z1Z2, CNOT
    std::vector<int> qubits;  // 0-based register indices
};

GateNameInfo parse_gate_name(const std::string& name, int totalQubits) {
    GateNameInfo info;
    if (name == "Z1Z2") {
        info = {"Z1Z2", {0, 1}};
    } else if (name == "CZ" || name == "CZ12") {
        info = {"CZ", {0, 1}};
    } else if (name == "CZ23") {
        info = {"CZ", {1, 2}};
    } else if (name == "CNOT") {
        info = {"CNOT", {0, 1}};
    } else {
        std::string stem = name;
        std::string suffix;
        if (stem.size() > 2 && stem.compare(stem.size() - 2, 2, "dg") == 0) {
            suffix = "dg";
            stem.resize(stem.size() - 2);
        }
        int qubit = 1;
        if (!stem.empty() && std::isdigit(static_cast<unsigned char>(
                                 stem.back()))) {
            qubit = stem.back() - '0';
            stem.pop_back();
        }
        info = {stem + suffix, {qubit - 1}};
    }
    for (int q : info.qubits)
        if (q < 0 || q >= totalQubits)
            throw ValidationError("gate '" + name + "' touches qubit " +
                                  std::to_string(q + 1) + " but the circuit has " +
                                  std::to_string(totalQubits) + " qubits");
    return info;
}

std::string qasm_op(const std::string& base, const std::string& fullName) {
    if (base == "H") return "h";
    if (base == "S") return "s";
    if (base == "Sdg") return "sdg";
    if (base == "X") return "x";
    if (base == "Y") return "y";
    if (base == "Z") return "z";
    if (base == "I") return "id";
    if (base == "CZ") return "cz";
    throw ValidationError("gate '" + fullName +
                          "' has no mapping in the emitted OPENQASM subset");
}

std::string box_label(const std::string& base) {
    return base == "Sdg" ? "S†" : base;
}

size_t utf8_cols(const std::string& s) {
    size_t n = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++n;
    return n;
}

std::string repeat_glyph(const std::string& glyph, size_t n) {
    std::string out;
    out.reserve(glyph.size() * n);
    for (size_t k = 0; k < n; ++k) out += glyph;
    return out;
}

std::string pad_cols(const std::string& s, size_t width) {
    size_t w = utf8_cols(s);
    return w >= width ? s : s + std::string(width - w, ' ');
}

std::string center_cols(const std::string& s, size_t width) {
    size_t w = utf8_cols(s);
    if (w >= width) return s;
    size_t left = (width - w) / 2;
    return std::string(left, ' ') + s + std::string(width - w - left, ' ');
}

void rstrip(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

std::vector<std::string> strand_labels(const BraidWord& word,
                                       const std::vector<std::string>& labels) {
    size_t n = static_cast<size_t>(word.strands);
    if (labels.size() == n) return labels;
    std::vector<std::string> fallback(n);
    for (size_t k = 0; k < n; ++k) fallback[k] = std::to_string(k + 1);
    return fallback;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};

const char* strand_color(int occupant) {
    return kPalette[static_cast<size_t>(occupant) % 8];
}

void svg_line(std::ostringstream& out, int x1, int y1, int x2, int y2,
              const char* color) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2 << "\" stroke=\"" << color << "\"/>\n";
}

void svg_text(std::ostringstream& out, int x, int y, const std::string& body,
              const char* extra = "") {
    out << "<text x=\"" << x << "\" y=\"" << y << "\"" << extra << ">" << body
        << "</text>\n";
}

// Merge index over ops and residues sorted by source position.
struct ItemRef {
    bool isOp = false;
    size_t index = 0;
    size_t start = 0;
};

std::vector<ItemRef> merged_items(const CircuitDocument& doc) {
    std::vector<ItemRef> refs;
    for (size_t k = 0; k < doc.ops.size(); ++k)
        refs.push_back({true, k, doc.ops[k].start});
    for (size_t k = 0; k < doc.residues.size(); ++k)
        refs.push_back({false, k, doc.residues[k].start});
    std::sort(refs.begin(), refs.end(),
              [](const ItemRef& a, const ItemRef& b) {
                  return a.start != b.start ? a.start < b.start
                                            : a.isOp && !b.isOp;
              });
    return refs;
}

}  // namespace

CircuitDocument circuit_document(const RecognizedCircuit& circuit) {
    CircuitDocument doc;
    doc.qubits = circuit.qubits;
    for (const CircuitItem& item : circuit.items) {
        if (item.kind == CircuitItem::Kind::Gate) {
            GateNameInfo info = parse_gate_name(item.name, circuit.qubits);
            CircuitOp op;
            op.name = item.name;
            op.qubits = info.qubits;
            op.start = item.start;
            op.length = item.length;
            op.from = item.from;
            op.to = item.to;
            doc.ops.push_back(std::move(op));
        } else {
            CircuitResidue res;
            res.start = item.start;
            res.from = item.from;
            res.to = item.to;
            for (size_t k = item.start; k < item.start + item.length; ++k)
                res.letters.push_back(circuit.word.letters[k]);
            doc.residues.push_back(std::move(res));
        }
    }
    return doc;
}

std::string emit_qasm(const CircuitDocument& doc) {
    if (doc.qubits < 1)
        throw ValidationError("cannot emit a circuit with no qubits");

    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "// braid qubits are numbered from 1; register index = qubit - 1\n";
    out << "qreg q[" << doc.qubits << "];\n";

    for (const ItemRef& ref : merged_items(doc)) {
        if (ref.isOp) {
            const CircuitOp& op = doc.ops[ref.index];
            GateNameInfo info = parse_gate_name(op.name, doc.qubits);
            if (info.base == "Z1Z2") {
                out << "z q[" << info.qubits[0] << "];\n";
                out << "z q[" << info.qubits[1] << "];\n";
            } else {
                std::string name = qasm_op(info.base, op.name);
                out << name << " q[" << info.qubits[0] << "]";
                for (size_t k = 1; k < info.qubits.size(); ++k)
                    out << ",q[" << info.qubits[k] << "]";
                out << ";\n";
            }
        } else {
            const CircuitResidue& res = doc.residues[ref.index];
            out << "// residue:";
            for (const Crossing& letter : res.letters)
                out << " " << letter_symbol(letter);
            if (!res.from.empty())
                out << " (" << res.from << " -> " << res.to << ")";
            out << "\n";
        }
    }
    return out.str();
}

size_t qasm_check(const std::string& text) {
    static const std::regex qregRe(R"(^qreg q\[([0-9]+)\]$)");
    static const std::regex oneRe(R"(^(h|s|sdg|x|y|z|id) q\[([0-9]+)\]$)");
    static const std::regex twoRe(R"(^cz q\[([0-9]+)\],q\[([0-9]+)\]$)");

    std::vector<std::string> statements;
    std::istringstream in(text);
    std::string line;
    size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        std::string body = line.substr(a, b - a + 1);
        if (body.rfind("//", 0) == 0) continue;
        if (body.back() != ';')
            throw ParseError("QASM line " + std::to_string(lineNo) +
                             ": statement does not end with ';'");
        body.pop_back();
        statements.push_back(body);
    }

    if (statements.size() < 3)
        throw ParseError("QASM text is missing its header statements");
    if (statements[0] != "OPENQASM 2.0")
        throw ParseError("first QASM statement must be 'OPENQASM 2.0;'");
    if (statements[1] != "include \"qelib1.inc\"")
        throw ParseError("second QASM statement must include qelib1.inc");
    std::smatch m;
    if (!std::regex_match(statements[2], m, qregRe))
        throw ParseError("third QASM statement must declare one register q");
    const long registers = std::stol(m[1].str());

    size_t ops = 0;
    for (size_t k = 3; k < statements.size(); ++k) {
        long i = -1, j = -1;
        if (std::regex_match(statements[k], m, oneRe)) {
            i = std::stol(m[2].str());
        } else if (std::regex_match(statements[k], m, twoRe)) {
            i = std::stol(m[1].str());
            j = std::stol(m[2].str());
            if (i == j)
                throw ParseError("QASM statement '" + statements[k] +
                                 "' repeats an operand");
        } else {
            throw ParseError("QASM statement '" + statements[k] +
                             "' is outside the emitted subset");
        }
        if (i >= registers || j >= registers)
            throw ParseError("QASM statement '" + statements[k] +
                             "' indexes past the register");
        ++ops;
    }
    return ops;
}

std::vector<Overlay> gate_overlays(const RecognizedCircuit& circuit) {
    std::vector<Overlay> out;
    for (const CircuitItem& item : circuit.items) {
        if (item.kind != CircuitItem::Kind::Gate) continue;
        out.push_back({item.start, item.start + item.length - 1, item.name});
    }
    return out;
}

std::string render_braid_ascii(const BraidWord& word,
                               const std::vector<std::string>& labels) {
    const int n = word.strands;
    if (n < 2) return "";
    const std::vector<std::string> lab = strand_labels(word, labels);

    size_t labelW = 0;
    for (const auto& s : lab) labelW = std::max(labelW, utf8_cols(s));

    const std::string plain = repeat_glyph("─", 7);
    const std::string upper =
        repeat_glyph("─", 2) + "╲ ╱" + repeat_glyph("─", 2);
    const std::string lower =
        repeat_glyph("─", 2) + "╱ ╲" + repeat_glyph("─", 2);

    std::vector<int> start(static_cast<size_t>(n));
    std::iota(start.begin(), start.end(), 0);
    std::vector<int> end = apply_word(word, start);

    std::ostringstream out;
    for (int r = 1; r <= n; ++r) {
        std::string line = pad_cols(lab[static_cast<size_t>(r - 1)], labelW);
        line += " ";
        if (word.letters.empty()) {
            line += plain;
        } else {
            for (const Crossing& letter : word.letters) {
                if (letter.strand == r)
                    line += upper;
                else if (letter.strand + 1 == r)
                    line += lower;
                else
                    line += plain;
            }
        }
        line += " ";
        line += lab[static_cast<size_t>(end[static_cast<size_t>(r - 1)])];
        rstrip(line);
        out << line << "\n";
    }

    if (!word.letters.empty()) {
        std::string caption(labelW + 1, ' ');
        for (const Crossing& letter : word.letters)
            caption += center_cols(letter_symbol(letter), 7);
        rstrip(caption);
        out << caption << "\n";
    }
    return out.str();
}

std::string render_svg_braid(const BraidWord& word,
                             const std::vector<std::string>& labels,
                             const std::vector<Overlay>& overlays) {
    const int n = word.strands;
    const std::vector<std::string> lab = strand_labels(word, labels);
    const size_t cols = std::max<size_t>(word.letters.size(), 1);

    const int RH = 44, CW = 64, M = 16;
    size_t labelChars = 0;
    for (const auto& s : lab) labelChars = std::max(labelChars, utf8_cols(s));
    const int labelW = static_cast<int>(labelChars) * 8 + 12;
    const int x0 = M + labelW;
    const int xEnd = x0 + static_cast<int>(cols) * CW;
    const int width = xEnd + labelW + M;
    const int height = M + n * RH + 22 + M;
    auto rowY = [&](int pos) { return M + (pos - 1) * RH + RH / 2; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\" font-family=\"monospace\" font-size=\"13\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    std::vector<int> occ(static_cast<size_t>(n));
    std::iota(occ.begin(), occ.end(), 0);

    out << "<g fill=\"none\" stroke-width=\"2\">\n";
    if (word.letters.empty()) {
        for (int p = 1; p <= n; ++p)
            svg_line(out, x0, rowY(p), xEnd, rowY(p),
                     strand_color(occ[static_cast<size_t>(p - 1)]));
    }
    for (size_t c = 0; c < word.letters.size(); ++c) {
        const Crossing& letter = word.letters[c];
        const int xa = x0 + static_cast<int>(c) * CW;
        const int xb = xa + CW;
        const int i = letter.strand;
        for (int p = 1; p <= n; ++p) {
            if (p == i || p == i + 1) continue;
            svg_line(out, xa, rowY(p), xb, rowY(p),
                     strand_color(occ[static_cast<size_t>(p - 1)]));
        }
        // The strand leaving position i is in front on a positive
        // crossing; the broken one gets a gap around the middle.
        const char* downColor = strand_color(occ[static_cast<size_t>(i - 1)]);
        const char* upColor = strand_color(occ[static_cast<size_t>(i)]);
        const int yTop = rowY(i), yBot = rowY(i + 1);
        out << "<g class=\"crossing " << (letter.sign == 1 ? "over" : "under")
            << "\">\n";
        auto broken = [&](int x1, int y1, int x2, int y2, const char* color) {
            const int gx1 = x1 + (x2 - x1) * 35 / 100;
            const int gy1 = y1 + (y2 - y1) * 35 / 100;
            const int gx2 = x1 + (x2 - x1) * 65 / 100;
            const int gy2 = y1 + (y2 - y1) * 65 / 100;
            svg_line(out, x1, y1, gx1, gy1, color);
            svg_line(out, gx2, gy2, x2, y2, color);
        };
        if (letter.sign == 1) {
            broken(xa, yBot, xb, yTop, upColor);
            svg_line(out, xa, yTop, xb, yBot, downColor);
        } else {
            broken(xa, yTop, xb, yBot, downColor);
            svg_line(out, xa, yBot, xb, yTop, upColor);
        }
        out << "</g>\n";
        std::swap(occ[static_cast<size_t>(i - 1)], occ[static_cast<size_t>(i)]);
    }
    out << "</g>\n";

    out << "<g fill=\"black\">\n";
    std::vector<int> start(static_cast<size_t>(n));
    std::iota(start.begin(), start.end(), 0);
    std::vector<int> end = apply_word(word, start);
    for (int p = 1; p <= n; ++p) {
        svg_text(out, M, rowY(p) + 4, lab[static_cast<size_t>(p - 1)]);
        svg_text(out, xEnd + 8, rowY(p) + 4,
                 lab[static_cast<size_t>(end[static_cast<size_t>(p - 1)])]);
    }
    for (size_t c = 0; c < word.letters.size(); ++c) {
        const int cx = x0 + static_cast<int>(c) * CW + CW / 2;
        svg_text(out, cx, M + n * RH + 14, letter_symbol(word.letters[c]),
                 " text-anchor=\"middle\"");
    }
    out << "</g>\n";

    if (!overlays.empty()) {
        out << "<g fill=\"none\" stroke=\"#444444\" stroke-dasharray=\"6 3\">\n";
        for (const Overlay& box : overlays) {
            const int bx = x0 + static_cast<int>(box.startCol) * CW + 4;
            const int bw =
                static_cast<int>(box.endCol - box.startCol + 1) * CW - 8;
            out << "<rect x=\"" << bx << "\" y=\"" << M - 6 << "\" width=\""
                << bw << "\" height=\"" << n * RH + 8
                << "\" rx=\"6\"/>\n";
            out << "<text x=\"" << bx + 6 << "\" y=\"" << M + 6
                << "\" fill=\"#444444\" stroke=\"none\" font-size=\"12\">"
                << box.label << "</text>\n";
        }
        out << "</g>\n";
    }

    out << "</svg>\n";
    return out.str();
}

std::string render_svg_circuit(const CircuitDocument& doc) {
    const int n = std::max(doc.qubits, 1);
    const std::vector<ItemRef> items = merged_items(doc);
    const size_t cols = std::max<size_t>(items.size(), 1);

    const int RH = 48, CW = 72, M = 16;
    const int labelW = 44;
    const int x0 = M + labelW;
    const int xEnd = x0 + static_cast<int>(cols) * CW;
    const int width = xEnd + M;
    const int height = M + n * RH + M;
    auto wireY = [&](int q) { return M + q * RH + RH / 2; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\" font-family=\"monospace\" font-size=\"13\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    out << "<g stroke=\"black\">\n";
    for (int q = 0; q < n; ++q)
        svg_line(out, x0 - 8, wireY(q), xEnd + 8, wireY(q), "black");
    out << "</g>\n";
    out << "<g fill=\"black\">\n";
    for (int q = 0; q < n; ++q)
        svg_text(out, M, wireY(q) + 4, "q[" + std::to_string(q) + "]");
    out << "</g>\n";

    for (size_t c = 0; c < items.size(); ++c) {
        const int cx = x0 + static_cast<int>(c) * CW + CW / 2;
        if (items[c].isOp) {
            const CircuitOp& op = doc.ops[items[c].index];
            GateNameInfo info = parse_gate_name(op.name, doc.qubits);
            if (info.base == "CZ") {
                const int ya = wireY(info.qubits[0]);
                const int yb = wireY(info.qubits[1]);
                out << "<g class=\"op cz\" stroke=\"black\" fill=\"black\">\n";
                svg_line(out, cx, ya, cx, yb, "black");
                out << "<circle cx=\"" << cx << "\" cy=\"" << ya
                    << "\" r=\"4\"/>\n";
                out << "<circle cx=\"" << cx << "\" cy=\"" << yb
                    << "\" r=\"4\"/>\n";
                out << "</g>\n";
            } else if (info.base == "CNOT") {
                const int ya = wireY(info.qubits[0]);
                const int yb = wireY(info.qubits[1]);
                out << "<g class=\"op cnot\" stroke=\"black\" fill=\"none\">\n";
                svg_line(out, cx, ya, cx, yb + 9, "black");
                out << "<circle cx=\"" << cx << "\" cy=\"" << ya
                    << "\" r=\"4\" fill=\"black\"/>\n";
                out << "<circle cx=\"" << cx << "\" cy=\"" << yb
                    << "\" r=\"9\"/>\n";
                svg_line(out, cx - 9, yb, cx + 9, yb, "black");
                out << "</g>\n";
            } else {
                // One box per touched wire (Z1Z2 puts a Z on each).
                std::string label = box_label(
                    info.base == "Z1Z2" ? std::string("Z") : info.base);
                out << "<g class=\"op box\">\n";
                for (int q : info.qubits) {
                    const int y = wireY(q);
                    out << "<rect x=\"" << cx - 18 << "\" y=\"" << y - 14
                        << "\" width=\"36\" height=\"28\" fill=\"white\" "
                           "stroke=\"black\"/>\n";
                    svg_text(out, cx, y + 5, label,
                             " text-anchor=\"middle\"");
                }
                out << "</g>\n";
            }
        } else {
            const CircuitResidue& res = doc.residues[items[c].index];
            out << "<g class=\"residue\">\n";
            out << "<rect x=\"" << cx - 28 << "\" y=\"" << M + 2
                << "\" width=\"56\" height=\"" << n * RH - 4
                << "\" fill=\"none\" stroke=\"#888888\" "
                   "stroke-dasharray=\"4 3\"/>\n";
            std::string body;
            for (const Crossing& letter : res.letters) {
                if (!body.empty()) body += " ";
                body += letter_symbol(letter);
            }
            svg_text(out, cx, M + n * RH / 2 + 4, body,
                     " text-anchor=\"middle\" font-size=\"10\"");
            out << "</g>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot open '" + tmp.string() +
                                   "' for writing");
        out << content;
        out.flush();
        if (!out) throw ParseError("short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec)
        throw ParseError("cannot move '" + tmp.string() + "' into place: " +
                         ec.message());
}

}  // namespace braidwire
