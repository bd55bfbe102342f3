#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "braidwire/braid.hpp"
#include "braidwire/emit.hpp"
#include "braidwire/errors.hpp"
#include "braidwire/gates.hpp"
#include "braidwire/ingest.hpp"
#include "braidwire/rep.hpp"
#include "braidwire/verify.hpp"

namespace {

using namespace braidwire;

struct RunConfig {
    std::string csv;
    std::vector<std::string> tickers;
    int maxWindow = 6;
    double spreadLimit = 1.5;
    std::string outDir = ".";
    std::vector<std::string> formats;
};

bool wants(const RunConfig& cfg, const std::string& format) {
    for (const auto& f : cfg.formats)
        if (f == format) return true;
    return false;
}

void write_output(const RunConfig& cfg, const std::string& file,
                  const std::string& content) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.outDir);
    fs::path path = fs::path(cfg.outDir) / file;
    write_file_atomic(path.string(), content);
    std::cout << "wrote " << path.string() << "\n";
}

// Portfolio with admissibility enforced: even ticker count, clean
// frames. Warnings go to stderr, errors abort with the first message.
PortfolioSeries load_checked(const RunConfig& cfg) {
    PortfolioSeries series = load_csv(cfg.csv, cfg.tickers);
    ValidationReport report = validate_portfolio(series, cfg.spreadLimit);
    for (const auto& w : report.warnings)
        std::cerr << "warning: " << w << "\n";
    if (!report.ok()) throw ValidationError(report.errors.front());
    return series;
}

// Labels in first-tick rank order, so row k of a diagram is the strand
// that starts at rank position k.
std::vector<std::string> rank_labels(const PortfolioSeries& series) {
    std::vector<RankState> states = rank_states(series);
    if (states.empty()) return series.tickers;
    std::vector<std::string> labels;
    labels.reserve(series.tickers.size());
    for (int idx : states[0].order)
        labels.push_back(series.tickers[static_cast<size_t>(idx)]);
    return labels;
}

int cmd_braid(const RunConfig& cfg) {
    PortfolioSeries series = load_checked(cfg);
    BraidWord word = braid_word(series);
    std::vector<std::string> labels = rank_labels(series);

    std::cout << "strands " << word.strands << "\n";
    std::cout << "letters " << word.letters.size() << "\n";

    if (wants(cfg, "json"))
        write_output(cfg, "braid.json", braid_to_json(word).dump(2) + "\n");
    if (wants(cfg, "ascii"))
        write_output(cfg, "braid.txt", render_braid_ascii(word, labels));
    if (wants(cfg, "svg"))
        write_output(cfg, "braid.svg", render_svg_braid(word, labels));
    return 0;
}

int cmd_circuit(const RunConfig& cfg) {
    PortfolioSeries series = load_checked(cfg);
    BraidWord word = braid_word(series);
    BraidWord reduced = free_reduce(word);
    IsingRep rep = ising_rep(reduced.strands);
    GateLibrary library = standard_library(rep.qubits());
    RecognizedCircuit rec = recognize(reduced, rep, library, cfg.maxWindow);
    CircuitDocument doc = circuit_document(rec);
    std::vector<std::string> labels = rank_labels(series);

    size_t gates = 0, residues = 0;
    for (const auto& item : rec.items)
        (item.kind == CircuitItem::Kind::Gate ? gates : residues) += 1;
    std::cout << "strands " << reduced.strands << "\n";
    std::cout << "letters " << word.letters.size() << " (reduced "
              << reduced.letters.size() << ")\n";
    std::cout << "gates " << gates << "\n";
    std::cout << "residues " << residues << "\n";
    std::cout << "elided " << rec.elided.size() << "\n";

    if (wants(cfg, "json")) {
        Json j = recognition_to_json(rec);
        j["word"] = braid_to_json(reduced);
        write_output(cfg, "circuit.json", j.dump(2) + "\n");
    }
    if (wants(cfg, "qasm"))
        write_output(cfg, "circuit.qasm", emit_qasm(doc));
    if (wants(cfg, "svg")) {
        write_output(cfg, "circuit.svg", render_svg_circuit(doc));
        write_output(cfg, "reduced_braid.svg",
                     render_svg_braid(reduced, labels, gate_overlays(rec)));
    }
    if (wants(cfg, "ascii"))
        write_output(cfg, "reduced_braid.txt",
                     render_braid_ascii(reduced, labels));
    return 0;
}

int cmd_verify(bool corruptTables) {
    std::vector<IdentityCheck> checks = run_identity_checks(corruptTables);
    std::cout << format_checks(checks);
    if (all_hard_passed(checks)) {
        std::cout << "all hard checks passed\n";
        return 0;
    }
    std::cout << "hard check failure\n";
    return 1;
}

int cmd_search(const std::string& gateName, int strands, int maxLength) {
    IsingRep rep = ising_rep(strands);
    GateLibrary library = standard_library(rep.qubits());
    const GateDef* gate = find_gate(library, gateName);
    if (gate == nullptr)
        throw ValidationError("unknown gate '" + gateName + "' for " +
                              std::to_string(rep.qubits()) + " qubit(s)");

    std::vector<BraidWord> words = enumerate_realizations(*gate, rep,
                                                          maxLength);
    std::cout << "count " << words.size() << "\n";
    for (const BraidWord& w : words) {
        std::string line;
        for (const Crossing& letter : w.letters) {
            if (!line.empty()) line += "·";
            line += letter_symbol(letter);
        }
        std::cout << line << "\n";
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    PortfolioSeries series = read_csv(cfg.csv, cfg.tickers);
    ValidationReport report = validate_portfolio(series, cfg.spreadLimit);
    for (const auto& e : report.errors) std::cout << "error: " << e << "\n";
    for (const auto& w : report.warnings)
        std::cout << "warning: " << w << "\n";
    std::cout << "tickers " << series.tickers.size() << "\n";
    std::cout << "frames " << series.frames.size() << "\n";
    if (report.priceSpreadRatio > 0.0) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", report.priceSpreadRatio);
        std::cout << "spread ratio " << buf << "\n";
    }
    if (!report.ok()) return 2;
    std::cout << "admissible\n";
    return 0;
}

void add_io_options(CLI::App* sub, RunConfig& cfg, bool withFormats,
                    const std::vector<std::string>& defaultFormats) {
    sub->add_option("csv", cfg.csv, "price series CSV")->required();
    sub->add_option("--tickers", cfg.tickers,
                    "ticker subset, in portfolio order")
        ->delimiter(',');
    sub->add_option("--spread-limit", cfg.spreadLimit,
                    "first-frame price spread warning threshold")
        ->check(CLI::PositiveNumber);
    if (withFormats) {
        cfg.formats = defaultFormats;
        sub->add_option("--out", cfg.outDir, "output directory");
        sub->add_option("--format", cfg.formats,
                        "outputs to write: json,qasm,svg,ascii")
            ->delimiter(',')
            ->check(CLI::IsMember({"json", "qasm", "svg", "ascii"}));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidwire: stock rank crossings as braids, braids as "
                 "exact anyon unitaries, unitaries as quantum circuits"};
    app.set_config("--config", "", "TOML config file")
        ->envname("BRAIDWIRE_CONFIG");
    app.require_subcommand(1);

    RunConfig braidCfg;
    CLI::App* braid = app.add_subcommand(
        "braid", "extract the braid word from a price CSV");
    add_io_options(braid, braidCfg, true, {"json"});

    RunConfig circuitCfg;
    CLI::App* circuit = app.add_subcommand(
        "circuit", "recognize gates in the braid and emit the circuit");
    add_io_options(circuit, circuitCfg, true, {"json", "qasm"});
    circuit->add_option("--max-window", circuitCfg.maxWindow,
                        "longest letter window tried per gate")
        ->check(CLI::Range(1, 16));

    CLI::App* verify = app.add_subcommand(
        "verify", "run the representation identity suite");
    bool corruptTables = false;
    verify->add_flag("--corrupt-tables", corruptTables)
        ->group("");  // test hook, hidden from help

    CLI::App* search = app.add_subcommand(
        "search", "brute-force braid realizations of a library gate");
    std::string gateName;
    int searchStrands = 4;
    int searchMaxLength = 3;
    search->add_option("gate", gateName, "library gate name")->required();
    search->add_option("--strands", searchStrands, "strand count")
        ->check(CLI::IsMember({4, 6, 8}));
    search->add_option("--max-len", searchMaxLength, "longest word tried")
        ->check(CLI::Range(1, 8));

    RunConfig validateCfg;
    CLI::App* validate = app.add_subcommand(
        "validate", "check a price CSV for admissibility");
    add_io_options(validate, validateCfg, false, {});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (braid->parsed()) return cmd_braid(braidCfg);
        if (circuit->parsed()) return cmd_circuit(circuitCfg);
        if (verify->parsed()) return cmd_verify(corruptTables);
        if (search->parsed())
            return cmd_search(gateName, searchStrands, searchMaxLength);
        if (validate->parsed()) return cmd_validate(validateCfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
