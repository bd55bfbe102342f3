#include "braidwire/verify.hpp"

#include <algorithm>
#include <sstream>

#include "braidwire/gates.hpp"
#include "braidwire/rep.hpp"

namespace braidwire {

namespace {

void add(std::vector<IdentityCheck>& out, std::string name, bool passed,
         std::string detail = "", bool informational = false) {
    out.push_back({std::move(name), informational, passed, std::move(detail)});
}

std::string phase_note(const CycloValue& phase) {
    return "phase " + phase.str();
}

CycloMatrix ref_diag(const std::vector<bool>& phased) {
    CycloMatrix m(phased.size());
    for (size_t r = 0; r < phased.size(); ++r)
        m.at(r, r) = phased[r] ? CycloValue::i() : CycloValue::one();
    return m;
}

// 1/sqrt2 * (I - i F) with F the given involution of basis indices.
// This is the normalization the mixing generators are usually printed
// with; the library tables carry zeta/sqrt2 instead so the braid
// relations close exactly, hence the expected fidelity phase zeta.
CycloMatrix ref_mixer(size_t dim, const std::vector<size_t>& image) {
    const CycloValue r = CycloValue::inv_sqrt2();
    const CycloValue mi = -CycloValue::i() * r;
    CycloMatrix m(dim);
    for (size_t c = 0; c < dim; ++c) {
        m.at(c, c) = r;
        m.at(image[c], c) = mi;
    }
    return m;
}

void check_tables(std::vector<IdentityCheck>& out, const IsingRep& rep,
                  const std::vector<CycloMatrix>& refs,
                  const std::vector<int>& mixers) {
    const std::string tag = std::to_string(rep.strands) + "-strand";
    bool ok = true;
    std::string detail;
    for (int g = 1; g < rep.strands; ++g) {
        const CycloMatrix& m = rep.generators[static_cast<size_t>(g - 1)];
        bool isMixer =
            std::find(mixers.begin(), mixers.end(), g) != mixers.end();
        CycloValue expect = isMixer ? CycloValue::zeta() : CycloValue::one();
        ProjectiveMatch match =
            projective_equal(m, refs[static_cast<size_t>(g - 1)]);
        if (!match.equal || match.phase != expect) {
            ok = false;
            detail = "generator " + std::to_string(g) +
                     " deviates from its reference form";
            break;
        }
    }
    add(out, tag + " generator tables match the normalized reference forms",
        ok, detail);
}

void check_relations(std::vector<IdentityCheck>& out, const IsingRep& rep) {
    const std::string tag = std::to_string(rep.strands) + "-strand";
    const CycloMatrix id = CycloMatrix::identity(rep.dim);

    bool unitary = true;
    std::string detail;
    for (int g = 1; g < rep.strands && unitary; ++g) {
        if (!rep.generators[static_cast<size_t>(g - 1)].is_unitary()) {
            unitary = false;
            detail = "generator " + std::to_string(g) + " is not unitary";
        }
    }
    add(out, tag + " generators are unitary", unitary, detail);

    bool inverses = true;
    detail.clear();
    for (int g = 1; g < rep.strands && inverses; ++g) {
        CycloMatrix prod = generator_matrix(rep, g, 1) *
                           generator_matrix(rep, g, -1);
        if (!prod.is_identity()) {
            inverses = false;
            detail = "generator " + std::to_string(g) +
                     " times its inverse is not the identity";
        }
    }
    add(out, tag + " generator inverses cancel exactly", inverses, detail);

    bool commute = true;
    detail.clear();
    for (int i = 1; i < rep.strands && commute; ++i) {
        for (int j = i + 2; j < rep.strands && commute; ++j) {
            const CycloMatrix& a = rep.generators[static_cast<size_t>(i - 1)];
            const CycloMatrix& b = rep.generators[static_cast<size_t>(j - 1)];
            if (a * b != b * a) {
                commute = false;
                detail = "generators " + std::to_string(i) + " and " +
                         std::to_string(j) + " do not commute";
            }
        }
    }
    add(out, tag + " distant generators commute", commute, detail);

    bool yangBaxter = true;
    detail.clear();
    for (int i = 1; i + 1 < rep.strands && yangBaxter; ++i) {
        const CycloMatrix& a = rep.generators[static_cast<size_t>(i - 1)];
        const CycloMatrix& b = rep.generators[static_cast<size_t>(i)];
        if (a * b * a != b * a * b) {
            yangBaxter = false;
            detail = "generators " + std::to_string(i) + " and " +
                     std::to_string(i + 1) + " break the braid relation";
        }
    }
    add(out, tag + " adjacent generators satisfy the braid relation",
        yangBaxter, detail);
}

std::string word_text(const BraidWord& word) {
    std::string s;
    for (const Crossing& letter : word.letters) {
        if (!s.empty()) s += " ";
        s += letter_symbol(letter);
    }
    return s.empty() ? "(empty)" : s;
}

// Asserts product == expectPhase * target and that recognize labels the
// word with gateName alone.
void check_word(std::vector<IdentityCheck>& out, const IsingRep& rep,
                const GateLibrary& library,
                const std::vector<std::pair<int, int>>& letters,
                const std::string& gateName, const CycloValue& expectPhase) {
    BraidWord word = make_word(rep.strands, letters);
    const GateDef* gate = find_gate(library, gateName);
    std::string name = std::to_string(rep.strands) + "-strand word " +
                       word_text(word) + " realizes " + gateName;

    CycloMatrix product = word_product(rep, word);
    ProjectiveMatch match = projective_equal(product, gate->matrix);
    if (!match.equal) {
        add(out, name, false, "product is not projectively " + gateName);
        return;
    }
    if (match.phase != expectPhase) {
        add(out, name, false,
            "unexpected " + phase_note(match.phase));
        return;
    }

    RecognizedCircuit rec = recognize(word, rep, library, 6);
    bool labeled = rec.items.size() == 1 &&
                   rec.items[0].kind == CircuitItem::Kind::Gate &&
                   rec.items[0].name == gateName && rec.elided.empty();
    add(out, name, labeled,
        labeled ? phase_note(match.phase)
                : "recognition did not yield the single label " + gateName);
}

void check_identity_word(std::vector<IdentityCheck>& out, const IsingRep& rep,
                         const GateLibrary& library,
                         const std::vector<std::pair<int, int>>& letters) {
    BraidWord word = make_word(rep.strands, letters);
    std::string name = std::to_string(rep.strands) + "-strand word " +
                       word_text(word) + " cancels to the identity";
    CycloMatrix product = word_product(rep, word);
    bool isId = product.is_identity();
    RecognizedCircuit rec = recognize(word, rep, library, 6);
    bool elided = rec.items.empty() && rec.elided.size() == 1;
    add(out, name, isId && elided,
        isId ? (elided ? "" : "recognition failed to elide the window")
             : "product is not the identity");
}

// The mixed-sign three-letter variant is commonly written down as a
// Hadamard realization, but its product conjugates H by Z instead.
// Reported as informational with what the product actually is.
void check_mixed_sign_variant(std::vector<IdentityCheck>& out,
                              const IsingRep& rep,
                              const GateLibrary& library) {
    BraidWord word = make_word(4, {{1, -1}, {2, 1}, {1, -1}});
    CycloMatrix product = word_product(rep, word);
    const GateDef* h = find_gate(library, "H");
    const GateDef* z = find_gate(library, "Z");

    ProjectiveMatch asH = projective_equal(product, h->matrix);
    std::string name =
        "4-strand mixed-sign word " + word_text(word) + " vs H";
    if (asH.equal) {
        add(out, name, true, "matches H, " + phase_note(asH.phase), true);
        return;
    }
    CycloMatrix zhz = z->matrix * h->matrix * z->matrix;
    ProjectiveMatch asZhz = projective_equal(product, zhz);
    std::string detail =
        asZhz.equal
            ? "not H; product is projectively Z·H·Z, " +
                  phase_note(asZhz.phase)
            : "not H and not Z·H·Z";
    add(out, name, false, detail, true);
}

void check_eight_strand_blocks(std::vector<IdentityCheck>& out,
                               const IsingRep& rep) {
    GateLibrary lib3 = standard_library(3);
    auto info = [&](const std::vector<std::pair<int, int>>& letters,
                    const std::string& gateName) {
        BraidWord word = make_word(8, letters);
        const GateDef* gate = find_gate(lib3, gateName);
        ProjectiveMatch match =
            projective_equal(word_product(rep, word), gate->matrix);
        std::string name = "8-strand word " + word_text(word) +
                           " vs " + gateName + " (encoding-dependent)";
        add(out, name, match.equal,
            match.equal ? phase_note(match.phase) : "no projective match",
            true);
    };

    info({{1, 1}}, "S1");
    info({{5, 1}}, "S2");
    info({{7, 1}}, "S3");
    info({{2, 1}, {2, 1}}, "X1");
    info({{4, 1}, {4, 1}}, "X2");
    info({{4, 1}, {4, 1}, {6, 1}, {6, 1}}, "X3");
}

}  // namespace

std::vector<IdentityCheck> run_identity_checks(bool corruptTables) {
    std::vector<IdentityCheck> out;

    IsingRep rep4 = ising_rep(4);
    IsingRep rep6 = ising_rep(6);
    IsingRep rep8 = ising_rep(8);
    if (corruptTables) {
        CycloMatrix& g2 = rep4.generators[1];
        g2.at(0, 0) = g2.at(0, 0) + CycloValue::one();
    }

    const std::vector<CycloMatrix> refs4 = {
        ref_diag({false, true}),
        ref_mixer(2, {1, 0}),
        ref_diag({false, true}),
    };
    const std::vector<CycloMatrix> refs6 = {
        ref_diag({false, false, true, true}),
        ref_mixer(4, {2, 3, 0, 1}),
        ref_diag({false, true, true, false}),
        ref_mixer(4, {1, 0, 3, 2}),
        ref_diag({false, true, false, true}),
    };
    check_tables(out, rep4, refs4, {2});
    check_tables(out, rep6, refs6, {2, 4});
    check_relations(out, rep4);
    check_relations(out, rep6);
    check_relations(out, rep8);

    GateLibrary lib1 = standard_library(1);
    GateLibrary lib2 = standard_library(2);

    const CycloValue one = CycloValue::one();
    const CycloValue zeta = CycloValue::zeta();
    const CycloValue zetaBar = conj(CycloValue::zeta());

    check_word(out, rep4, lib1, {{1, 1}, {2, 1}, {1, 1}}, "H", zeta);
    check_word(out, rep4, lib1, {{1, -1}, {2, -1}, {1, -1}}, "H", zetaBar);
    check_word(out, rep4, lib1, {{2, 1}, {2, 1}}, "X", one);
    check_word(out, rep4, lib1, {{2, -1}, {2, -1}}, "X", one);
    check_word(out, rep4, lib1, {{1, 1}}, "S", one);
    check_identity_word(out, rep4, lib1, {{2, -1}, {2, 1}});

    check_word(out, rep6, lib2, {{1, -1}, {2, -1}, {1, -1}}, "H1", zetaBar);
    check_word(out, rep6, lib2, {{4, 1}, {5, 1}, {4, 1}}, "H2", zeta);
    check_word(out, rep6, lib2, {{3, 1}, {3, 1}}, "Z1Z2", one);
    check_word(out, rep6, lib2, {{1, 1}, {3, -1}, {5, 1}}, "CZ", one);

    check_mixed_sign_variant(out, rep4, lib1);
    check_eight_strand_blocks(out, rep8);

    return out;
}

bool all_hard_passed(const std::vector<IdentityCheck>& checks) {
    for (const IdentityCheck& c : checks)
        if (!c.informational && !c.passed) return false;
    return true;
}

std::string format_checks(const std::vector<IdentityCheck>& checks) {
    std::ostringstream out;
    for (const IdentityCheck& c : checks) {
        if (c.informational) {
            out << "INFO " << c.name << ": "
                << (c.detail.empty() ? (c.passed ? "holds" : "does not hold")
                                     : c.detail)
                << "\n";
        } else if (c.passed) {
            out << "PASS " << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
        } else {
            out << "FAIL " << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace braidwire
