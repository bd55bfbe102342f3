#include "braidwire/rep.hpp"

#include <stdexcept>
#include <string>

#include "braidwire/errors.hpp"

namespace braidwire {

namespace {

// Shorthand for the entries of the exchange unitaries.
const CycloValue kOne = CycloValue::one();
const CycloValue kI = CycloValue::i();
const CycloValue kHalfOnePlusI = CycloValue(1, 0, 1, 0, 1);    // (1+i)/2
const CycloValue kHalfOneMinusI = CycloValue(1, 0, -1, 0, 1);  // (1-i)/2

CycloMatrix diag(const std::vector<CycloValue>& entries) {
    CycloMatrix m(entries.size());
    for (size_t r = 0; r < entries.size(); ++r) m.at(r, r) = entries[r];
    return m;
}

// Fixed generator tables for the two strand counts with a settled
// physical reading. Basis order: qubit 1 is the most significant bit.
IsingRep rep4() {
    IsingRep rep;
    rep.strands = 4;
    rep.dim = 2;

    CycloMatrix s1 = diag({kOne, kI});

    CycloMatrix s2(2);
    s2.at(0, 0) = kHalfOnePlusI;
    s2.at(0, 1) = kHalfOneMinusI;
    s2.at(1, 0) = kHalfOneMinusI;
    s2.at(1, 1) = kHalfOnePlusI;

    rep.generators = {s1, s2, s1};
    return rep;
}

IsingRep rep6() {
    IsingRep rep;
    rep.strands = 6;
    rep.dim = 4;

    CycloMatrix s1 = diag({kOne, kOne, kI, kI});
    CycloMatrix s3 = diag({kOne, kI, kI, kOne});
    CycloMatrix s5 = diag({kOne, kI, kOne, kI});

    // Exchange mixing the first qubit: block form over basis pairs
    // (00,10) and (01,11).
    CycloMatrix s2(4);
    for (size_t r = 0; r < 4; ++r) s2.at(r, r) = kHalfOnePlusI;
    s2.at(0, 2) = kHalfOneMinusI;
    s2.at(2, 0) = kHalfOneMinusI;
    s2.at(1, 3) = kHalfOneMinusI;
    s2.at(3, 1) = kHalfOneMinusI;

    // Exchange mixing the second qubit.
    CycloMatrix s4(4);
    for (size_t r = 0; r < 4; ++r) s4.at(r, r) = kHalfOnePlusI;
    s4.at(0, 1) = kHalfOneMinusI;
    s4.at(1, 0) = kHalfOneMinusI;
    s4.at(2, 3) = kHalfOneMinusI;
    s4.at(3, 2) = kHalfOneMinusI;

    rep.generators = {s1, s2, s3, s4, s5};
    return rep;
}

}  // namespace

IsingRep exchange_rep(int strands) {
    if (strands < 4 || strands % 2 != 0)
        throw std::invalid_argument(
            "exchange_rep: strand count must be even and at least 4, got " +
            std::to_string(strands));

    const int m = strands / 2;       // anyon pairs
    const int nq = m - 1;            // qubits
    const size_t dim = size_t{1} << nq;

    // Occupation vector (n_1..n_m) for each basis index. Computational
    // bits are (n_1, n_3, n_4, ..., n_m); n_2 restores even parity.
    auto occupations = [&](size_t idx) {
        std::vector<int> n(static_cast<size_t>(m), 0);
        int parity = 0;
        for (int q = 0; q < nq; ++q) {
            int bit = static_cast<int>((idx >> (nq - 1 - q)) & 1);
            parity ^= bit;
            n[q == 0 ? 0 : static_cast<size_t>(q) + 1] = bit;
        }
        if (m >= 2) n[1] = parity;
        return n;
    };

    // Inverse map: occupation vector back to a basis index.
    auto index_of = [&](const std::vector<int>& n) {
        size_t idx = 0;
        for (int q = 0; q < nq; ++q) {
            int bit = n[q == 0 ? 0 : static_cast<size_t>(q) + 1];
            idx |= static_cast<size_t>(bit) << (nq - 1 - q);
        }
        return idx;
    };

    IsingRep rep;
    rep.strands = strands;
    rep.dim = dim;
    rep.generators.reserve(static_cast<size_t>(strands - 1));

    for (int g = 1; g < strands; ++g) {
        CycloMatrix mat(dim);
        if (g % 2 == 1) {
            // Exchange within pair k: phase i on occupied states.
            size_t k = static_cast<size_t>((g + 1) / 2);
            for (size_t idx = 0; idx < dim; ++idx) {
                auto n = occupations(idx);
                mat.at(idx, idx) = n[k - 1] ? kI : kOne;
            }
        } else {
            // Exchange between pairs k and k+1: (zeta/sqrt2)(I - i*F)
            // with F flipping n_k and n_{k+1}. F preserves parity, so
            // it permutes the basis.
            size_t k = static_cast<size_t>(g / 2);
            for (size_t idx = 0; idx < dim; ++idx) {
                auto n = occupations(idx);
                n[k - 1] ^= 1;
                n[k] ^= 1;
                size_t flipped = index_of(n);
                mat.at(idx, idx) = kHalfOnePlusI;
                mat.at(flipped, idx) = kHalfOneMinusI;
            }
        }
        rep.generators.push_back(std::move(mat));
    }
    return rep;
}

IsingRep ising_rep(int strands) {
    switch (strands) {
        case 4:
            return rep4();
        case 6:
            return rep6();
        case 8:
            return exchange_rep(8);
        default:
            throw ValidationError(
                "unsupported strand count " + std::to_string(strands) +
                "; supported: 4, 6, 8");
    }
}

CycloMatrix generator_matrix(const IsingRep& rep, int strand, int sign) {
    if (strand < 1 || static_cast<size_t>(strand) > rep.generators.size())
        throw std::invalid_argument("generator index " +
                                    std::to_string(strand) +
                                    " out of range for " +
                                    std::to_string(rep.strands) + " strands");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("generator sign must be +1 or -1");
    const CycloMatrix& g = rep.generators[static_cast<size_t>(strand) - 1];
    return sign == 1 ? g : adjoint(g);
}

CycloMatrix word_product(const IsingRep& rep, const BraidWord& word) {
    if (word.strands != rep.strands)
        throw std::invalid_argument(
            "braid word over " + std::to_string(word.strands) +
            " strands fed to a " + std::to_string(rep.strands) +
            "-strand representation");
    CycloMatrix acc = CycloMatrix::identity(rep.dim);
    for (const auto& letter : word.letters)
        acc = acc * generator_matrix(rep, letter.strand, letter.sign);
    return acc;
}

ProjectiveMatch projective_equal(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("projective_equal: dimension mismatch");
    CycloMatrix c = adjoint(a) * b;

    const CycloValue& scalar = c.at(0, 0);
    if (scalar.is_zero() || !scalar.is_unit_modulus()) return {};
    for (size_t r = 0; r < c.dim(); ++r) {
        for (size_t col = 0; col < c.dim(); ++col) {
            const CycloValue& want =
                r == col ? scalar : CycloValue::zero();
            if (c.at(r, col) != want) return {};
        }
    }
    // adjoint(a)*b == scalar*I means a == conj(scalar)*b.
    return {true, conj(scalar)};
}

BraidWord make_word(int strands,
                    const std::vector<std::pair<int, int>>& letters) {
    BraidWord word;
    word.strands = strands;
    word.letters.reserve(letters.size());
    for (auto [strand, sign] : letters) {
        Crossing c;
        c.strand = strand;
        c.sign = sign;
        word.letters.push_back(std::move(c));
    }
    return word;
}

}  // namespace braidwire
