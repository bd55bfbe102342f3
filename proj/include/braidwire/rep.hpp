#pragma once

#include <vector>

#include "braidwire/braid.hpp"
#include "braidwire/cyclo.hpp"

namespace braidwire {

// Unitary image of the braid group B_n under the Ising-anyon model.
// Every pair of strands carries one anyon pair; n strands act on
// n/2 - 1 qubits. Diagonal generators are stored exactly as the model
// prescribes; off-diagonal ones carry the unit-row-norm prefactor
// ζ/√2 = (1 + ζ²)/2 that makes them unitary and the braid relations
// hold exactly, not just up to phase.
struct IsingRep {
    int strands = 0;
    size_t dim = 0;
    std::vector<CycloMatrix> generators;  // generators[i-1] = image of sigma_i

    int qubits() const { return strands / 2 - 1; }
};

// Supported strand counts: 4, 6 and 8. The 4- and 6-strand tables are
// fixed matrices; 8 strands come from the pairwise-exchange construction
// below and retain experimental status.
IsingRep ising_rep(int strands);

// Builds the representation for any even strand count >= 4 from anyon
// pair exchanges: m = strands/2 occupation bits n_1..n_m with even
// parity, computational bits (n_1, n_3, n_4, ..., n_m), exchange inside
// pair k a phase of i on occupied n_k, exchange between pairs k and k+1
// the unitary (ζ/√2)(I - i·F) with F flipping n_k and n_{k+1}.
IsingRep exchange_rep(int strands);

// Image of sigma_i^sign. sign -1 returns the exact inverse (the
// adjoint).
CycloMatrix generator_matrix(const IsingRep& rep, int strand, int sign);

// Product of the letters' matrices, left to right in time order. The
// empty word gives the identity.
CycloMatrix word_product(const IsingRep& rep, const BraidWord& word);

struct ProjectiveMatch {
    bool equal = false;
    CycloValue phase;  // a = phase * b when equal; unit modulus
};

// Equality up to a global unit phase: adjoint(a)*b must be an exact
// scalar multiple of the identity with that scalar on the unit circle.
// Inputs are expected unitary; anything else simply compares unequal.
ProjectiveMatch projective_equal(const CycloMatrix& a, const CycloMatrix& b);

// Convenience for tests and fixtures: a braid word over `strands` with
// no tick metadata. Letters are (strand, sign) pairs.
BraidWord make_word(int strands,
                    const std::vector<std::pair<int, int>>& letters);

}  // namespace braidwire
