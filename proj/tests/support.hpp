#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braidwire/braid.hpp"
#include "braidwire/rep.hpp"

namespace braidwire::testsupport {

inline std::string fixture(const std::string& name) {
    return std::string(BRAIDWIRE_FIXTURES) + "/" + name;
}

// Letters without tick metadata, for comparing words from different
// sources.
inline std::vector<std::pair<int, int>> signature(const BraidWord& word) {
    std::vector<std::pair<int, int>> out;
    out.reserve(word.letters.size());
    for (const Crossing& letter : word.letters)
        out.emplace_back(letter.strand, letter.sign);
    return out;
}

inline BraidWord random_word(std::mt19937& rng, int strands, int maxLength) {
    std::uniform_int_distribution<int> len(1, maxLength);
    std::uniform_int_distribution<int> strand(1, strands - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::pair<int, int>> letters;
    int n = len(rng);
    letters.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        letters.emplace_back(strand(rng), coin(rng) ? 1 : -1);
    return make_word(strands, letters);
}

inline BraidWord inverse_word(const BraidWord& word) {
    BraidWord out;
    out.strands = word.strands;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        Crossing c = *it;
        c.sign = -c.sign;
        out.letters.push_back(c);
    }
    return out;
}

}  // namespace braidwire::testsupport
