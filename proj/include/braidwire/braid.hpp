#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "braidwire/ingest.hpp"

namespace braidwire {

using Json = nlohmann::ordered_json;

// Ranking of the portfolio at one timestamp: order[pos] is the ticker
// index occupying rank position pos (cheapest first). Prices are kept so
// crossings between two states can be signed without going back to the
// frames.
struct RankState {
    std::string timestamp;
    std::vector<int> order;         // position -> ticker index
    std::vector<Decimal> prices;    // ticker index -> price
};

// One braid letter. strand is 1-based: the letter acts on rank positions
// strand and strand+1. sign +1 draws the lower strand over the upper
// (sigma_i), -1 under it (sigma_i^-1).
struct Crossing {
    int strand = 0;
    int sign = +1;
    std::string from;
    std::string to;
    Decimal deltaLower;  // full-tick |price change| of the stock at position strand
    Decimal deltaUpper;  // same for the stock at position strand+1

    bool operator==(const Crossing& o) const = default;
};

struct BraidWord {
    int strands = 0;
    std::vector<Crossing> letters;

    bool operator==(const BraidWord& o) const = default;
};

// Ranks tickers by ascending price. Equal prices keep the relative order
// of `previous`; with no previous state ties break by ticker name.
RankState rank_order(const std::vector<std::string>& tickers,
                     const PriceFrame& frame,
                     const RankState* previous = nullptr);

// Sequential rank states for every frame of the series.
std::vector<RankState> rank_states(const PortfolioSeries& series);

// Letters for one tick between two consecutive rank states. The rank
// permutation is decomposed into adjacent transpositions by insertion
// sort; each elementary swap is signed by comparing the two stocks'
// full-tick |price change| (ties go to +1). Letters on strands at least
// two apart commute, and commuting neighbours are put in ascending
// strand order; the permutation the word carries is untouched by that.
std::vector<Crossing> decompose_tick(const RankState& current,
                                     const RankState& next);

// decompose_tick after ranking the next frame against `current`.
std::vector<Crossing> detect_crossings(const std::vector<std::string>& tickers,
                                       const RankState& current,
                                       const PriceFrame& next);

// Whole-series braid word: per-tick letters concatenated in time order.
// Ticks are independent once the rank states exist, so the default
// implementation fans them out across threads; the serial variant is
// the reference the tests compare against.
BraidWord braid_word(const PortfolioSeries& series);
BraidWord braid_word_serial(const PortfolioSeries& series);

// Cancels adjacent sigma_i^s sigma_i^-s pairs until none remain. The
// result is unique regardless of cancellation order.
BraidWord free_reduce(const BraidWord& word);

// Applies the letters' transpositions left to right to `occupants`
// (position -> label). Used for permutation bookkeeping.
std::vector<int> apply_word(const BraidWord& word, std::vector<int> occupants);

// "σ4" / "σ1⁻¹" rendering used by diagrams and the search output.
std::string letter_symbol(const Crossing& letter);

Json braid_to_json(const BraidWord& word);
BraidWord braid_from_json(const Json& j);

}  // namespace braidwire
