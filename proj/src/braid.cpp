#include "braidwire/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braidwire {

RankState rank_order(const std::vector<std::string>& tickers,
                     const PriceFrame& frame, const RankState* previous) {
    size_t n = tickers.size();
    if (frame.prices.size() != n)
        throw std::invalid_argument("rank_order: frame width mismatch");

    std::vector<int> prevPos(n, 0);
    if (previous) {
        if (previous->order.size() != n)
            throw std::invalid_argument("rank_order: previous state mismatch");
        for (size_t pos = 0; pos < n; ++pos)
            prevPos[static_cast<size_t>(previous->order[pos])] =
                static_cast<int>(pos);
    }

    RankState state;
    state.timestamp = frame.date;
    state.prices = frame.prices;
    state.order.resize(n);
    std::iota(state.order.begin(), state.order.end(), 0);
    std::sort(state.order.begin(), state.order.end(), [&](int a, int b) {
        size_t ia = static_cast<size_t>(a), ib = static_cast<size_t>(b);
        if (frame.prices[ia] != frame.prices[ib])
            return frame.prices[ia] < frame.prices[ib];
        if (previous) return prevPos[ia] < prevPos[ib];
        return tickers[ia] < tickers[ib];
    });
    return state;
}

std::vector<RankState> rank_states(const PortfolioSeries& series) {
    std::vector<RankState> states;
    states.reserve(series.frames.size());
    for (const auto& frame : series.frames) {
        const RankState* prev = states.empty() ? nullptr : &states.back();
        states.push_back(rank_order(series.tickers, frame, prev));
    }
    return states;
}

namespace {

// Ascending strand order among commuting neighbours only; letters on
// adjacent strands stay put, so the product is preserved.
void canonicalize_tick(std::vector<Crossing>& letters) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t idx = 1; idx < letters.size(); ++idx) {
            int a = letters[idx - 1].strand;
            int b = letters[idx].strand;
            if (a > b && std::abs(a - b) >= 2) {
                std::swap(letters[idx - 1], letters[idx]);
                changed = true;
            }
        }
    }
}

}  // namespace

std::vector<Crossing> decompose_tick(const RankState& current,
                                     const RankState& next) {
    size_t n = current.order.size();
    if (next.order.size() != n)
        throw std::invalid_argument("decompose_tick: state width mismatch");

    std::vector<int> newPos(n, 0);
    for (size_t pos = 0; pos < n; ++pos)
        newPos[static_cast<size_t>(next.order[pos])] = static_cast<int>(pos);

    // a[pos] = destination rank of the ticker currently at pos.
    std::vector<int> a(n);
    std::vector<int> occupant(current.order);
    for (size_t pos = 0; pos < n; ++pos)
        a[pos] = newPos[static_cast<size_t>(current.order[pos])];

    std::vector<Crossing> letters;
    for (size_t i = 1; i < n; ++i) {
        size_t j = i;
        while (j > 0 && a[j - 1] > a[j]) {
            int lowTicker = occupant[j - 1];
            int upTicker = occupant[j];
            Decimal dLow = abs_diff(next.prices[static_cast<size_t>(lowTicker)],
                                    current.prices[static_cast<size_t>(lowTicker)]);
            Decimal dUp = abs_diff(next.prices[static_cast<size_t>(upTicker)],
                                   current.prices[static_cast<size_t>(upTicker)]);
            Crossing c;
            c.strand = static_cast<int>(j);  // 1-based strand index
            c.sign = (dLow >= dUp) ? +1 : -1;
            c.from = current.timestamp;
            c.to = next.timestamp;
            c.deltaLower = dLow;
            c.deltaUpper = dUp;
            letters.push_back(c);
            std::swap(a[j - 1], a[j]);
            std::swap(occupant[j - 1], occupant[j]);
            --j;
        }
    }
    canonicalize_tick(letters);
    return letters;
}

std::vector<Crossing> detect_crossings(const std::vector<std::string>& tickers,
                                       const RankState& current,
                                       const PriceFrame& next) {
    RankState nextState = rank_order(tickers, next, &current);
    return decompose_tick(current, nextState);
}

BraidWord braid_word_serial(const PortfolioSeries& series) {
    BraidWord word;
    word.strands = static_cast<int>(series.tickers.size());
    std::vector<RankState> states = rank_states(series);
    for (size_t t = 0; t + 1 < states.size(); ++t) {
        auto letters = decompose_tick(states[t], states[t + 1]);
        word.letters.insert(word.letters.end(), letters.begin(),
                            letters.end());
    }
    return word;
}

BraidWord braid_word(const PortfolioSeries& series) {
    BraidWord word;
    word.strands = static_cast<int>(series.tickers.size());
    std::vector<RankState> states = rank_states(series);
    if (states.size() < 2) return word;

    size_t ticks = states.size() - 1;
    std::vector<std::vector<Crossing>> buckets(ticks);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (long t = 0; t < static_cast<long>(ticks); ++t) {
        size_t idx = static_cast<size_t>(t);
        buckets[idx] = decompose_tick(states[idx], states[idx + 1]);
    }
    for (const auto& bucket : buckets)
        word.letters.insert(word.letters.end(), bucket.begin(), bucket.end());
    return word;
}

BraidWord free_reduce(const BraidWord& word) {
    BraidWord out;
    out.strands = word.strands;
    for (const auto& letter : word.letters) {
        if (!out.letters.empty() &&
            out.letters.back().strand == letter.strand &&
            out.letters.back().sign == -letter.sign) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(letter);
        }
    }
    return out;
}

std::vector<int> apply_word(const BraidWord& word,
                            std::vector<int> occupants) {
    for (const auto& letter : word.letters) {
        if (letter.strand < 1 ||
            static_cast<size_t>(letter.strand) >= occupants.size())
            throw std::invalid_argument("apply_word: strand out of range");
        size_t i = static_cast<size_t>(letter.strand);
        std::swap(occupants[i - 1], occupants[i]);
    }
    return occupants;
}

std::string letter_symbol(const Crossing& letter) {
    std::string s = "σ" + std::to_string(letter.strand);
    if (letter.sign < 0) s += "⁻¹";
    return s;
}

Json braid_to_json(const BraidWord& word) {
    Json j;
    j["schemaVersion"] = 1;
    j["strands"] = word.strands;
    Json letters = Json::array();
    for (const auto& c : word.letters) {
        Json l;
        l["strand"] = c.strand;
        l["sign"] = c.sign;
        l["from"] = c.from;
        l["to"] = c.to;
        letters.push_back(l);
    }
    j["letters"] = letters;
    return j;
}

BraidWord braid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("schemaVersion") ||
        j["schemaVersion"] != 1)
        throw ParseError("braid word: unsupported schema");
    if (!j.contains("strands") || !j["strands"].is_number_integer())
        throw ParseError("braid word: missing strand count");
    BraidWord word;
    word.strands = j["strands"].get<int>();
    if (word.strands < 2) throw ParseError("braid word: bad strand count");
    if (!j.contains("letters") || !j["letters"].is_array())
        throw ParseError("braid word: missing letters");
    for (const auto& l : j["letters"]) {
        Crossing c;
        c.strand = l.at("strand").get<int>();
        c.sign = l.at("sign").get<int>();
        c.from = l.value("from", "");
        c.to = l.value("to", "");
        if (c.strand < 1 || c.strand >= word.strands)
            throw ParseError("braid word: strand out of range");
        if (c.sign != 1 && c.sign != -1)
            throw ParseError("braid word: sign must be +1 or -1");
        word.letters.push_back(c);
    }
    return word;
}

}  // namespace braidwire
