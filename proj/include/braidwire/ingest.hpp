#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidwire/errors.hpp"

namespace braidwire {

// Exact decimal price with four implied fraction digits. Quotes carry at
// most four decimals, so every value in the pipeline is an integer and
// price differences compare exactly.
struct Decimal {
    std::int64_t raw = 0;  // value * 10^4

    static Decimal parse(const std::string& text);
    std::string str() const;

    bool operator==(const Decimal& o) const = default;
    auto operator<=>(const Decimal& o) const = default;
};

Decimal abs_diff(Decimal a, Decimal b);

// One trading tick: a timestamp plus one price per configured ticker, in
// ticker order.
struct PriceFrame {
    std::string date;
    std::vector<Decimal> prices;
};

struct PortfolioSeries {
    std::vector<std::string> tickers;
    std::vector<PriceFrame> frames;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    // max/min price of the first frame; 0 when undefined.
    double priceSpreadRatio = 0.0;

    bool ok() const { return errors.empty(); }
};

// Reads a CSV with header "date,TICKER1,..." into a series. Rows may
// appear in any order; frames come back sorted by timestamp. When
// `tickers` is given, columns are restricted to (and ordered by) it.
// Throws ParseError on malformed input, ValidationError on unknown or
// duplicate requested tickers. Performs no admissibility checks beyond
// that; see load_csv.
PortfolioSeries read_csv(const std::string& path,
                         const std::vector<std::string>& tickers = {});
PortfolioSeries parse_csv(const std::string& text,
                          const std::vector<std::string>& tickers = {});

// read_csv plus the admissibility gate used by the braid pipeline:
// throws ValidationError when the selected ticker count is odd.
PortfolioSeries load_csv(const std::string& path,
                         const std::vector<std::string>& tickers = {});

std::string write_csv(const PortfolioSeries& series);

// Checks admissibility (even ticker count of at least four, positive
// prices, strictly increasing timestamps) and flags a warning when the
// first frame's price spread exceeds spreadLimit. Warnings never make
// the series inadmissible.
ValidationReport validate_portfolio(const PortfolioSeries& series,
                                    double spreadLimit = 1.5);

}  // namespace braidwire
