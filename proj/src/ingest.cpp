#include "braidwire/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace braidwire {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool all_digits(const std::string& s, size_t from, size_t count) {
    if (from + count > s.size()) return false;
    for (size_t i = from; i < from + count; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// ISO-8601 day, optionally with a lexicographic-compatible time suffix
// ("2014-03-19" or "2014-03-19T09:30" / ...:30:05).
bool valid_timestamp(const std::string& s) {
    if (s.size() < 10) return false;
    if (!all_digits(s, 0, 4) || s[4] != '-' || !all_digits(s, 5, 2) ||
        s[7] != '-' || !all_digits(s, 8, 2))
        return false;
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    if (month < 1 || month > 12 || day < 1 || day > 31) return false;
    if (s.size() == 10) return true;
    if (s[10] != 'T') return false;
    std::string t = s.substr(11);
    if (t.size() != 5 && t.size() != 8) return false;
    if (!all_digits(t, 0, 2) || t[2] != ':' || !all_digits(t, 3, 2))
        return false;
    if (t.size() == 8 && (t[5] != ':' || !all_digits(t, 6, 2))) return false;
    int hh = (t[0] - '0') * 10 + (t[1] - '0');
    int mm = (t[3] - '0') * 10 + (t[4] - '0');
    return hh < 24 && mm < 60;
}

}  // namespace

Decimal Decimal::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty price field");
    size_t pos = 0;
    bool neg = false;
    if (text[pos] == '-') {
        neg = true;
        ++pos;
    }
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("malformed price '" + text + "'");
    std::int64_t ip = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ip = ip * 10 + (text[pos] - '0');
        if (ip > 1'000'000'000'000LL)
            throw ParseError("price out of range '" + text + "'");
        ++pos;
    }
    std::int64_t frac = 0;
    int fracDigits = 0;
    if (pos < text.size()) {
        if (text[pos] != '.')
            throw ParseError("malformed price '" + text + "'");
        ++pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            frac = frac * 10 + (text[pos] - '0');
            ++fracDigits;
            ++pos;
        }
        if (fracDigits == 0 || fracDigits > 4)
            throw ParseError("price needs 1..4 fraction digits '" + text +
                             "'");
        if (pos != text.size())
            throw ParseError("malformed price '" + text + "'");
    }
    for (int d = fracDigits; d < 4; ++d) frac *= 10;
    std::int64_t raw = ip * 10000 + frac;
    return Decimal{neg ? -raw : raw};
}

std::string Decimal::str() const {
    std::int64_t v = raw < 0 ? -raw : raw;
    std::int64_t ip = v / 10000;
    std::int64_t frac = v % 10000;
    std::ostringstream out;
    if (raw < 0) out << '-';
    out << ip << '.';
    if (frac % 100 == 0) {
        std::int64_t f2 = frac / 100;
        out << static_cast<char>('0' + f2 / 10)
            << static_cast<char>('0' + f2 % 10);
    } else {
        out << static_cast<char>('0' + frac / 1000)
            << static_cast<char>('0' + (frac / 100) % 10)
            << static_cast<char>('0' + (frac / 10) % 10)
            << static_cast<char>('0' + frac % 10);
    }
    return out.str();
}

Decimal abs_diff(Decimal a, Decimal b) {
    std::int64_t d = a.raw - b.raw;
    return Decimal{d < 0 ? -d : d};
}

PortfolioSeries parse_csv(const std::string& text,
                          const std::vector<std::string>& tickers) {
    if (trim(text).empty()) throw ParseError("empty CSV input");

    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    size_t lineNo = 0;
    size_t headerLine = 0;
    std::vector<std::string> header;
    for (; lineNo < lines.size(); ++lineNo) {
        if (!trim(lines[lineNo]).empty()) {
            header = split_fields(lines[lineNo]);
            headerLine = lineNo + 1;
            break;
        }
    }
    if (header.empty()) throw ParseError("empty CSV input");
    if (header[0] != "date")
        throw ParseError("line " + std::to_string(headerLine) +
                         ": header must start with 'date'");
    std::vector<std::string> allTickers(header.begin() + 1, header.end());
    if (allTickers.empty())
        throw ParseError("line " + std::to_string(headerLine) +
                         ": no ticker columns");
    std::set<std::string> seen;
    for (const auto& t : allTickers) {
        if (t.empty())
            throw ParseError("line " + std::to_string(headerLine) +
                             ": empty ticker name");
        if (!seen.insert(t).second)
            throw ParseError("line " + std::to_string(headerLine) +
                             ": duplicate ticker '" + t + "'");
    }

    // Column selection: requested order wins, otherwise file order.
    std::vector<size_t> cols;
    std::vector<std::string> outTickers;
    if (tickers.empty()) {
        outTickers = allTickers;
        for (size_t c = 0; c < allTickers.size(); ++c) cols.push_back(c);
    } else {
        std::set<std::string> requested;
        for (const auto& want : tickers) {
            if (!requested.insert(want).second)
                throw ValidationError("ticker '" + want +
                                      "' requested twice");
            auto it = std::find(allTickers.begin(), allTickers.end(), want);
            if (it == allTickers.end())
                throw ValidationError("ticker '" + want +
                                      "' not present in CSV");
            cols.push_back(static_cast<size_t>(it - allTickers.begin()));
            outTickers.push_back(want);
        }
    }

    std::map<std::string, std::pair<size_t, std::vector<Decimal>>> rows;
    for (size_t ln = lineNo + 1; ln < lines.size(); ++ln) {
        std::string raw = trim(lines[ln]);
        if (raw.empty()) continue;
        auto fields = split_fields(lines[ln]);
        if (fields.size() != allTickers.size() + 1)
            throw ParseError("line " + std::to_string(ln + 1) + ": expected " +
                             std::to_string(allTickers.size() + 1) +
                             " fields, got " + std::to_string(fields.size()));
        const std::string& date = fields[0];
        if (!valid_timestamp(date))
            throw ParseError("line " + std::to_string(ln + 1) +
                             ": bad timestamp '" + date + "'");
        if (rows.count(date))
            throw ParseError("line " + std::to_string(ln + 1) +
                             ": duplicate timestamp '" + date + "'");
        std::vector<Decimal> prices;
        prices.reserve(cols.size());
        for (size_t c : cols) {
            const std::string& cell = fields[c + 1];
            if (cell.empty())
                throw ParseError("line " + std::to_string(ln + 1) +
                                 ": missing price for " + allTickers[c]);
            try {
                prices.push_back(Decimal::parse(cell));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(ln + 1) + ": " +
                                 e.what());
            }
        }
        rows.emplace(date, std::make_pair(ln, std::move(prices)));
    }
    if (rows.empty()) throw ParseError("CSV has no data rows");

    PortfolioSeries series;
    series.tickers = std::move(outTickers);
    for (auto& [date, entry] : rows)
        series.frames.push_back(PriceFrame{date, std::move(entry.second)});
    return series;
}

PortfolioSeries read_csv(const std::string& path,
                         const std::vector<std::string>& tickers) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_csv(buf.str(), tickers);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

PortfolioSeries load_csv(const std::string& path,
                         const std::vector<std::string>& tickers) {
    PortfolioSeries series = read_csv(path, tickers);
    if (series.tickers.size() % 2 != 0)
        throw ValidationError(
            "portfolio has an odd number of tickers (" +
            std::to_string(series.tickers.size()) +
            "); strands pair up, so select an even subset");
    return series;
}

std::string write_csv(const PortfolioSeries& series) {
    std::ostringstream out;
    out << "date";
    for (const auto& t : series.tickers) out << ',' << t;
    out << '\n';
    for (const auto& f : series.frames) {
        out << f.date;
        for (const auto& p : f.prices) out << ',' << p.str();
        out << '\n';
    }
    return out.str();
}

ValidationReport validate_portfolio(const PortfolioSeries& series,
                                    double spreadLimit) {
    ValidationReport report;
    size_t n = series.tickers.size();
    if (n % 2 != 0)
        report.errors.push_back("ticker count " + std::to_string(n) +
                                " is odd");
    if (n < 4)
        report.errors.push_back("fewer than four tickers (" +
                                std::to_string(n) + ")");
    if (series.frames.empty()) report.errors.push_back("series has no frames");

    std::string prev;
    for (const auto& f : series.frames) {
        if (f.prices.size() != n) {
            report.errors.push_back("frame " + f.date + " has " +
                                    std::to_string(f.prices.size()) +
                                    " prices for " + std::to_string(n) +
                                    " tickers");
            continue;
        }
        if (!prev.empty() && f.date <= prev)
            report.errors.push_back("timestamps not strictly increasing at " +
                                    f.date);
        prev = f.date;
        for (size_t c = 0; c < f.prices.size(); ++c)
            if (f.prices[c].raw <= 0)
                report.errors.push_back("non-positive price for " +
                                        series.tickers[c] + " at " + f.date);
    }

    if (!series.frames.empty() &&
        series.frames[0].prices.size() == n && n > 0) {
        const auto& first = series.frames[0].prices;
        Decimal lo = first[0], hi = first[0];
        for (const auto& p : first) {
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        if (lo.raw > 0) {
            report.priceSpreadRatio =
                static_cast<double>(hi.raw) / static_cast<double>(lo.raw);
            if (report.priceSpreadRatio > spreadLimit) {
                std::ostringstream msg;
                msg.precision(4);
                msg << std::fixed << "price spread ratio "
                    << report.priceSpreadRatio << " exceeds " << spreadLimit
                    << " at " << series.frames[0].date
                    << "; distant strands rarely interact";
                report.warnings.push_back(msg.str());
            }
        }
    }
    return report;
}

}  // namespace braidwire
