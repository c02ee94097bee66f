#pragma once

/*
 * fixtures.hpp
 * ------------
 * Reference coefficient tables, stored as line-oriented text so every row can
 * be audited by eye against its source:
 *
 *     knot-id, color, top-q-degree, c0, c1, ...
 *
 * Coefficients are listed by descending q-power starting at the declared top
 * degree. '#' starts a comment, blank lines are skipped, and a duplicate
 * (knot-id, color) key is an error.
 */

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cjones/bigint.hpp"
#include "cjones/series.hpp"

namespace cjones {

struct FixtureRow {
    std::string knot;
    int color = 0;
    std::int64_t top_q_degree = 0;
    std::vector<BigInt> coefficients;  // descending q from top_q_degree
};

using FixtureKey = std::pair<std::string, int>;
using FixtureMap = std::map<FixtureKey, FixtureRow>;

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace detail

inline FixtureMap parse_fixture(std::istream& in, const std::string& origin = "<stream>") {
    FixtureMap out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::strip(line);
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(detail::strip(field));

        auto fail = [&](const std::string& why) {
            std::ostringstream os;
            os << origin << ":" << lineno << ": " << why;
            throw std::runtime_error(os.str());
        };
        if (fields.size() < 4) fail("expected `knot-id, color, top-q-degree, c0, ...`");
        FixtureRow row;
        row.knot = fields[0];
        if (row.knot.empty()) fail("empty knot id");
        try {
            row.color = std::stoi(fields[1]);
            row.top_q_degree = std::stoll(fields[2]);
            for (std::size_t i = 3; i < fields.size(); ++i)
                row.coefficients.push_back(parse_bigint(fields[i]));
        } catch (const std::exception&) {
            fail("malformed numeric field");
        }
        if (row.color < 1) fail("color must be >= 1");
        const FixtureKey key{row.knot, row.color};
        if (!out.emplace(key, std::move(row)).second)
            fail("duplicate (knot-id, color) key");
    }
    return out;
}

inline FixtureMap load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_fixture: cannot open " + path);
    return parse_fixture(in, path);
}

// Stride-4 series over descending q, anchored at 0; the declared top degree
// stays with the row, so comparisons remain convention-explicit.
inline TruncatedSeries fixture_series(const FixtureRow& row) {
    return series_from_q_coefficients(row.coefficients);
}

}  // namespace cjones
