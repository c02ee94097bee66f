#pragma once

/*
 * report.hpp
 * ----------
 * Machine-readable output for the CLI. Coefficients are serialized as
 * decimal strings so arbitrary-precision values survive any JSON parser,
 * and key order is fixed so emitted reports round-trip byte-identically.
 * CSV rows mirror the fixture file format.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cjones/bigint.hpp"
#include "cjones/stability.hpp"

namespace cjones {

using OrderedJson = nlohmann::ordered_json;

struct ComputeRow {
    int color = 0;
    std::int64_t depth = 0;
    std::int64_t min_a_degree = 0;  // anchor of the computed window before hat-normalization
    int hat_sign = 1;
    std::vector<BigInt> coefficients;  // hat-normalized, descending q
};

inline OrderedJson coefficients_json(const std::vector<BigInt>& coeffs) {
    OrderedJson arr = OrderedJson::array();
    for (const BigInt& c : coeffs) arr.push_back(to_decimal(c));
    return arr;
}

inline OrderedJson compute_report(const std::string& knot_id, bool normalized,
                                  const std::vector<ComputeRow>& rows) {
    OrderedJson doc;
    doc["command"] = "compute";
    doc["knot"] = knot_id;
    doc["normalized"] = normalized;
    doc["rows"] = OrderedJson::array();
    for (const ComputeRow& r : rows) {
        OrderedJson row;
        row["color"] = r.color;
        row["depth"] = r.depth;
        row["min_a_degree"] = std::to_string(r.min_a_degree);
        row["hat_sign"] = r.hat_sign;
        row["coefficients"] = coefficients_json(r.coefficients);
        doc["rows"].push_back(std::move(row));
    }
    return doc;
}

// One fixture-format line per row; hat-relative rows declare top degree 0.
inline std::string compute_report_csv(const std::string& knot_id, const std::vector<ComputeRow>& rows) {
    std::ostringstream os;
    for (const ComputeRow& r : rows) {
        os << knot_id << ", " << r.color << ", 0";
        for (const BigInt& c : r.coefficients) os << ", " << to_decimal(c);
        os << "\n";
    }
    return os.str();
}

inline std::string compute_report_text(const std::string& knot_id, const std::vector<ComputeRow>& rows) {
    std::ostringstream os;
    for (const ComputeRow& r : rows) {
        os << knot_id << " color " << r.color << " (top " << r.depth << " coefficients, min A-degree "
           << r.min_a_degree << "):";
        for (const BigInt& c : r.coefficients) os << " " << to_decimal(c);
        os << "\n";
    }
    return os.str();
}

inline OrderedJson stabilize_report(const std::string& knot_id, const StabilizeOutcome& outcome) {
    OrderedJson doc;
    doc["command"] = "stabilize";
    doc["knot"] = knot_id;
    doc["sequences"] = OrderedJson::array();
    for (std::size_t i = 0; i < outcome.sequences.size(); ++i) {
        const StableSequence& s = outcome.sequences[i];
        OrderedJson row;
        row["order"] = s.order;
        row["provenance"] = s.provenance == Provenance::closed_form ? "closed-form" : "extracted";
        row["window"] = outcome.windows[i];
        row["coefficients"] = coefficients_json(s.q_coefficients());
        doc["sequences"].push_back(std::move(row));
    }
    return doc;
}

inline std::string stabilize_report_text(const std::string& knot_id, const StabilizeOutcome& outcome) {
    std::ostringstream os;
    os << "stable sequences for " << knot_id << "\n";
    for (std::size_t i = 0; i < outcome.sequences.size(); ++i) {
        const StableSequence& s = outcome.sequences[i];
        os << "T" << s.order << " ("
           << (s.provenance == Provenance::closed_form ? "closed-form" : "extracted") << ", window "
           << outcome.windows[i] << "):";
        for (const BigInt& c : s.q_coefficients()) os << " " << to_decimal(c);
        os << "\n";
    }
    return os.str();
}

// Canonical serialization: two-space indent, fixed key order.
inline std::string canonical_dump(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

inline std::string round_trip(const std::string& serialized) {
    return canonical_dump(OrderedJson::parse(serialized));
}

}  // namespace cjones
