#pragma once

/*
 * series.hpp
 * ----------
 * Truncated power-series windows at the low-A (= high-q) end.
 *
 * A TruncatedSeries represents a Laurent series with no terms below `anchor`
 * and known coefficients on the exponent window [anchor, anchor + depth);
 * everything at or above the window end is unspecified. "The highest n terms
 * of f(q)" always means the lowest-A window here, and one q-term spans four
 * consecutive A-slots.
 */

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cjones/laurent.hpp"

namespace cjones {

struct TruncatedSeries {
    std::int64_t anchor = 0;       // minimum possible A-degree
    std::vector<BigInt> coeffs;    // ascending A-degree, one slot per exponent

    TruncatedSeries() = default;
    TruncatedSeries(std::int64_t anchor_, std::vector<BigInt> coeffs_)
        : anchor(anchor_), coeffs(std::move(coeffs_)) {}

    std::int64_t depth() const { return static_cast<std::int64_t>(coeffs.size()); }
    std::int64_t end() const { return anchor + depth(); }

    BigInt at_exponent(std::int64_t e) const {
        if (e < anchor) return BigInt(0);
        if (e >= end()) throw std::out_of_range("TruncatedSeries: exponent beyond window");
        return coeffs[static_cast<std::size_t>(e - anchor)];
    }

    bool window_is_zero() const {
        for (const BigInt& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    // Canonical form: leading zero slots folded into the anchor. Lossless,
    // since a zero slot at the bottom of the window carries the same
    // information as a higher anchor.
    TruncatedSeries trimmed() const {
        std::size_t k = 0;
        while (k < coeffs.size() && coeffs[k] == 0) ++k;
        TruncatedSeries out;
        out.anchor = anchor + static_cast<std::int64_t>(k);
        out.coeffs.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(k), coeffs.end());
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[A^" << anchor << "; ";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) os << ",";
            os << coeffs[i].str();
        }
        os << "]";
        return os.str();
    }
};

inline bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.anchor == b.anchor && a.coeffs == b.coeffs;
}
inline bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

// The n lowest-A coefficients of f, zero-padded above if f spans fewer slots.
inline TruncatedSeries truncate_low(const LaurentPolynomial& f, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("truncate_low: depth must be positive");
    if (f.is_zero()) throw std::domain_error("truncate_low: zero polynomial");
    TruncatedSeries out;
    out.anchor = f.min_degree();
    out.coeffs.assign(static_cast<std::size_t>(n), BigInt(0));
    for (const auto& [e, c] : f.terms()) {
        const std::int64_t off = e - out.anchor;
        if (off < n) out.coeffs[static_cast<std::size_t>(off)] = c;
    }
    return out;
}

inline TruncatedSeries retruncate(const TruncatedSeries& s, std::int64_t m) {
    if (m < 0 || m > s.depth()) throw std::invalid_argument("retruncate: bad depth");
    TruncatedSeries out;
    out.anchor = s.anchor;
    out.coeffs.assign(s.coeffs.begin(), s.coeffs.begin() + static_cast<std::ptrdiff_t>(m));
    return out;
}

inline TruncatedSeries shift_series(const TruncatedSeries& s, std::int64_t shift) {
    TruncatedSeries out = s;
    out.anchor += shift;
    return out;
}

inline TruncatedSeries negate_series(const TruncatedSeries& s) {
    TruncatedSeries out = s;
    for (BigInt& c : out.coeffs) c = -c;
    return out;
}

// Sum, valid on the largest window both operands determine:
// [min(anchors), min(ends)). A series asserts it has no terms below its
// anchor, so below the other anchor only one operand contributes.
inline TruncatedSeries add_series(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out;
    out.anchor = std::min(a.anchor, b.anchor);
    const std::int64_t e = std::min(a.end(), b.end());
    if (e <= out.anchor) return out;  // empty window
    out.coeffs.assign(static_cast<std::size_t>(e - out.anchor), BigInt(0));
    for (std::int64_t x = out.anchor; x < e; ++x) {
        BigInt v = 0;
        if (x >= a.anchor && x < a.end()) v += a.coeffs[static_cast<std::size_t>(x - a.anchor)];
        if (x >= b.anchor && x < b.end()) v += b.coeffs[static_cast<std::size_t>(x - b.anchor)];
        out.coeffs[static_cast<std::size_t>(x - out.anchor)] = v;
    }
    return out;
}

inline TruncatedSeries sub_series(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add_series(a, negate_series(b));
}

// Product window: offsets below min(depth_a, depth_b) are unaffected by the
// unspecified tails of either factor.
inline TruncatedSeries mul_series(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out;
    out.anchor = a.anchor + b.anchor;
    const std::int64_t d = std::min(a.depth(), b.depth());
    out.coeffs.assign(static_cast<std::size_t>(std::max<std::int64_t>(d, 0)), BigInt(0));
    for (std::int64_t i = 0; i < d; ++i) {
        if (a.coeffs[static_cast<std::size_t>(i)] == 0) continue;
        for (std::int64_t j = 0; i + j < d; ++j) {
            if (b.coeffs[static_cast<std::size_t>(j)] == 0) continue;
            out.coeffs[static_cast<std::size_t>(i + j)] +=
                a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

// Multiplication by an exact polynomial keeps the window depth.
inline TruncatedSeries mul_series_poly(const TruncatedSeries& s, const LaurentPolynomial& p) {
    TruncatedSeries out;
    if (p.is_zero()) {
        out.anchor = s.anchor;
        out.coeffs.assign(s.coeffs.size(), BigInt(0));
        return out;
    }
    out.anchor = s.anchor + p.min_degree();
    out.coeffs.assign(s.coeffs.size(), BigInt(0));
    const std::int64_t d = s.depth();
    for (const auto& [e, c] : p.terms()) {
        const std::int64_t off = e - p.min_degree();
        if (off >= d) continue;
        for (std::int64_t i = 0; i + off < d; ++i)
            out.coeffs[static_cast<std::size_t>(i + off)] += c * s.coeffs[static_cast<std::size_t>(i)];
    }
    return out;
}

// Truncated long division from the low-A end: the unique series f with
// f*h agreeing with g to depth n. The divisor's first window coefficient
// must be a unit; a non-unit signals a formula misuse upstream.
inline TruncatedSeries series_div(const TruncatedSeries& g, const TruncatedSeries& h, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("series_div: depth must be positive");
    if (g.depth() < n || h.depth() < n)
        throw std::invalid_argument("series_div: insufficient operand depth");
    const BigInt& lead = h.coeffs[0];
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("series_div: divisor leading coefficient is not a unit");
    TruncatedSeries out;
    out.anchor = g.anchor - h.anchor;
    out.coeffs.assign(static_cast<std::size_t>(n), BigInt(0));
    for (std::int64_t i = 0; i < n; ++i) {
        BigInt acc = g.coeffs[static_cast<std::size_t>(i)];
        for (std::int64_t k = 1; k <= i; ++k) {
            const BigInt& hk = h.coeffs[static_cast<std::size_t>(k)];
            if (hk == 0) continue;
            acc -= hk * out.coeffs[static_cast<std::size_t>(i - k)];
        }
        out.coeffs[static_cast<std::size_t>(i)] = lead < 0 ? BigInt(-acc) : acc;
    }
    return out;
}

struct HatSeries {
    TruncatedSeries series;  // anchor 0, first coefficient +1
    std::int64_t shift = 0;
    int sign = 1;
};

inline HatSeries hat_series(const TruncatedSeries& s) {
    TruncatedSeries t = s.trimmed();
    if (t.coeffs.empty()) throw std::domain_error("hat_series: window is identically zero");
    const BigInt& c = t.coeffs[0];
    if (c != 1 && c != -1) throw std::domain_error("hat_series: leading coefficient is not a unit");
    HatSeries out;
    out.shift = t.anchor;
    out.sign = c < 0 ? -1 : 1;
    out.series = t;
    out.series.anchor = 0;
    if (out.sign < 0)
        for (BigInt& v : out.series.coeffs) v = -v;
    return out;
}

// View of a series as coefficients of descending integer powers of q = A^-4.
// Nonzero coefficients off the anchor's stride-4 lattice mean the window is
// not an integer q-series; the error spells out the fractional power.
class QSeriesView {
  public:
    explicit QSeriesView(const TruncatedSeries& s, std::int64_t top_q_degree = 0)
        : series_(s), top_q_(top_q_degree) {
        for (std::int64_t off = 0; off < s.depth(); ++off) {
            if (s.coeffs[static_cast<std::size_t>(off)] == 0) continue;
            const std::int64_t r = off % 4;
            if (r != 0) {
                std::ostringstream os;
                os << "QSeriesView: coefficient at A-offset " << off << " corresponds to q^(" << top_q_
                   << " - " << off << "/4), a " << (r == 2 ? "half" : "quarter") << "-integer power";
                throw std::domain_error(os.str());
            }
        }
    }

    // Number of q-coefficients the window determines.
    std::int64_t count() const { return (series_.depth() + 3) / 4; }

    // k-th coefficient in descending q order; q-degree is top_q_degree - k.
    BigInt coeff(std::int64_t k) const {
        if (k < 0 || k >= count()) throw std::out_of_range("QSeriesView: index beyond window");
        return series_.coeffs[static_cast<std::size_t>(4 * k)];
    }

    std::int64_t q_degree(std::int64_t k) const { return top_q_ - k; }

    std::vector<BigInt> coefficients() const {
        std::vector<BigInt> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::int64_t k = 0; k < count(); ++k) out.push_back(coeff(k));
        return out;
    }

  private:
    TruncatedSeries series_;
    std::int64_t top_q_;
};

// Window size in A-slots needed to hold `q_terms` q-coefficients.
inline std::int64_t slots_for_q_terms(std::int64_t q_terms) { return 4 * (q_terms - 1) + 1; }

// Dense descending-q coefficient list -> stride-4 series anchored at 0.
inline TruncatedSeries series_from_q_coefficients(const std::vector<BigInt>& descending_q) {
    TruncatedSeries out;
    if (descending_q.empty()) return out;
    out.coeffs.assign(static_cast<std::size_t>(slots_for_q_terms(static_cast<std::int64_t>(descending_q.size()))),
                      BigInt(0));
    for (std::size_t k = 0; k < descending_q.size(); ++k) out.coeffs[4 * k] = descending_q[k];
    return out;
}

// Coefficients of prod_{n>=1} (1 - q^-n) to the requested number of q-terms,
// computed both by the truncated product and by the pentagonal-number sum.
// The two routes must agree slot for slot.
inline TruncatedSeries euler_product(std::int64_t q_depth) {
    if (q_depth < 1) throw std::invalid_argument("euler_product: depth must be positive");
    const std::int64_t w = slots_for_q_terms(q_depth);
    std::vector<BigInt> prod(static_cast<std::size_t>(w), BigInt(0));
    prod[0] = 1;
    for (std::int64_t n = 1; 4 * n < w; ++n) {
        // multiply by (1 - A^(4n)) in place
        for (std::int64_t i = w - 1; i >= 4 * n; --i)
            prod[static_cast<std::size_t>(i)] -= prod[static_cast<std::size_t>(i - 4 * n)];
    }
    std::vector<BigInt> pent(static_cast<std::size_t>(w), BigInt(0));
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t g1 = k * (3 * k - 1) / 2;       // k and -k pentagonal exponents
        const std::int64_t g2 = k * (3 * k + 1) / 2;
        if (4 * g1 >= w && 4 * g2 >= w) break;
        const BigInt sign = (k % 2 == 0) ? 1 : -1;
        if (4 * g1 < w) pent[static_cast<std::size_t>(4 * g1)] += sign;
        if (k > 0 && 4 * g2 < w) pent[static_cast<std::size_t>(4 * g2)] += sign;
    }
    if (prod != pent)
        throw std::logic_error("euler_product: truncated product and pentagonal sum disagree");
    return TruncatedSeries(0, std::move(prod));
}

// Hat-normalized descending-q coefficients, the comparison currency of all
// coefficient-table checks.
inline std::vector<BigInt> hat_q_coefficients(const TruncatedSeries& s, std::int64_t q_terms) {
    const HatSeries h = hat_series(s);
    QSeriesView view(h.series);
    if (view.count() < q_terms)
        throw std::invalid_argument("hat_q_coefficients: window holds fewer q-terms than requested");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(q_terms));
    for (std::int64_t k = 0; k < q_terms; ++k) out.push_back(view.coeff(k));
    return out;
}

inline std::vector<BigInt> hat_q_coefficients(const LaurentPolynomial& f, std::int64_t q_terms) {
    return hat_q_coefficients(truncate_low(f, slots_for_q_terms(q_terms)), q_terms);
}

}  // namespace cjones
