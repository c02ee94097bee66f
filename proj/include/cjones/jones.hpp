#pragma once

/*
 * jones.hpp
 * ---------
 * Colored Jones polynomials of negative three-pretzel knots.
 *
 * The knot with twist counts (m1, m2, m3), all >= 1, has the triangle as its
 * reduced B-checkerboard graph. Fusing each twist region and removing the
 * crossings writes the (N+1)-colored polynomial as a sum over edge labels
 * (j1, j2, j3) in [0, N]^3 of
 *
 *     prod_i gamma(N,N,2ji)^(mi) * (Delta_(2ji) / theta(N,N,2ji)) * G(j1,j2,j3)
 *
 * where G is the evaluation of the resulting trivalent graph. Only five
 * label families (up to position) reach the top 3N+1 q-coefficients:
 *
 *     (N,N,N), (N,N,N-1), (N,N,N-2), (N,N-1,N-1), (N,N,N-3)
 *
 * with graph evaluations
 *
 *     G(N,N,N-i)    = Gamma(N+i, N-i, N-i)                      (i = 0..3)
 *     G(N,N-1,N-1)  = (Delta_(N-2)/Delta_(N-1))^2 Gamma(N,N,N-2)
 *
 * The gamma monomials are kept inside each summand so summands from
 * different labelings align at absolute A-degree before being added.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cjones/laurent.hpp"
#include "cjones/series.hpp"
#include "cjones/skein.hpp"

namespace cjones {

struct PretzelSpec {
    int m1 = 1, m2 = 1, m3 = 1;

    PretzelSpec(int m1_, int m2_, int m3_) : m1(m1_), m2(m2_), m3(m3_) {
        if (m1 < 1 || m2 < 1 || m3 < 1)
            throw std::invalid_argument("PretzelSpec: twist counts must be >= 1");
    }

    std::array<int, 3> twists() const { return {m1, m2, m3}; }
};

struct LabelTuple {
    int j1 = 0, j2 = 0, j3 = 0;

    std::array<int, 3> values() const { return {j1, j2, j3}; }

    std::array<int, 3> sorted_descending() const {
        std::array<int, 3> v = values();
        std::sort(v.begin(), v.end(), std::greater<int>());
        return v;
    }
};

struct ColoredJonesResult {
    int N = 0;               // the series approximates J_(N+1)
    std::int64_t depth = 0;  // number of valid top q-coefficients
    TruncatedSeries series;  // absolute A-degrees, stride 4 on its lattice
    bool normalized = false;
};

namespace detail {

// Delta_(2j) / theta(N,N,2j) simplified to factorials:
//   (-1)^(N+j) {2j+1}! {N}!^2 / ({N+j+1}! {j}!^2 {N-j}!)
inline QFactorialExpression delta_over_theta(int N, int j) {
    if (j < 0 || j > N) throw std::invalid_argument("delta_over_theta: label out of range");
    QFactorialExpression e;
    e.mul_monomial((N + j) % 2 != 0 ? -1 : 1, 0);
    e.mul_factorial(2 * j + 1, 1);
    e.mul_factorial(N, 2);
    e.mul_factorial(N + j + 1, -1);
    e.mul_factorial(j, -2);
    e.mul_factorial(N - j, -1);
    return e;
}

// Graph evaluation for a contributing label multiset, by descending labels.
inline QFactorialExpression graph_evaluation(int N, const std::array<int, 3>& sorted) {
    if (sorted[0] == N && sorted[1] == N) {
        const int i = N - sorted[2];
        if (i >= 0 && i <= 3) return gamma_xyz(N + i, N - i, N - i);
    }
    if (sorted[0] == N && sorted[1] == N - 1 && sorted[2] == N - 1 && N >= 2) {
        // Resolving the two leftover idempotents contributes
        // (-Delta_(N-2)/Delta_(N-1)) twice: ({N-1}/{N})^2 exactly.
        QFactorialExpression e;
        e.mul_single(N - 1, 2);
        e.mul_single(N, -2);
        e *= gamma_xyz(N, N, N - 2);
        return e;
    }
    throw std::invalid_argument("graph_evaluation: labeling outside the contributing families");
}

inline bool is_contributing(int N, const LabelTuple& labels) {
    const auto s = labels.sorted_descending();
    if (s[2] < 0) return false;
    if (s[0] != N) return false;
    if (s[1] == N) return N - s[2] <= 3;
    return s[1] == N - 1 && s[2] == N - 1 && N >= 2;
}

inline QFactorialExpression summand_expression(int N, const LabelTuple& labels,
                                               const PretzelSpec& spec) {
    QFactorialExpression e = graph_evaluation(N, labels.sorted_descending());
    const std::array<int, 3> js = labels.values();
    const std::array<int, 3> ms = spec.twists();
    for (int pos = 0; pos < 3; ++pos) {
        const TwistMonomial g = gamma_twist(N, N, 2 * js[pos]);
        const int sign = (g.sign < 0 && ms[pos] % 2 != 0) ? -1 : 1;
        e.mul_monomial(sign, g.a_exponent * ms[pos]);
        e *= delta_over_theta(N, js[pos]);
    }
    return e;
}

// All position-sensitive contributing labelings for color N+1. Position
// matters because the gamma exponent carries the per-region twist count.
inline std::vector<LabelTuple> contributing_labelings(int N) {
    std::vector<LabelTuple> out;
    out.push_back({N, N, N});
    for (int drop = 1; drop <= 3; ++drop) {
        if (N - drop < 0) continue;
        out.push_back({N - drop, N, N});
        out.push_back({N, N - drop, N});
        out.push_back({N, N, N - drop});
    }
    if (N >= 2) {
        out.push_back({N, N - 1, N - 1});
        out.push_back({N - 1, N, N - 1});
        out.push_back({N - 1, N - 1, N});
    }
    return out;
}

}  // namespace detail

// One term of the multi-sum, as the exact top window of
// gamma^m * Delta/theta * graph over all three positions, including the
// gamma monomial shift. depth counts q-terms from the summand's own top.
inline TruncatedSeries summand(int N, const LabelTuple& labels, const PretzelSpec& spec,
                               std::int64_t depth) {
    if (N < 1) throw std::invalid_argument("summand: N must be >= 1");
    if (depth < 1) throw std::invalid_argument("summand: depth must be positive");
    if (!detail::is_contributing(N, labels))
        throw std::invalid_argument("summand: labeling does not contribute to the top window");
    return detail::summand_expression(N, labels, spec).expand_to_depth(slots_for_q_terms(depth));
}

// Top `depth` q-coefficients of J_(N+1) for the pretzel knot `spec`,
// optionally normalized by Delta_N. depth beyond 3N+1 is refused: the label
// families evaluated here only guarantee that window.
inline ColoredJonesResult truncated_colored_jones(int N, const PretzelSpec& spec, std::int64_t depth,
                                                  bool normalized = true) {
    if (N < 1) throw std::invalid_argument("truncated_colored_jones: N must be >= 1");
    if (depth < 1 || depth > 3 * N + 1)
        throw std::invalid_argument("truncated_colored_jones: depth must be in [1, 3N+1]");

    const std::vector<LabelTuple> labelings = detail::contributing_labelings(N);
    std::vector<QFactorialExpression> exprs;
    exprs.reserve(labelings.size());
    std::int64_t base = 0;
    bool first = true;
    for (const LabelTuple& L : labelings) {
        exprs.push_back(detail::summand_expression(N, L, spec));
        const std::int64_t a = exprs.back().min_a_degree();
        base = first ? a : std::min(base, a);
        first = false;
    }
    if (base != exprs.front().min_a_degree())
        throw std::logic_error("truncated_colored_jones: all-N labeling is not degree-minimal");

    const std::int64_t window_end = base + slots_for_q_terms(depth);
    TruncatedSeries acc(base, std::vector<BigInt>(static_cast<std::size_t>(window_end - base), BigInt(0)));
    for (const QFactorialExpression& e : exprs) {
        const std::int64_t a = e.min_a_degree();
        if ((a - base) % 4 != 0)
            throw std::logic_error("truncated_colored_jones: summand off the q-lattice");
        const std::int64_t slots = window_end - a;
        if (slots <= 0) continue;  // entirely below the requested window
        acc = add_series(acc, e.expand_to_depth(slots));
    }

    ColoredJonesResult out;
    out.N = N;
    out.depth = depth;
    out.normalized = normalized;
    if (normalized) {
        const LaurentPolynomial dn = delta(N);
        out.series = series_div(acc, truncate_low(dn, acc.depth()), acc.depth());
    } else {
        out.series = acc;
    }
    return out;
}

// Independent oracle: the normalized colored Jones polynomial of the
// figure-eight knot at color N+1 from its cyclotomic expansion
//   sum_{k=0..N} prod_{j=1..k} {N+1-j}{N+1+j},
// a closed form with no skein machinery behind it.
inline LaurentPolynomial oracle_fig8(int N) {
    if (N < 0) throw std::invalid_argument("oracle_fig8: negative color");
    LaurentPolynomial sum = LaurentPolynomial::one();
    LaurentPolynomial product = LaurentPolynomial::one();
    for (int k = 1; k <= N; ++k) {
        product *= qbrace(N + 1 - k);
        product *= qbrace(N + 1 + k);
        sum += product;
    }
    return sum;
}

}  // namespace cjones
