#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "cjones/jones.hpp"
#include "cjones/series.hpp"
#include "cjones/skein.hpp"

using namespace cjones;

namespace {

std::vector<BigInt> big(std::initializer_list<int> vals) {
    std::vector<BigInt> out;
    for (int v : vals) out.emplace_back(v);
    return out;
}

// Number of q-terms in a full polynomial.
std::int64_t full_q_terms(const LaurentPolynomial& f) {
    return (f.max_degree() - f.min_degree()) / 4 + 1;
}

}  // namespace

TEST(Jones, OracleSmallColors) {
    EXPECT_EQ(oracle_fig8(0), LaurentPolynomial::one());
    // color 2: the Jones polynomial of the figure-eight
    EXPECT_EQ(hat_q_coefficients(oracle_fig8(1), 5), big({1, -1, 1, -1, 1}));
}

TEST(Jones, OracleIsPalindromic) {
    // q <-> q^-1 symmetry of the amphichiral figure-eight
    for (int N = 1; N <= 6; ++N) {
        const LaurentPolynomial j = oracle_fig8(N);
        const std::int64_t terms = full_q_terms(j);
        const auto c = hat_q_coefficients(j, terms);
        const std::vector<BigInt> rev(c.rbegin(), c.rend());
        EXPECT_EQ(c, rev) << "N = " << N;
    }
}

TEST(Jones, OracleNormalizationAtOne) {
    for (int N = 1; N <= 8; ++N) EXPECT_EQ(oracle_fig8(N).evaluate_at_one(), BigInt(1));
}

TEST(Jones, OracleHeadIsTwoNFactorial) {
    for (int N = 1; N <= 10; ++N)
        EXPECT_EQ(hat_q_coefficients(oracle_fig8(N), N + 1),
                  hat_q_coefficients(qbrace_fact(2 * N), N + 1))
            << "N = " << N;
}

TEST(Jones, TruncatedJonesMatchesOracle) {
    const PretzelSpec fig8(2, 1, 1);
    for (int N = 1; N <= 8; ++N) {
        const auto r = truncated_colored_jones(N, fig8, 3 * N + 1, true);
        const std::int64_t depth = std::min<std::int64_t>(r.depth, full_q_terms(oracle_fig8(N)));
        EXPECT_EQ(hat_q_coefficients(r.series, depth), hat_q_coefficients(oracle_fig8(N), depth))
            << "N = " << N;
    }
}

TEST(Jones, SummandRejectsNonContributingLabeling) {
    // (4,4,0) is a four-step drop, (4,3,2) and (4,2,2) are mixed multi-step
    // drops; none reaches the guaranteed window.
    EXPECT_THROW(summand(4, {4, 4, 0}, PretzelSpec(1, 1, 1), 4), std::invalid_argument);
    EXPECT_THROW(summand(4, {4, 3, 2}, PretzelSpec(1, 1, 1), 4), std::invalid_argument);
    EXPECT_THROW(summand(4, {4, 2, 2}, PretzelSpec(1, 1, 1), 4), std::invalid_argument);
    EXPECT_THROW(summand(2, {2, 2, -1}, PretzelSpec(1, 1, 1), 4), std::invalid_argument);
    EXPECT_THROW(summand(1, {1, 0, 0}, PretzelSpec(1, 1, 1), 4), std::invalid_argument);
    // (4,4,1) = (N,N,N-3) at N = 4 is contributing
    EXPECT_NO_THROW(summand(4, {4, 4, 1}, PretzelSpec(1, 1, 1), 4));
}

TEST(Jones, DepthGuards) {
    EXPECT_THROW(truncated_colored_jones(3, PretzelSpec(1, 1, 1), 3 * 3 + 2, true),
                 std::invalid_argument);
    EXPECT_THROW(truncated_colored_jones(3, PretzelSpec(1, 1, 1), 0, true), std::invalid_argument);
    EXPECT_NO_THROW(truncated_colored_jones(1, PretzelSpec(1, 1, 1), 4, true));
    EXPECT_THROW(truncated_colored_jones(1, PretzelSpec(1, 1, 1), 5, true), std::invalid_argument);
}

TEST(Jones, AllNSummandReducesToGammaNNN) {
    // With every label N the fusion ratio is exactly 1, so the summand is
    // Gamma(N,N,N) shifted by the three twist monomials.
    for (int N = 2; N <= 5; ++N) {
        const PretzelSpec spec(1, 2, 3);
        const TruncatedSeries s = summand(N, {N, N, N}, spec, 2 * N + 1);
        const TruncatedSeries g = gamma_xyz(N, N, N).expand_to_depth(slots_for_q_terms(2 * N + 1));
        const std::int64_t predicted_shift =
            (1 + 2 + 3) * gamma_twist(N, N, 2 * N).a_exponent;
        EXPECT_EQ(s.anchor - g.anchor, predicted_shift) << "N = " << N;
        EXPECT_EQ(s.coeffs, g.coeffs) << "N = " << N;
    }
}

TEST(Jones, MixedLabelGraphValueTwoRoutes) {
    // (Delta_(N-2)/Delta_(N-1))^2 Gamma(N,N,N-2) is a genuine rational
    // function (exact division leaves a remainder), so its window has to
    // come from truncated division. Two distinct expansion routes must
    // agree: the incremental window multiplies, and truncations of the
    // exactly expanded numerator and denominator polynomials.
    for (int N = 3; N <= 6; ++N) {
        QFactorialExpression e;
        e.mul_single(N - 1, 2);
        e.mul_single(N, -2);
        e *= gamma_xyz(N, N, N - 2);
        EXPECT_THROW(e.expand_exact(), std::domain_error) << "N = " << N;

        const std::int64_t w = 4 * (4 * N);
        const TruncatedSeries route_a = e.expand_to_depth(w);
        LaurentPolynomial num = LaurentPolynomial::one();
        LaurentPolynomial den = LaurentPolynomial::one();
        for (const auto& [n, exp] : e.net_single_exponents()) {
            for (std::int64_t r = 0; r < (exp > 0 ? exp : -exp); ++r)
                (exp > 0 ? num : den) *= qbrace(n);
        }
        TruncatedSeries route_b = series_div(truncate_low(num, w), truncate_low(den, w), w);
        route_b.anchor += e.a_shift();
        if (e.sign() < 0)
            for (BigInt& c : route_b.coeffs) c = -c;
        EXPECT_EQ(route_a, route_b) << "N = " << N;
    }
}

TEST(Jones, DegreeDropTable) {
    // Decrease in hat-anchored maximum q-degree per labeling, spec (1,1,1).
    const PretzelSpec spec(1, 1, 1);
    for (int N = 1; N <= 10; ++N) {
        const std::int64_t base = detail::summand_expression(N, {N, N, N}, spec).min_a_degree();
        auto drop = [&](const LabelTuple& L) {
            return (detail::summand_expression(N, L, spec).min_a_degree() - base) / 4;
        };
        EXPECT_GE(drop({N, N, N - 1}), N + 1);
        if (N >= 2) {
            EXPECT_GE(drop({N, N, N - 2}), 2 * N + 1);
            EXPECT_GE(drop({N, N - 1, N - 1}), 2 * N + 2);
        }
        if (N >= 3) {
            EXPECT_GE(drop({N, N, N - 3}), 3 * N - 1);
        }
    }
}

TEST(Jones, PositionPermutationInvariance) {
    // Permuting the twist counts permutes which positional labelings
    // contribute but not the truncated polynomial.
    const std::array<std::array<int, 3>, 4> specs = {{{1, 2, 3}, {2, 1, 1}, {3, 3, 2}, {2, 2, 1}}};
    for (const auto& s : specs) {
        for (int N = 1; N <= 6; ++N) {
            const auto ref =
                truncated_colored_jones(N, PretzelSpec(s[0], s[1], s[2]), 3 * N + 1, true);
            const std::array<std::array<int, 3>, 5> perms = {{{s[0], s[2], s[1]},
                                                              {s[1], s[0], s[2]},
                                                              {s[1], s[2], s[0]},
                                                              {s[2], s[0], s[1]},
                                                              {s[2], s[1], s[0]}}};
            for (const auto& p : perms) {
                const auto alt =
                    truncated_colored_jones(N, PretzelSpec(p[0], p[1], p[2]), 3 * N + 1, true);
                EXPECT_EQ(ref.series, alt.series) << "N = " << N;
            }
        }
    }
}

TEST(Jones, SameReducedGraphSameTopWindow) {
    // m = 1: (2,1,1) and (3,1,1) share the 2-reduced triangle, so the top 2N
    // coefficients agree; m = 2: (3,2,1) and (4,2,1) share the 3-reduced
    // triangle and agree to 3N.
    for (int N = 2; N <= 6; ++N) {
        const auto a = truncated_colored_jones(N, PretzelSpec(2, 1, 1), 3 * N + 1, true);
        const auto b = truncated_colored_jones(N, PretzelSpec(3, 1, 1), 3 * N + 1, true);
        EXPECT_EQ(hat_q_coefficients(a.series, 2 * N), hat_q_coefficients(b.series, 2 * N));
        const auto c = truncated_colored_jones(N, PretzelSpec(3, 2, 1), 3 * N + 1, true);
        const auto d = truncated_colored_jones(N, PretzelSpec(4, 2, 1), 3 * N + 1, true);
        EXPECT_EQ(hat_q_coefficients(c.series, 3 * N), hat_q_coefficients(d.series, 3 * N));
    }
}

TEST(Jones, DifferentReducedGraphsDivergeInsideWindow) {
    // Converse witness: (2,1,1) and (3,1,1) have different 3-reduced graphs
    // and indeed split within the 3N window.
    bool diverged = false;
    for (int N = 2; N <= 6 && !diverged; ++N) {
        const auto a = truncated_colored_jones(N, PretzelSpec(2, 1, 1), 3 * N + 1, true);
        const auto b = truncated_colored_jones(N, PretzelSpec(3, 1, 1), 3 * N + 1, true);
        const auto va = hat_q_coefficients(a.series, 3 * N);
        const auto vb = hat_q_coefficients(b.series, 3 * N);
        diverged = va != vb;
    }
    EXPECT_TRUE(diverged);
}

TEST(Jones, NormalizedDividesByDeltaN) {
    for (int N = 2; N <= 5; ++N) {
        const PretzelSpec spec(2, 2, 1);
        const auto norm = truncated_colored_jones(N, spec, 3 * N + 1, true);
        const auto raw = truncated_colored_jones(N, spec, 3 * N + 1, false);
        const std::int64_t w = norm.series.depth();
        const TruncatedSeries back =
            mul_series(norm.series, truncate_low(delta(N), w));
        EXPECT_EQ(back, retruncate(raw.series, w)) << "N = " << N;
    }
}

TEST(Jones, PretzelSpecValidation) {
    EXPECT_THROW(PretzelSpec(0, 1, 1), std::invalid_argument);
    EXPECT_THROW(PretzelSpec(1, -2, 1), std::invalid_argument);
}

TEST(Jones, HonestDepthRecorded) {
    const auto r = truncated_colored_jones(4, PretzelSpec(3, 3, 2), 9, true);
    EXPECT_EQ(r.depth, 9);
    EXPECT_EQ(QSeriesView(hat_series(r.series).series).count(), 9);
}
