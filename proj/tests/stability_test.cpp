#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "cjones/fixtures.hpp"
#include "cjones/jones.hpp"
#include "cjones/stability.hpp"

using namespace cjones;

namespace {

const std::string kFixturePath = std::string(CJONES_DATA_DIR) + "/fixtures/knot_tables.txt";

std::vector<BigInt> big(std::initializer_list<int> vals) {
    std::vector<BigInt> out;
    for (int v : vals) out.emplace_back(v);
    return out;
}

std::vector<std::pair<int, TruncatedSeries>> pretzel_colors(const PretzelSpec& spec, int first_color,
                                                            int last_color) {
    std::vector<std::pair<int, TruncatedSeries>> out;
    for (int c = first_color; c <= last_color; ++c) {
        const int N = c - 1;
        out.emplace_back(c, truncated_colored_jones(N, spec, 3 * N + 1, true).series);
    }
    return out;
}

std::vector<std::pair<int, TruncatedSeries>> fixture_colors(const std::string& knot, int first,
                                                            int last) {
    const FixtureMap m = load_fixture(kFixturePath);
    std::vector<std::pair<int, TruncatedSeries>> out;
    for (int c = first; c <= last; ++c) out.emplace_back(c, fixture_series(m.at({knot, c})));
    return out;
}

int big_twists(const PretzelSpec& s) {
    return (s.m1 >= 2) + (s.m2 >= 2) + (s.m3 >= 2);
}

}  // namespace

TEST(Stability, ExtractIdenticalConstantInputs) {
    // With no known sequences and two identical inputs, extraction returns
    // the input itself.
    const TruncatedSeries s = series_from_q_coefficients(big({1, 1, 1}));
    const StableSequence t = extract_next_stable({{5, s}, {6, s}}, {});
    EXPECT_EQ(t.order, 0);
    EXPECT_EQ(t.q_coefficients(), big({1, 1, 1}));
}

TEST(Stability, SingleColorWindowIsGuaranteedOnly) {
    // One color cannot corroborate anything past its guaranteed window.
    const std::vector<BigInt> p = euler_q_coefficients(15);
    const TruncatedSeries s = series_from_q_coefficients(p);
    const StableSequence t = extract_next_stable({{5, s}}, {});
    EXPECT_EQ(static_cast<int>(t.q_coefficients().size()), 5);
}

TEST(Stability, ExtractNeckFromFixtures) {
    // 8_5m colors 5..7 with the head known: the order-1 remainder of the
    // best color carries six guaranteed terms of the neck.
    const auto colors = fixture_colors("8_5m", 5, 7);
    const std::vector<StableSequence> known{closed_form_head(32)};
    const StableSequence t1 = extract_next_stable(colors, known);
    EXPECT_EQ(t1.order, 1);
    EXPECT_EQ(t1.q_coefficients(), big({4, -1, -4, -3, -3, 1}));
    // a prefix of the full neck 4,-1,-4,-3,-3,1,0,4,3,3
    const auto closed = closed_form_neck(3, 6).q_coefficients();
    EXPECT_EQ(t1.q_coefficients(), closed);
}

TEST(Stability, ExtractSecondOrderFromFixtures) {
    const auto colors = fixture_colors("8_5m", 5, 7);
    const std::vector<StableSequence> known{closed_form_head(32), closed_form_neck(3, 32)};
    const StableSequence t2 = extract_next_stable(colors, known);
    EXPECT_EQ(t2.order, 2);
    EXPECT_EQ(t2.q_coefficients(), big({-2, 10, 4, -2, -7, -12}));
}

TEST(Stability, ExtractRejectsConflictInsideGuaranteedWindow) {
    std::vector<BigInt> a = euler_q_coefficients(10);
    std::vector<BigInt> b = a;
    b[2] += 1;  // poison inside both guaranteed windows
    EXPECT_THROW(extract_next_stable({{6, series_from_q_coefficients(a)},
                                      {7, series_from_q_coefficients(b)}},
                                     {}),
                 std::runtime_error);
}

TEST(Stability, ClosedFormHeadRows) {
    EXPECT_EQ(closed_form_head(13).q_coefficients(),
              big({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    EXPECT_EQ(closed_form_head(1).q_coefficients(), big({1}));
    EXPECT_EQ(closed_form_head(5).order, 0);
}

TEST(Stability, ClosedFormNeckRows) {
    EXPECT_EQ(closed_form_neck(3, 10).q_coefficients(),
              big({4, -1, -4, -3, -3, 1, 0, 4, 3, 3}));
    EXPECT_EQ(closed_form_neck(0, 12).q_coefficients(), closed_form_head(12).q_coefficients());
    EXPECT_EQ(closed_form_neck(1, 8).q_coefficients(), big({2, -1, -2, -1, -1, 1, 0, 2}));
    EXPECT_THROW(closed_form_neck(4, 5), std::invalid_argument);
}

TEST(Stability, NeckDifferencesArePentagonalPartialSums) {
    const std::vector<BigInt> p = euler_q_coefficients(50);
    std::vector<BigInt> partial(p.size());
    BigInt run = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        run += p[i];
        partial[i] = run;
    }
    for (int m = 1; m <= 3; ++m) {
        const auto hi = closed_form_neck(m, 50).q_coefficients();
        const auto lo = closed_form_neck(m - 1, 50).q_coefficients();
        for (std::size_t i = 0; i < partial.size(); ++i)
            EXPECT_EQ(hi[i] - lo[i], partial[i]) << "m=" << m << " i=" << i;
    }
}

TEST(Stability, ClosedFormHeadMatchesDeepOracleExtraction) {
    // head extracted from figure-eight colors 12..14 agrees with the
    // pentagonal closed form on the full returned window
    std::vector<std::pair<int, TruncatedSeries>> colors;
    for (int c = 12; c <= 14; ++c)
        colors.emplace_back(c, truncate_low(oracle_fig8(c - 1), slots_for_q_terms(30)));
    const StableSequence head = extract_next_stable(colors, {});
    const auto got = head.q_coefficients();
    const auto want = closed_form_head(30).q_coefficients();
    ASSERT_GE(got.size(), 14u);
    for (std::size_t i = 0; i < got.size() && i < want.size(); ++i)
        EXPECT_EQ(got[i], want[i]) << "i = " << i;
}

TEST(Stability, DifferenceNeckOnOracle) {
    // figure-eight, colors 6 and 7, m = 1, depth 5
    const TruncatedSeries a = truncate_low(oracle_fig8(5), slots_for_q_terms(12));
    const TruncatedSeries b = truncate_low(oracle_fig8(6), slots_for_q_terms(12));
    const DifferenceNeckReport rep = difference_neck(a, b, 1, 5);
    EXPECT_TRUE(rep.head_cancels);
    EXPECT_TRUE(rep.neck_matches) << rep.detail;
}

TEST(Stability, DifferenceNeckOnFixtureRows) {
    const auto colors = fixture_colors("8_5m", 6, 7);
    const DifferenceNeckReport rep =
        difference_neck(colors[0].second, colors[1].second, 3, 5);
    EXPECT_TRUE(rep.head_cancels);
    EXPECT_TRUE(rep.neck_matches) << rep.detail;
}

TEST(Stability, DifferenceNeckDegenerateInputsReportMismatch) {
    // identical inputs: the difference is zero, so check (b) must fail
    const TruncatedSeries s = series_from_q_coefficients(euler_q_coefficients(12));
    const DifferenceNeckReport rep = difference_neck(s, s, 1, 4);
    EXPECT_TRUE(rep.head_cancels);
    EXPECT_FALSE(rep.neck_matches);
}

TEST(Stability, NeckTheoremEndToEnd) {
    // extraction equals the closed form on the full guaranteed window for
    // every twist class representative with entries <= 3
    for (int m1 = 1; m1 <= 3; ++m1) {
        for (int m2 = m1; m2 <= 3; ++m2) {
            for (int m3 = m2; m3 <= 3; ++m3) {
                const PretzelSpec spec(m1, m2, m3);
                for (int N = 4; N <= 6; ++N) {
                    const auto colors = pretzel_colors(spec, N, N + 2);
                    const StableSequence neck =
                        extract_next_stable(colors, {closed_form_head(64)});
                    const auto got = neck.q_coefficients();
                    ASSERT_EQ(static_cast<int>(got.size()), N + 1);
                    EXPECT_EQ(got, closed_form_neck(big_twists(spec),
                                                    static_cast<std::int64_t>(got.size()))
                                       .q_coefficients())
                        << "spec (" << m1 << "," << m2 << "," << m3 << ") N=" << N;
                }
            }
        }
    }
}

TEST(Stability, TwoStabilityDefinitionsAgree) {
    // head + q^-c * neck reproduces J'_c to 2c-1 terms, which is exactly the
    // content of the difference identity.
    for (const auto& s : std::array<std::array<int, 3>, 4>{{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {3, 2, 2}}}) {
        const PretzelSpec spec(s[0], s[1], s[2]);
        const int m = big_twists(spec);
        for (int c = 5; c <= 7; ++c) {
            const int N = c - 1;
            const auto r = truncated_colored_jones(N, spec, 3 * N + 1, true);
            const auto row = hat_q_coefficients(r.series, 2 * c - 1);
            const std::vector<BigInt> t0 = euler_q_coefficients(2 * c - 1);
            const std::vector<BigInt> t1 = closed_form_neck(m, c - 1).q_coefficients();
            for (int i = 0; i < 2 * c - 1; ++i) {
                BigInt want = t0[static_cast<std::size_t>(i)];
                if (i >= c) want += t1[static_cast<std::size_t>(i - c)];
                EXPECT_EQ(row[static_cast<std::size_t>(i)], want)
                    << "spec (" << s[0] << "," << s[1] << "," << s[2] << ") c=" << c << " i=" << i;
            }
        }
    }
}

TEST(Stability, TwistClassCollapse) {
    EXPECT_EQ(twist_class(PretzelSpec(1, 1, 1)).entries, (std::array<int, 3>{1, 1, 1}));
    EXPECT_EQ(twist_class(PretzelSpec(5, 1, 2)).entries, (std::array<int, 3>{1, 2, 3}));
    EXPECT_EQ(twist_class(PretzelSpec(4, 4, 4)).entries, (std::array<int, 3>{3, 3, 3}));
}

TEST(Stability, T2PredictedTable) {
    EXPECT_EQ(t2_predicted(twist_class(PretzelSpec(1, 1, 1))), big({0, 1, -1, -1, 1}));
    EXPECT_EQ(t2_predicted(twist_class(PretzelSpec(2, 2, 2))), big({0, 10, 2, -4, 1}));
    EXPECT_EQ(t2_predicted(twist_class(PretzelSpec(4, 3, 5))), big({-3, 10, 5, -4, 1}));
    TwistClass bogus;
    bogus.entries = {0, 1, 1};
    EXPECT_THROW(t2_predicted(bogus), std::invalid_argument);
}

TEST(Stability, T2ObservedMatchesTableOnOracle) {
    // figure-eight = class (1,1,2), N = 6, via the independent oracle
    const int N = 6;
    const std::int64_t w = slots_for_q_terms(2 * N + 2 + 5);
    const auto t2 = t2_observed(truncate_low(oracle_fig8(N), w), truncate_low(oracle_fig8(N + 1), w),
                                truncate_low(oracle_fig8(N + 2), w), N, 5);
    EXPECT_EQ(t2, big({0, 4, -1, -3, 1}));
}

TEST(Stability, T2ObservedMatchesTableOnTrefoilFamily) {
    const int N = 6;
    const PretzelSpec spec(1, 1, 1);
    const auto a = truncated_colored_jones(N, spec, 3 * N + 1, true);
    const auto b = truncated_colored_jones(N + 1, spec, 2 * N + 7, true);
    const auto c = truncated_colored_jones(N + 2, spec, 2 * N + 7, true);
    EXPECT_EQ(t2_observed(a.series, b.series, c.series, N, 5), big({0, 1, -1, -1, 1}));
}

TEST(Stability, T2ObservedLeadingCoefficientCountsBigTwists) {
    // classes with a 3+ entry start with -(number of 3+ entries)
    const int N = 5;
    for (const auto& s : std::array<std::array<int, 3>, 4>{{{1, 1, 3}, {1, 3, 3}, {2, 3, 4}, {3, 3, 3}}}) {
        const PretzelSpec spec(s[0], s[1], s[2]);
        const auto a = truncated_colored_jones(N, spec, 3 * N + 1, true);
        const auto b = truncated_colored_jones(N + 1, spec, 2 * N + 7, true);
        const auto c = truncated_colored_jones(N + 2, spec, 2 * N + 7, true);
        const auto t2 = t2_observed(a.series, b.series, c.series, N, 5);
        int threes = 0;
        for (int v : s) threes += v >= 3;
        EXPECT_EQ(t2[0], BigInt(-threes)) << "spec (" << s[0] << "," << s[1] << "," << s[2] << ")";
    }
}

TEST(Stability, T2ObservedGuards) {
    const TruncatedSeries zero(0, std::vector<BigInt>(40, BigInt(0)));
    EXPECT_THROW(t2_observed(zero, zero, zero, 4, 5), std::domain_error);
    const TruncatedSeries shallow = series_from_q_coefficients(euler_q_coefficients(6));
    EXPECT_THROW(t2_observed(shallow, shallow, shallow, 6, 5), std::invalid_argument);
}

TEST(Stability, StabilizePipelineReproducesPublishedRows) {
    const auto colors = fixture_colors("8_5m", 5, 7);
    const StabilizeOutcome out = stabilize(colors, 3, 3);
    ASSERT_EQ(out.sequences.size(), 3u);
    const auto t0 = out.sequences[0].q_coefficients();
    ASSERT_GE(t0.size(), 13u);
    EXPECT_EQ(std::vector<BigInt>(t0.begin(), t0.begin() + 13),
              big({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    const auto t1 = out.sequences[1].q_coefficients();
    ASSERT_GE(t1.size(), 10u);
    EXPECT_EQ(std::vector<BigInt>(t1.begin(), t1.begin() + 10),
              big({4, -1, -4, -3, -3, 1, 0, 4, 3, 3}));
    EXPECT_EQ(out.sequences[2].q_coefficients(), big({-2, 10, 4, -2, -7, -12}));
    EXPECT_EQ(out.windows[2], 6);
    EXPECT_EQ(out.sequences[2].provenance, Provenance::extracted);
}

TEST(Stability, StabilizePipelinePureDataSingleColor) {
    const auto colors = fixture_colors("8_5m", 5, 5);
    const StabilizeOutcome out = stabilize(colors, 1);
    ASSERT_EQ(out.sequences.size(), 1u);
    EXPECT_EQ(out.sequences[0].q_coefficients(), big({1, -1, -1, 0, 0}));
}
