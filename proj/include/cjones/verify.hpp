#pragma once

/*
 * verify.hpp
 * ----------
 * The verification suites behind `cjones verify` and the acceptance binary.
 * Each check pins its tolerances in code (everything here is exact integer
 * comparison) and reports one CheckResult. `hard` distinguishes proved
 * statements from the conjectural order-2 table outside its checked range.
 */

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cjones/fixtures.hpp"
#include "cjones/graphs.hpp"
#include "cjones/jones.hpp"
#include "cjones/stability.hpp"

namespace cjones {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool hard = true;  // a soft failure is reported but does not gate
    std::string detail;
    double seconds = 0.0;
};

namespace verify_detail {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string join(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].str();
    }
    return os.str();
}

inline std::vector<BigInt> ints(std::initializer_list<int> vals) {
    std::vector<BigInt> out;
    for (int v : vals) out.emplace_back(v);
    return out;
}

inline int big_twists(const PretzelSpec& s) { return (s.m1 >= 2) + (s.m2 >= 2) + (s.m3 >= 2); }

}  // namespace verify_detail

// Criterion 1: the introduction tables. Subtract-and-shift over the
// checked-in mirror-8_5 rows reproduces T0, T1 and T2 exactly, within the
// stated runtime.
inline CheckResult verify_section_tables(const std::string& fixture_path) {
    using namespace verify_detail;
    Stopwatch watch;
    CheckResult res;
    res.name = "stable-sequence tables (8_5m fixtures)";
    try {
        const FixtureMap m = load_fixture(fixture_path);
        std::vector<std::pair<int, TruncatedSeries>> colors;
        for (int c = 5; c <= 7; ++c) colors.emplace_back(c, fixture_series(m.at({"8_5m", c})));
        const StabilizeOutcome out = stabilize(colors, 3, 3);

        const std::vector<BigInt> t0_want = ints({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
        const std::vector<BigInt> t1_want = ints({4, -1, -4, -3, -3, 1, 0, 4, 3, 3});
        const std::vector<BigInt> t2_want = ints({-2, 10, 4, -2, -7, -12});
        const auto t0 = out.sequences[0].q_coefficients();
        const auto t1 = out.sequences[1].q_coefficients();
        const auto t2 = out.sequences[2].q_coefficients();
        const bool ok0 = t0.size() >= 13 && std::equal(t0_want.begin(), t0_want.end(), t0.begin());
        const bool ok1 = t1.size() >= 10 && std::equal(t1_want.begin(), t1_want.end(), t1.begin());
        const bool ok2 = t2 == t2_want;
        res.seconds = watch.seconds();
        const bool fast = res.seconds < 1.0;
        res.pass = ok0 && ok1 && ok2 && fast;
        std::ostringstream os;
        os << "T0 " << (ok0 ? "ok" : "MISMATCH " + join(t0)) << "; T1 "
           << (ok1 ? "ok" : "MISMATCH " + join(t1)) << "; T2 "
           << (ok2 ? "ok" : "MISMATCH " + join(t2)) << (fast ? "" : "; over 1 s budget");
        res.detail = os.str();
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
        res.seconds = watch.seconds();
    }
    return res;
}

// Criterion 2: the neck closed form. For every twist triple in {1..4}^3 and
// N in {4,5,6}, extraction over colors N..N+2 equals P + m*P/(1-q^-1) on the
// full guaranteed window.
inline CheckResult verify_neck_theorem(int n_low = 4, int n_high = 6) {
    using namespace verify_detail;
    Stopwatch watch;
    CheckResult res;
    res.name = "neck closed form, twist grid {1..4}^3";
    int checked = 0;
    try {
        for (int m1 = 1; m1 <= 4; ++m1) {
            for (int m2 = 1; m2 <= 4; ++m2) {
                for (int m3 = 1; m3 <= 4; ++m3) {
                    const PretzelSpec spec(m1, m2, m3);
                    std::map<int, TruncatedSeries> by_color;
                    for (int c = n_low; c <= n_high + 2; ++c)
                        by_color.emplace(
                            c, truncated_colored_jones(c - 1, spec, 3 * (c - 1) + 1, true).series);
                    for (int n = n_low; n <= n_high; ++n) {
                        std::vector<std::pair<int, TruncatedSeries>> colors;
                        for (int c = n; c <= n + 2; ++c) colors.emplace_back(c, by_color.at(c));
                        const StableSequence neck =
                            extract_next_stable(colors, {closed_form_head(64)});
                        const auto got = neck.q_coefficients();
                        const auto want =
                            closed_form_neck(big_twists(spec), static_cast<std::int64_t>(got.size()))
                                .q_coefficients();
                        if (got.size() < static_cast<std::size_t>(n + 1) || got != want) {
                            res.pass = false;
                            std::ostringstream os;
                            os << "mismatch at spec (" << m1 << "," << m2 << "," << m3 << ") N=" << n
                               << ": got " << join(got);
                            res.detail = os.str();
                            res.seconds = watch.seconds();
                            return res;
                        }
                        ++checked;
                    }
                }
            }
        }
        res.pass = true;
        std::ostringstream os;
        os << checked << " spec/N extractions match exactly";
        res.detail = os.str();
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = watch.seconds();
    return res;
}

// Criterion 3: the difference identity. Head window cancels and the next
// N-1 terms equal (1+m-q^-1) P, over the same grid.
inline CheckResult verify_difference_corollary(int n_low = 4, int n_high = 6) {
    using namespace verify_detail;
    Stopwatch watch;
    CheckResult res;
    res.name = "difference identity, twist grid {1..4}^3";
    int checked = 0;
    try {
        for (int m1 = 1; m1 <= 4; ++m1) {
            for (int m2 = 1; m2 <= 4; ++m2) {
                for (int m3 = 1; m3 <= 4; ++m3) {
                    const PretzelSpec spec(m1, m2, m3);
                    for (int n = n_low; n <= n_high; ++n) {
                        const auto a = truncated_colored_jones(n - 1, spec, 3 * (n - 1) + 1, true);
                        const auto b = truncated_colored_jones(n, spec, 3 * n + 1, true);
                        const DifferenceNeckReport rep =
                            difference_neck(a.series, b.series, big_twists(spec), n - 1);
                        if (!rep.head_cancels || !rep.neck_matches) {
                            res.pass = false;
                            std::ostringstream os;
                            os << "spec (" << m1 << "," << m2 << "," << m3 << ") N=" << n << ": "
                               << rep.detail;
                            res.detail = os.str();
                            res.seconds = watch.seconds();
                            return res;
                        }
                        ++checked;
                    }
                }
            }
        }
        res.pass = true;
        res.detail = std::to_string(checked) + " difference checks pass";
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = watch.seconds();
    return res;
}

// Criterion 4: the conjectured order-2 table, all ten classes, including a
// twist count of 4 standing in for 3+. Hard inside N <= 8; mismatches
// beyond that range are findings, not failures.
inline CheckResult verify_t2_table(int n_low = 5, int n_high = 8, int n_soft_high = 8) {
    using namespace verify_detail;
    Stopwatch watch;
    CheckResult res;
    res.name = "order-2 conjecture table, ten twist classes";
    const std::vector<std::array<int, 3>> reps = {{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2},
                                                  {1, 2, 3}, {1, 3, 3}, {2, 2, 2}, {2, 2, 3},
                                                  {2, 3, 3}, {3, 3, 3}, {1, 1, 4}, {1, 2, 4},
                                                  {1, 4, 4}, {2, 2, 4}, {2, 4, 4}, {4, 4, 4}};
    int checked = 0;
    std::vector<std::string> findings;
    try {
        for (const auto& r : reps) {
            const PretzelSpec spec(r[0], r[1], r[2]);
            const auto want = t2_predicted(twist_class(spec));
            for (int n = n_low; n <= std::max(n_high, n_soft_high); ++n) {
                const std::int64_t need = 2 * n + 7;
                const auto a = truncated_colored_jones(
                    n, spec, std::min<std::int64_t>(need, 3 * n + 1), true);
                const auto b = truncated_colored_jones(n + 1, spec, need, true);
                const auto c = truncated_colored_jones(n + 2, spec, need, true);
                const auto got = t2_observed(a.series, b.series, c.series, n, 5);
                if (got != want) {
                    std::ostringstream os;
                    os << "class " << twist_class(spec).str() << " rep (" << r[0] << "," << r[1]
                       << "," << r[2] << ") N=" << n << ": got " << join(got) << " want "
                       << join(want);
                    if (n <= n_high) {
                        res.pass = false;
                        res.detail = os.str();
                        res.seconds = watch.seconds();
                        return res;
                    }
                    findings.push_back(os.str());
                }
                ++checked;
            }
        }
        res.pass = true;
        std::ostringstream os;
        os << checked << " class/N evaluations match the table";
        if (!findings.empty()) {
            os << "; findings beyond the checked range:";
            for (const std::string& f : findings) os << " [" << f << "]";
        }
        res.detail = os.str();
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = watch.seconds();
    return res;
}

// Criterion 5: the factorial reduction identities to N = 25 plus the closed
// forms theta(N,N,2N) = Delta_2N and the Gamma(N,N,N) factorial ratio.
inline CheckResult verify_factorial_lemmas(int max_n = 25, int max_closed = 8) {
    using namespace verify_detail;
    Stopwatch watch;
    CheckResult res;
    res.name = "factorial reduction identities and closed forms";
    try {
        for (int N = 1; N <= max_n; ++N) {
            const std::int64_t w = 4 * (2 * N + 1);
            const TruncatedSeries lhs = truncate_low(qbrace_fact(2 * N), w);
            const TruncatedSeries nf = truncate_low(qbrace_fact(N), w);
            std::vector<BigInt> u(static_cast<std::size_t>(w), BigInt(0));
            u[0] = 1;
            for (std::int64_t t = 4 * (N + 1); t < w; t += 4) u[static_cast<std::size_t>(t)] -= 1;
            TruncatedSeries rhs = mul_series(nf, TruncatedSeries(0, u));
            rhs.anchor += -(3LL * N * N + N);
            if (N % 2 != 0)
                for (BigInt& c : rhs.coeffs) c = -c;
            if (lhs != rhs) {
                res.pass = false;
                res.detail = "factorial reduction fails at N=" + std::to_string(N);
                res.seconds = watch.seconds();
                return res;
            }
            const TruncatedSeries sq_lhs = mul_series(lhs, lhs);
            std::vector<BigInt> u2(static_cast<std::size_t>(w), BigInt(0));
            u2[0] = 1;
            for (std::int64_t t = 4 * (N + 1); t < w; t += 4) u2[static_cast<std::size_t>(t)] -= 2;
            TruncatedSeries sq_rhs = mul_series(mul_series(nf, nf), TruncatedSeries(0, u2));
            sq_rhs.anchor += -2 * (3LL * N * N + N);
            if (sq_lhs != sq_rhs) {
                res.pass = false;
                res.detail = "squared factorial reduction fails at N=" + std::to_string(N);
                res.seconds = watch.seconds();
                return res;
            }
        }
        for (int N = 1; N <= max_closed; ++N) {
            if (theta(N, N, 2 * N) != delta(2 * N)) {
                res.pass = false;
                res.detail = "theta(N,N,2N) != Delta_2N at N=" + std::to_string(N);
                res.seconds = watch.seconds();
                return res;
            }
            QFactorialExpression closed;
            closed.mul_monomial(N % 2 != 0 ? -1 : 1, 0);
            closed.mul_factorial(3 * N + 1, 1);
            closed.mul_factorial(N, 3);
            closed.mul_factorial(2 * N, -3);
            closed.mul_single(1, -1);
            if (!(gamma_xyz(N, N, N) == closed)) {
                res.pass = false;
                res.detail = "Gamma(N,N,N) closed form fails at N=" + std::to_string(N);
                res.seconds = watch.seconds();
                return res;
            }
        }
        res.pass = true;
        res.detail = "identities exact to N=" + std::to_string(max_n) + ", closed forms to N=" +
                     std::to_string(max_closed);
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = watch.seconds();
    return res;
}

// Criterion 6: the contributing-labeling degree table for spec (1,1,1).
inline CheckResult verify_degree_table(int max_n = 10) {
    using namespace verify_detail;
    Stopwatch watch;
    CheckResult res;
    res.name = "labeling degree-drop table";
    try {
        const PretzelSpec spec(1, 1, 1);
        for (int N = 1; N <= max_n; ++N) {
            const std::int64_t base = detail::summand_expression(N, {N, N, N}, spec).min_a_degree();
            auto drop = [&](const LabelTuple& L) {
                return (detail::summand_expression(N, L, spec).min_a_degree() - base) / 4;
            };
            bool ok = drop({N, N, N - 1}) >= N + 1;
            if (N >= 2)
                ok = ok && drop({N, N, N - 2}) >= 2 * N + 1 && drop({N, N - 1, N - 1}) >= 2 * N + 2;
            if (N >= 3) ok = ok && drop({N, N, N - 3}) >= 3 * N - 1;
            if (!ok) {
                res.pass = false;
                res.detail = "degree bound fails at N=" + std::to_string(N);
                res.seconds = watch.seconds();
                return res;
            }
        }
        res.pass = true;
        res.detail = "all lower bounds met to N=" + std::to_string(max_n);
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = watch.seconds();
    return res;
}

// Criterion 7: shared (m+1)-reduction implies window agreement, plus a
// converse witness.
inline CheckResult verify_same_reduction_theorem(int max_n = 6) {
    using namespace verify_detail;
    Stopwatch watch;
    CheckResult res;
    res.name = "shared graph reduction vs coefficient windows";
    try {
        struct Pair {
            std::array<int, 3> a, b;
            int m;
        };
        const std::vector<Pair> pairs = {{{2, 1, 1}, {3, 1, 1}, 1}, {{3, 2, 1}, {4, 2, 1}, 2}};
        for (const Pair& p : pairs) {
            const Multigraph ga = triangle_graph(p.a[0], p.a[1], p.a[2]);
            const Multigraph gb = triangle_graph(p.b[0], p.b[1], p.b[2]);
            if (!same_higher_stability(ga, gb, p.m)) {
                res.pass = false;
                res.detail = "reduction predicate false for an agreeing pair";
                res.seconds = watch.seconds();
                return res;
            }
            for (int N = 2; N <= max_n; ++N) {
                const std::int64_t w = (p.m + 1) * N;
                const auto ra = truncated_colored_jones(N, PretzelSpec(p.a[0], p.a[1], p.a[2]),
                                                        std::min<std::int64_t>(w, 3 * N + 1), true);
                const auto rb = truncated_colored_jones(N, PretzelSpec(p.b[0], p.b[1], p.b[2]),
                                                        std::min<std::int64_t>(w, 3 * N + 1), true);
                if (hat_q_coefficients(ra.series, w) != hat_q_coefficients(rb.series, w)) {
                    res.pass = false;
                    res.detail = "window agreement fails at m=" + std::to_string(p.m) +
                                 " N=" + std::to_string(N);
                    res.seconds = watch.seconds();
                    return res;
                }
            }
        }
        // converse: (2,1,1) and (3,1,1) differ in their 3-reduction and must
        // split inside the 3N window for some tested N
        if (same_higher_stability(triangle_graph(2, 1, 1), triangle_graph(3, 1, 1), 2)) {
            res.pass = false;
            res.detail = "3-reductions unexpectedly isomorphic";
            res.seconds = watch.seconds();
            return res;
        }
        bool diverged = false;
        for (int N = 2; N <= max_n && !diverged; ++N) {
            const auto ra = truncated_colored_jones(N, PretzelSpec(2, 1, 1), 3 * N, true);
            const auto rb = truncated_colored_jones(N, PretzelSpec(3, 1, 1), 3 * N, true);
            diverged = hat_q_coefficients(ra.series, 3 * N) != hat_q_coefficients(rb.series, 3 * N);
        }
        res.pass = diverged;
        res.detail = diverged ? "agreement windows hold and the converse witness diverges in-window"
                              : "converse witness never diverged";
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = watch.seconds();
    return res;
}

// Criterion 8: the cyclotomic figure-eight oracle against the skein-theoretic
// computation, and its head against {2N}!.
inline CheckResult verify_oracle_consistency(int max_n = 8, int max_head = 10) {
    using namespace verify_detail;
    Stopwatch watch;
    CheckResult res;
    res.name = "figure-eight oracle consistency";
    try {
        for (int N = 1; N <= max_n; ++N) {
            const auto r = truncated_colored_jones(N, PretzelSpec(2, 1, 1), 3 * N + 1, true);
            const LaurentPolynomial oracle = oracle_fig8(N);
            const std::int64_t full =
                (oracle.max_degree() - oracle.min_degree()) / 4 + 1;
            const std::int64_t depth = std::min<std::int64_t>(3 * N + 1, full);
            if (hat_q_coefficients(r.series, depth) != hat_q_coefficients(oracle, depth)) {
                res.pass = false;
                res.detail = "multi-sum disagrees with the oracle at N=" + std::to_string(N);
                res.seconds = watch.seconds();
                return res;
            }
        }
        for (int N = 1; N <= max_head; ++N) {
            if (hat_q_coefficients(oracle_fig8(N), N + 1) !=
                hat_q_coefficients(qbrace_fact(2 * N), N + 1)) {
                res.pass = false;
                res.detail = "oracle head differs from {2N}! at N=" + std::to_string(N);
                res.seconds = watch.seconds();
                return res;
            }
        }
        res.pass = true;
        res.detail = "multi-sum matches oracle to N=" + std::to_string(max_n) +
                     ", head matches {2N}! to N=" + std::to_string(max_head);
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = watch.seconds();
    return res;
}

struct VerifyOptions {
    std::string fixture_path;
    int max_color = 8;  // caps the N ranges where a suite takes one
    int max_n = 25;
};

inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    if (all || suite == "tables") out.push_back(verify_section_tables(opts.fixture_path));
    if (all || suite == "neck") {
        const int hi = std::min(std::max(opts.max_color - 2, 4), 6);
        out.push_back(verify_neck_theorem(4, hi));
    }
    if (all || suite == "corollary") {
        const int hi = std::min(std::max(opts.max_color - 2, 4), 6);
        out.push_back(verify_difference_corollary(4, hi));
    }
    if (all || suite == "t2") {
        const int hi = std::min(std::max(opts.max_color, 5), 8);
        out.push_back(verify_t2_table(5, hi, hi));
    }
    if (all || suite == "lemmas") out.push_back(verify_factorial_lemmas(std::min(opts.max_n, 25)));
    if (all || suite == "degrees") out.push_back(verify_degree_table(10));
    if (all || suite == "reduction") out.push_back(verify_same_reduction_theorem(6));
    if (all || suite == "oracle")
        out.push_back(verify_oracle_consistency(std::min(opts.max_color, 8), 10));
    if (out.empty()) throw std::invalid_argument("unknown verification suite: " + suite);
    return out;
}

}  // namespace cjones
