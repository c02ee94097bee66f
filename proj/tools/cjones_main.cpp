/*
 * cjones -- exact coefficient tables and stable-sequence checks for the
 * colored Jones polynomials of negative three-pretzel knots.
 *
 * Subcommands:
 *   compute    top coefficients of J_{N+1} for a pretzel, one row per color
 *   stabilize  subtract-and-shift stable sequences from fixture rows
 *   verify     run a verification suite (exit 0 pass, 1 mismatch, 2 usage)
 *   graph      reduced-checkerboard-graph predicates on graph literals
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cjones/fixtures.hpp"
#include "cjones/graphs.hpp"
#include "cjones/jones.hpp"
#include "cjones/report.hpp"
#include "cjones/stability.hpp"
#include "cjones/verify.hpp"

namespace {

using namespace cjones;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string default_fixture_path() {
    if (const char* dir = std::getenv("CJONES_FIXTURE_DIR"))
        return std::string(dir) + "/knot_tables.txt";
    return std::string(CJONES_DATA_DIR) + "/fixtures/knot_tables.txt";
}

// "A..B" or "A"
bool parse_color_range(const std::string& text, int& lo, int& hi) {
    const std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 2 && hi >= lo;
}

bool parse_pretzel(const std::string& text, std::optional<PretzelSpec>& out) {
    int a = 0, b = 0, c = 0;
    char comma1 = 0, comma2 = 0;
    std::istringstream in(text);
    if (!(in >> a >> comma1 >> b >> comma2 >> c) || comma1 != ',' || comma2 != ',') return false;
    try {
        out.emplace(a, b, c);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int cmd_compute(const std::string& pretzel_text, const std::string& colors_text,
                const std::string& depth_text, bool normalized, const std::string& format) {
    std::optional<PretzelSpec> spec;
    if (!parse_pretzel(pretzel_text, spec)) {
        std::cerr << "error: --pretzel expects m1,m2,m3 with every entry >= 1\n";
        return kExitUsage;
    }
    int lo = 0, hi = 0;
    if (!parse_color_range(colors_text, lo, hi)) {
        std::cerr << "error: --colors expects a color >= 2 or a range A..B\n";
        return kExitUsage;
    }
    const std::string knot_id = "pretzel-" + std::to_string(spec->m1) + "-" +
                                std::to_string(spec->m2) + "-" + std::to_string(spec->m3);
    std::vector<ComputeRow> rows;
    for (int color = lo; color <= hi; ++color) {
        const int N = color - 1;
        std::int64_t depth = 3 * static_cast<std::int64_t>(N) + 1;
        if (depth_text != "max") {
            try {
                depth = std::stoll(depth_text);
            } catch (const std::exception&) {
                std::cerr << "error: --depth expects a positive integer or `max`\n";
                return kExitUsage;
            }
        }
        if (depth < 1 || depth > 3 * static_cast<std::int64_t>(N) + 1) {
            std::cerr << "error: depth " << depth << " outside [1, " << 3 * N + 1 << "] for color "
                      << color << "\n";
            return kExitUsage;
        }
        const ColoredJonesResult r = truncated_colored_jones(N, *spec, depth, normalized);
        const HatSeries h = hat_series(r.series);
        ComputeRow row;
        row.color = color;
        row.depth = r.depth;
        row.min_a_degree = r.series.trimmed().anchor;
        row.hat_sign = h.sign;
        row.coefficients = hat_q_coefficients(r.series, r.depth);
        rows.push_back(std::move(row));
    }
    if (format == "json")
        std::cout << canonical_dump(compute_report(knot_id, normalized, rows));
    else if (format == "csv")
        std::cout << compute_report_csv(knot_id, rows);
    else
        std::cout << compute_report_text(knot_id, rows);
    return kExitOk;
}

int cmd_stabilize(const std::string& fixture_path, const std::string& knot,
                  const std::string& colors_text, int orders, bool closed_forms, int big_twists,
                  const std::string& format) {
    FixtureMap fixtures;
    try {
        fixtures = load_fixture(fixture_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::vector<std::pair<int, TruncatedSeries>> colors;
    if (colors_text.empty()) {
        for (const auto& [key, row] : fixtures)
            if (key.first == knot) colors.emplace_back(key.second, fixture_series(row));
    } else {
        int lo = 0, hi = 0;
        if (!parse_color_range(colors_text, lo, hi)) {
            std::cerr << "error: --colors expects a color >= 2 or a range A..B\n";
            return kExitUsage;
        }
        for (int c = lo; c <= hi; ++c) {
            const auto it = fixtures.find({knot, c});
            if (it == fixtures.end()) {
                std::cerr << "error: fixture has no row (" << knot << ", " << c << ")\n";
                return kExitUsage;
            }
            colors.emplace_back(c, fixture_series(it->second));
        }
    }
    if (colors.empty()) {
        std::cerr << "error: no fixture rows for knot " << knot << "\n";
        return kExitUsage;
    }
    if (closed_forms && (big_twists < 0 || big_twists > 3)) {
        std::cerr << "error: --big-twists must be 0..3 when --closed-forms is set\n";
        return kExitUsage;
    }
    try {
        const StabilizeOutcome out =
            stabilize(colors, orders,
                      closed_forms ? std::optional<int>(big_twists) : std::nullopt);
        if (format == "json")
            std::cout << canonical_dump(stabilize_report(knot, out));
        else
            std::cout << stabilize_report_text(knot, out);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "stabilization failed: " << e.what() << "\n";
        return kExitMismatch;
    }
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, const std::string& format) {
    std::vector<CheckResult> results;
    try {
        results = run_suite(suite, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    bool failed = false;
    if (format == "json") {
        OrderedJson doc;
        doc["command"] = "verify";
        doc["suite"] = suite;
        doc["checks"] = OrderedJson::array();
        for (const CheckResult& r : results) {
            OrderedJson c;
            c["name"] = r.name;
            c["pass"] = r.pass;
            c["hard"] = r.hard;
            c["detail"] = r.detail;
            doc["checks"].push_back(std::move(c));
            failed = failed || (!r.pass && r.hard);
        }
        std::cout << canonical_dump(doc);
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << "\n";
            failed = failed || (!r.pass && r.hard);
        }
    }
    return failed ? kExitMismatch : kExitOk;
}

Multigraph load_graph_literal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph literal " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_multigraph(buf.str());
}

int cmd_graph(const std::string& g1_path, const std::string& g2_path, int m) {
    try {
        const Multigraph g1 = load_graph_literal(g1_path);
        const Multigraph g2 = load_graph_literal(g2_path);
        const bool same = same_higher_stability(g1, g2, m);
        std::cout << "same-higher-stability (m=" << m << "): " << (same ? "true" : "false") << "\n";
        std::cout << "reduced g1:\n" << format_multigraph(m_reduce(g1, m + 1));
        std::cout << "reduced g2:\n" << format_multigraph(m_reduce(g2, m + 1));
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact colored Jones coefficient tables for three-pretzel knots"};
    app.require_subcommand(1);

    std::string pretzel_text, colors_text = "2", depth_text = "max";
    bool normalized = true;
    std::string format = "text";

    CLI::App* compute = app.add_subcommand("compute", "top coefficients per color");
    compute->add_option("--pretzel", pretzel_text, "twist counts m1,m2,m3")->required();
    compute->add_option("--colors", colors_text, "color or range A..B (colors are >= 2)")->required();
    compute->add_option("--depth", depth_text, "q-terms per color, or `max` for 3N+1");
    compute->add_flag("--normalized,!--unnormalized", normalized,
                      "divide by the unknot value (default on)");
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    std::string fixture_path = default_fixture_path();
    std::string knot = "8_5m", stab_colors;
    int orders = 3, big_twists = 0;
    bool closed_forms = false;

    CLI::App* stabilize_cmd = app.add_subcommand("stabilize", "extract stable sequences");
    stabilize_cmd->add_option("--fixture", fixture_path, "fixture file path");
    stabilize_cmd->add_option("--knot", knot, "knot id in the fixture")->required();
    stabilize_cmd->add_option("--colors", stab_colors, "color range A..B (default: all rows)");
    stabilize_cmd->add_option("--orders", orders, "number of stable sequences (1..3)");
    stabilize_cmd->add_flag("--closed-forms", closed_forms,
                            "take T0 and T1 from their closed forms, verified against the data");
    stabilize_cmd->add_option("--big-twists", big_twists,
                              "number of twist regions with >= 2 crossings (with --closed-forms)");
    stabilize_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string suite = "all";
    VerifyOptions vopts;
    vopts.fixture_path = default_fixture_path();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite,
                           "tables|neck|corollary|t2|lemmas|degrees|reduction|oracle|all");
    verify_cmd->add_option("--max-color", vopts.max_color, "largest color-driven range");
    verify_cmd->add_option("--max-n", vopts.max_n, "largest N for identity suites");
    verify_cmd->add_option("--fixture", vopts.fixture_path, "fixture file path");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string g1_path, g2_path;
    int graph_m = 1;
    CLI::App* graph_cmd = app.add_subcommand("graph", "compare reduced checkerboard graphs");
    graph_cmd->add_option("--g1", g1_path, "first graph literal file")->required();
    graph_cmd->add_option("--g2", g2_path, "second graph literal file")->required();
    graph_cmd->add_option("--m", graph_m, "stability order (reduction cap is m+1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(pretzel_text, colors_text, depth_text, normalized, format);
        if (stabilize_cmd->parsed())
            return cmd_stabilize(fixture_path, knot, stab_colors, orders, closed_forms, big_twists,
                                 format);
        if (verify_cmd->parsed()) return cmd_verify(suite, vopts, format);
        if (graph_cmd->parsed()) return cmd_graph(g1_path, g2_path, graph_m);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
