#pragma once

/*
 * graphs.hpp
 * ----------
 * Checkerboard multigraphs, m-reduction and the shared-stability predicate:
 * two knots whose (m+1)-reduced B-checkerboard graphs are isomorphic share
 * their top (m+1)N coefficients.
 *
 * Graphs here are tiny (a handful of vertices), so isomorphism is a
 * brute-force permutation search behind a degree-sequence prefilter.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cjones {

struct Multigraph {
    int vertices = 0;
    std::map<std::pair<int, int>, int> edges;  // key (u < v) -> multiplicity >= 1

    void add_edge(int u, int v, int multiplicity) {
        if (u == v) throw std::invalid_argument("Multigraph: self-loops are not allowed");
        if (u < 0 || v < 0 || u >= vertices || v >= vertices)
            throw std::invalid_argument("Multigraph: vertex out of range");
        if (multiplicity < 1) throw std::invalid_argument("Multigraph: multiplicity must be >= 1");
        const auto key = std::minmax(u, v);
        edges[{key.first, key.second}] += multiplicity;
    }

    int multiplicity(int u, int v) const {
        const auto key = std::minmax(u, v);
        const auto it = edges.find({key.first, key.second});
        return it == edges.end() ? 0 : it->second;
    }

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.vertices == b.vertices && a.edges == b.edges;
    }
};

// Triangle graph of a three-pretzel: one edge bundle per twist region.
inline Multigraph triangle_graph(int m1, int m2, int m3) {
    Multigraph g;
    g.vertices = 3;
    g.add_edge(0, 1, m1);
    g.add_edge(1, 2, m2);
    g.add_edge(0, 2, m3);
    return g;
}

// Every multiplicity capped at m; the 1-reduction is the ordinary reduced graph.
inline Multigraph m_reduce(const Multigraph& g, int m) {
    if (m < 1) throw std::invalid_argument("m_reduce: cap must be >= 1");
    Multigraph out;
    out.vertices = g.vertices;
    for (const auto& [key, mult] : g.edges) out.edges[key] = std::min(mult, m);
    return out;
}

inline bool isomorphic(const Multigraph& g1, const Multigraph& g2) {
    if (g1.vertices > 10 || g2.vertices > 10)
        throw std::invalid_argument("isomorphic: permutation search is capped at 10 vertices");
    if (g1.vertices != g2.vertices) return false;
    if (g1.edges.size() != g2.edges.size()) return false;

    auto degree_profile = [](const Multigraph& g) {
        std::vector<int> deg(static_cast<std::size_t>(g.vertices), 0);
        for (const auto& [key, mult] : g.edges) {
            deg[static_cast<std::size_t>(key.first)] += mult;
            deg[static_cast<std::size_t>(key.second)] += mult;
        }
        std::vector<int> sorted = deg;
        std::sort(sorted.begin(), sorted.end());
        return std::make_pair(deg, sorted);
    };
    const auto [deg1, prof1] = degree_profile(g1);
    const auto [deg2, prof2] = degree_profile(g2);
    if (prof1 != prof2) return false;

    std::vector<int> perm(static_cast<std::size_t>(g1.vertices));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < g1.vertices && ok; ++v)
            ok = deg1[static_cast<std::size_t>(v)] == deg2[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
        if (!ok) continue;
        for (const auto& [key, mult] : g1.edges) {
            if (g2.multiplicity(perm[static_cast<std::size_t>(key.first)],
                                perm[static_cast<std::size_t>(key.second)]) != mult) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Agreement of the (m+1)-reduced graphs: the condition under which two knots
// share their highest (m+1)N coefficients.
inline bool same_higher_stability(const Multigraph& g1, const Multigraph& g2, int m) {
    if (m < 1) throw std::invalid_argument("same_higher_stability: m must be >= 1");
    return isomorphic(m_reduce(g1, m + 1), m_reduce(g2, m + 1));
}

// Literal format used by the CLI:
//     vertices=3
//     edge 0 1 2
//     edge 1 2 1
inline Multigraph parse_multigraph(const std::string& text) {
    Multigraph g;
    bool have_vertices = false;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        auto fail = [&](const std::string& why) {
            throw std::runtime_error("graph literal line " + std::to_string(lineno) + ": " + why);
        };
        if (head.rfind("vertices=", 0) == 0) {
            try {
                g.vertices = std::stoi(head.substr(9));
            } catch (const std::exception&) {
                fail("bad vertex count");
            }
            if (g.vertices < 1) fail("vertex count must be >= 1");
            have_vertices = true;
        } else if (head == "edge") {
            if (!have_vertices) fail("edge before vertices=");
            int u, v, mult;
            if (!(ls >> u >> v >> mult)) fail("expected `edge u v mult`");
            g.add_edge(u, v, mult);
        } else {
            fail("unknown directive `" + head + "`");
        }
    }
    if (!have_vertices) throw std::runtime_error("graph literal: missing vertices=");
    return g;
}

inline std::string format_multigraph(const Multigraph& g) {
    std::ostringstream os;
    os << "vertices=" << g.vertices << "\n";
    for (const auto& [key, mult] : g.edges)
        os << "edge " << key.first << " " << key.second << " " << mult << "\n";
    return os.str();
}

}  // namespace cjones
