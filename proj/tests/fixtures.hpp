#pragma once

#include <utility>
#include <vector>

#include "kempe/configuration.hpp"
#include "kempe/graph.hpp"

namespace kempe::fixtures {

using EdgePair = std::pair<VertexId, VertexId>;

inline SimpleGraph path_graph(int n) {
    std::vector<EdgePair> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return SimpleGraph(n, edges);
}

inline SimpleGraph cycle_graph(int n) {
    std::vector<EdgePair> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, static_cast<VertexId>(n - 1));
    return SimpleGraph(n, edges);
}

inline SimpleGraph complete_graph(int n) {
    std::vector<EdgePair> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

inline SimpleGraph star_graph(int leaves) {
    std::vector<EdgePair> edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return SimpleGraph(leaves + 1, edges);
}

// Outer 5-cycle 0..4, inner pentagram 5..9 (5-7-9-6-8-5), spokes i -- i+5.
// Edge ids: outer 0..4, spokes 5..9, inner 10..14.
inline SimpleGraph petersen_graph() {
    std::vector<EdgePair> edges = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},  // outer
        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},  // spokes
        {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},  // pentagram
    };
    return SimpleGraph(10, edges);
}

namespace petersen {
inline constexpr EdgeId e01 = 0, e12 = 1, e23 = 2, e34 = 3, e04 = 4;
inline constexpr EdgeId s05 = 5, s16 = 6, s27 = 7, s38 = 8, s49 = 9;
inline constexpr EdgeId e57 = 10, e79 = 11, e69 = 12, e68 = 13, e58 = 14;
}  // namespace petersen

// Consistent tetrahedron coloring with exactly the two variables
// (g,r) on 0-2 and (r,g) on 0-1; palette {g=1, r=2, b=3}.
inline Configuration k4_two_variables() {
    static const SimpleGraph g = complete_graph(4);
    // edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
    std::vector<ComplexColor> colors = {{2, 1}, {1, 2}, {3, 3}, {3, 3}, {2, 2}, {1, 1}};
    return Configuration(g, 3, std::move(colors));
}

// Proper 3-coloring of the tetrahedron (three perfect matchings).
inline Configuration k4_proper() {
    static const SimpleGraph g = complete_graph(4);
    std::vector<ComplexColor> colors = {{1, 1}, {2, 2}, {3, 3}, {3, 3}, {2, 2}, {1, 1}};
    return Configuration(g, 3, std::move(colors));
}

// Three-edge path colored (b,r)(b,b)(r,b) with b=1, r=2: an open (b,r) path
// holding two variables that a walk eliminates from either end.
inline Configuration open_pair_path() {
    static const SimpleGraph g = path_graph(4);
    std::vector<ComplexColor> colors = {{1, 2}, {1, 1}, {2, 1}};
    return Configuration(g, 2, std::move(colors));
}

// C5 two-colored with a single variable: the smallest sole-variable odd
// cycle, immune to single-variable walks.
inline Configuration c5_one_variable() {
    static const SimpleGraph g = cycle_graph(5);
    // edges: 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,4) 4:(0,4)
    std::vector<ComplexColor> colors = {{1, 1}, {2, 2}, {1, 1}, {2, 2}, {2, 1}};
    return Configuration(g, 2, std::move(colors));
}

// C4 holding two mirrored variables; one walk wipes both.
inline Configuration c4_two_variables() {
    static const SimpleGraph g = cycle_graph(4);
    // edges: 0:(0,1) 1:(1,2) 2:(2,3) 3:(0,3)
    std::vector<ComplexColor> colors = {{1, 2}, {1, 1}, {2, 1}, {2, 2}};
    return Configuration(g, 2, std::move(colors));
}

// Petersen twin-cycle configuration: one (b,g) variable on the outer
// 5-cycle, one on the pentagram, all spokes (r,r); b=1, g=2, r=3. Canonical:
// both variables sit alone in odd (b,g) cycles.
inline Configuration petersen_twin_cycle() {
    static const SimpleGraph g = petersen_graph();
    std::vector<ComplexColor> colors(15);
    colors[petersen::e01] = {1, 1};
    colors[petersen::e12] = {2, 2};
    colors[petersen::e23] = {1, 1};
    colors[petersen::e34] = {2, 2};
    colors[petersen::e04] = {2, 1};  // g at 0, b at 4
    for (EdgeId s = petersen::s05; s <= petersen::s49; ++s) colors[s] = {3, 3};
    colors[petersen::e57] = {1, 1};
    colors[petersen::e79] = {2, 2};
    colors[petersen::e69] = {2, 1};  // g at 6, b at 9
    colors[petersen::e68] = {1, 1};
    colors[petersen::e58] = {2, 2};
    return Configuration(g, 3, std::move(colors));
}

// Triangle whose DW1.2 inversion path ends at the tagged edge's midpoint on
// the far side of the next edge: the prefix-chain move applies.
// Vertices: 0 front, 1 tagged far end, 2 next far end. Palette {1,2,3}.
// tagged (0,1)=(2,1), next (0,2)=(3,3), third (1,2)=(3,1).
inline Configuration triangle_chain_case() {
    static const SimpleGraph g = complete_graph(3);
    // edges: 0:(0,1) 1:(0,2) 2:(1,2)
    std::vector<ComplexColor> colors = {{2, 1}, {3, 3}, {3, 1}};
    return Configuration(g, 3, std::move(colors));
}

}  // namespace kempe::fixtures
