#pragma once

// Test-only reference machinery for the directional move rules. Everything
// here works by simulation on configuration copies and stays independent of
// the classification logic it checks.

#include <algorithm>
#include <set>
#include <vector>

#include "kempe/directional.hpp"

namespace kempe::oracle {

inline VertexId common_vertex(const SimpleGraph& g, EdgeId a, EdgeId b) {
    const auto [alo, ahi] = g.endpoints(a);
    const auto [blo, bhi] = g.endpoints(b);
    if (alo == blo || alo == bhi) return alo;
    return ahi;
}

// A move is effective when it does not raise the variable count and either
// kills a variable or advances the tagged one onto the next edge.
inline bool effective(const Configuration& after, int n_before, EdgeId tagged, EdgeId next) {
    const int n_after = after.variable_count();
    if (n_after > n_before) return false;
    if (n_after < n_before) return true;
    return !after.is_variable_edge(tagged) && after.is_variable_edge(next);
}

// Brute force over the move repertoire: the bare exchange, every
// single-path inversion touching the next edge followed by the exchange,
// and every prefix chain running from a terminal tagged link up to the next
// edge's far link. Simulated on copies; anything effective unblocks.
inline bool movable(const Configuration& config, EdgeId tagged, EdgeId next) {
    const SimpleGraph& g = config.graph();
    const VertexId front = common_vertex(g, tagged, next);
    const int n_before = config.variable_count();

    {
        Configuration copy = config;
        exchange(copy, front, tagged, next);
        if (effective(copy, n_before, tagged, next)) return true;
    }

    const auto [n_lo, n_hi] = g.endpoints(next);
    for (VertexId side : {n_lo, n_hi}) {
        const Color link_color = config.color_at(next, side);
        for (Color other = 1; other <= config.palette(); ++other) {
            if (other == link_color) continue;
            const KempePath path = trace_max_path(config, Link{next, side}, link_color, other);

            Configuration copy = config;
            invert_path(copy, path);
            exchange(copy, front, tagged, next);
            if (effective(copy, n_before, tagged, next)) return true;

            if (path.is_cycle || !path.contains_link_of(tagged)) continue;
            std::vector<Link> oriented = path.links;
            if (oriented.back().edge == tagged) std::reverse(oriented.begin(), oriented.end());
            if (oriented.front().edge != tagged) continue;
            std::size_t near_pos = oriented.size(), far_pos = oriented.size();
            for (std::size_t i = 0; i < oriented.size(); ++i) {
                if (oriented[i].edge != next) continue;
                (oriented[i].endpoint == front ? near_pos : far_pos) = i;
            }
            if (far_pos >= near_pos) continue;  // the chain must stop short of the front
            bool pairs_ok = (far_pos + 1) % 2 == 0;
            for (std::size_t i = 0; pairs_ok && i + 1 <= far_pos; i += 2)
                pairs_ok = oriented[i].endpoint == oriented[i + 1].endpoint;
            if (!pairs_ok) continue;
            Configuration chained = config;
            for (std::size_t i = 0; i + 1 <= far_pos; i += 2)
                exchange(chained, oriented[i].endpoint, oriented[i].edge, oriented[i + 1].edge);
            exchange(chained, front, tagged, next);
            if (effective(chained, n_before, tagged, next)) return true;
        }
    }
    return false;
}

// All consistent link colorings of g under the palette.
template <typename Fn>
void enumerate_consistent(const SimpleGraph& g, int palette, Fn&& fn) {
    const int links = 2 * g.edge_count();
    std::vector<Color> digits(static_cast<std::size_t>(links), 1);
    for (;;) {
        std::vector<ComplexColor> colors(static_cast<std::size_t>(g.edge_count()));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            colors[static_cast<std::size_t>(e)] = {digits[static_cast<std::size_t>(2 * e)],
                                                   digits[static_cast<std::size_t>(2 * e + 1)]};
        bool consistent = true;
        for (VertexId v = 0; v < g.vertex_count() && consistent; ++v) {
            std::set<Color> seen;
            for (EdgeId e : g.incident_edges(v)) {
                const auto [lo, hi] = g.endpoints(e);
                const Color c = v == lo ? colors[static_cast<std::size_t>(e)].first
                                        : colors[static_cast<std::size_t>(e)].second;
                if (!seen.insert(c).second) consistent = false;
            }
        }
        if (consistent) fn(colors);

        int pos = links - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == palette) {
            digits[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) return;
        ++digits[static_cast<std::size_t>(pos)];
    }
}

}  // namespace kempe::oracle
