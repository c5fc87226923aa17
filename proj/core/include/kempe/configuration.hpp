#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/trace.hpp"

namespace kempe {

// Mutable assignment of a color to every link of a graph, the working state
// of the coloring engines. The vertex constraint (all link colors at a
// vertex pairwise distinct) is an invariant of every public mutation; the
// per-vertex color index and the variable-edge set stay coherent with the
// stored colors.
//
// Single-writer state: safe to move between threads, never shared mutably.
class Configuration {
public:
    // Validates the vertex constraint and palette range; throws
    // std::invalid_argument on violation.
    Configuration(const SimpleGraph& graph, int palette, std::vector<ComplexColor> edge_colors);

    const SimpleGraph& graph() const { return *graph_; }
    int palette() const { return palette_; }

    Color color_at(EdgeId e, VertexId v) const {
        const auto& [lo, hi] = graph_->endpoints(e);
        return v == lo ? colors_[static_cast<std::size_t>(e)].first
                       : colors_[static_cast<std::size_t>(e)].second;
    }
    ComplexColor edge_colors(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
    const std::vector<ComplexColor>& all_edge_colors() const { return colors_; }

    // Edge whose v-side link carries color c, or kNoEdge. O(1).
    EdgeId edge_with_color(VertexId v, Color c) const {
        return color_index_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
                            static_cast<std::size_t>(c - 1)];
    }

    bool is_variable_edge(EdgeId e) const { return colors_[static_cast<std::size_t>(e)].is_variable(); }
    int variable_count() const { return static_cast<int>(variables_.size()); }
    const std::set<EdgeId>& variables() const { return variables_; }

    // Bumped by every mutation; lets callers detect stale derived state.
    std::uint64_t version() const { return version_; }

    void set_trace_sink(TraceSink* sink) { trace_ = sink; }
    TraceSink* trace_sink() const { return trace_; }
    void emit(const TraceEvent& event) const {
        if (trace_ != nullptr) trace_->on_event(event);
    }

    struct Recolor {
        EdgeId edge;
        VertexId endpoint;
        Color color;
    };
    // Applies a batch of link recolorings as one mutation. The batch must
    // leave every touched vertex with pairwise-distinct link colors; a batch
    // that would not is rejected with std::logic_error before any change.
    void apply(std::span<const Recolor> updates);

    // Full re-scan helpers that bypass the caches. The verifier paths use
    // these rather than trusting variable_count().
    int recount_variables() const;
    bool scan_vertex_constraint() const;

private:
    const SimpleGraph* graph_;
    int palette_;
    std::vector<ComplexColor> colors_;
    std::vector<EdgeId> color_index_;  // vertex-major [v][c-1]
    std::set<EdgeId> variables_;
    std::uint64_t version_ = 0;
    TraceSink* trace_ = nullptr;
};

// Consistent starting configuration: each vertex draws a seeded permutation
// of 1..K and hands it to its incident links in adjacency order. Requires
// K >= max degree (throws std::invalid_argument otherwise); deterministic
// given the seed. O(|V|K + |E|).
Configuration initial_configuration(const SimpleGraph& graph, int palette, std::uint64_t seed);

// Vertex constraint at every vertex, by direct scan.
bool is_consistent(const Configuration& config);

// Independent verifier: consistent and zero variable edges, re-scanning all
// links and trusting no cached counter.
bool is_proper(const Configuration& config);

// Variable edges whose color pair contains c, ascending edge id.
std::vector<EdgeId> variables_containing(const Configuration& config, Color c);

// Palette colors absent at v; exactly K - degree(v) of them.
std::vector<Color> dontcare_colors(const Configuration& config, VertexId v);

}  // namespace kempe
