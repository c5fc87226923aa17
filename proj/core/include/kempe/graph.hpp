#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kempe {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
inline constexpr EdgeId kNoEdge = -1;

// A half-edge: one side of an edge, identified by the edge and the endpoint
// vertex it touches. Every edge has exactly two links.
struct Link {
    EdgeId edge{kNoEdge};
    VertexId endpoint{-1};
    friend bool operator==(const Link&, const Link&) = default;
};

// Immutable undirected simple graph. Vertex ids are 0..n-1; edge ids are
// 0..m-1 in construction order and stable for the object's lifetime.
// Rejects self-loops and duplicate edges.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(VertexId vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

    VertexId vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    // Endpoints in canonical (lower, higher) order.
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    VertexId other_endpoint(EdgeId e, VertexId v) const {
        const auto& [lo, hi] = edges_[static_cast<std::size_t>(e)];
        return v == lo ? hi : lo;
    }

    // Incident edge ids in ascending order.
    std::span<const EdgeId> incident_edges(VertexId v) const {
        return {adjacency_.data() + offsets_[static_cast<std::size_t>(v)],
                adjacency_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }
    int degree(VertexId v) const {
        return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)]);
    }
    int max_degree() const { return max_degree_; }

    EdgeId find_edge(VertexId u, VertexId v) const;

    const std::vector<std::pair<VertexId, VertexId>>& edge_list() const { return edges_; }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    VertexId n_ = 0;
    int max_degree_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<EdgeId> adjacency_;
    std::vector<std::int64_t> offsets_;
};

}  // namespace kempe
