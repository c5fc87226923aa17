#include "kempe/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace kempe {

namespace {
std::uint64_t pair_key(VertexId lo, VertexId hi) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lo)) << 32) |
           static_cast<std::uint32_t>(hi);
}
}  // namespace

SimpleGraph::SimpleGraph(VertexId vertex_count, std::span<const std::pair<VertexId, VertexId>> edges)
    : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        const VertexId lo = std::min(a, b), hi = std::max(a, b);
        if (!seen.insert(pair_key(lo, hi)).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
        edges_.emplace_back(lo, hi);
    }

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& [lo, hi] : edges_) {
        ++offsets_[static_cast<std::size_t>(lo) + 1];
        ++offsets_[static_cast<std::size_t>(hi) + 1];
    }
    for (std::size_t v = 1; v < offsets_.size(); ++v) offsets_[v] += offsets_[v - 1];
    adjacency_.resize(edges_.size() * 2);
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Edges visited in id order, so each adjacency list comes out ascending.
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const auto& [lo, hi] = edges_[static_cast<std::size_t>(e)];
        adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(lo)]++)] = e;
        adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(hi)]++)] = e;
    }
    for (VertexId v = 0; v < n_; ++v) max_degree_ = std::max(max_degree_, degree(v));
}

EdgeId SimpleGraph::find_edge(VertexId u, VertexId v) const {
    if (u == v) return kNoEdge;
    for (EdgeId e : incident_edges(u)) {
        if (other_endpoint(e, u) == v) return e;
    }
    return kNoEdge;
}

}  // namespace kempe
