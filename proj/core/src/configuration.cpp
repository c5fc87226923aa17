#include "kempe/configuration.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kempe/rng.hpp"

namespace kempe {

Configuration::Configuration(const SimpleGraph& graph, int palette, std::vector<ComplexColor> edge_colors)
    : graph_(&graph), palette_(palette), colors_(std::move(edge_colors)) {
    if (palette_ < 0) throw std::invalid_argument("negative palette size");
    if (colors_.size() != static_cast<std::size_t>(graph.edge_count()))
        throw std::invalid_argument("edge color vector size mismatch");

    color_index_.assign(static_cast<std::size_t>(graph.vertex_count()) * static_cast<std::size_t>(palette_),
                        kNoEdge);
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const auto [lo, hi] = graph.endpoints(e);
        const ComplexColor cc = colors_[static_cast<std::size_t>(e)];
        for (const auto& [v, c] : {std::pair{lo, cc.first}, std::pair{hi, cc.second}}) {
            if (c < 1 || c > palette_)
                throw std::invalid_argument("link color out of palette range at edge " + std::to_string(e));
            EdgeId& slot = color_index_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
                                        static_cast<std::size_t>(c - 1)];
            if (slot != kNoEdge)
                throw std::invalid_argument("vertex constraint violated at vertex " + std::to_string(v));
            slot = e;
        }
        if (cc.is_variable()) variables_.insert(e);
    }
}

void Configuration::apply(std::span<const Recolor> updates) {
    // Reject before mutating: simulate the index effect of the batch.
    for (const auto& [e, v, c] : updates) {
        if (c < 1 || c > palette_) throw std::logic_error("recolor outside palette");
    }
    // Clear old slots.
    for (const auto& [e, v, c] : updates) {
        const Color old = color_at(e, v);
        color_index_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
                     static_cast<std::size_t>(old - 1)] = kNoEdge;
    }
    // Fill new slots, detecting collisions against untouched links.
    std::size_t filled = 0;
    for (const auto& [e, v, c] : updates) {
        EdgeId& slot = color_index_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
                                    static_cast<std::size_t>(c - 1)];
        if (slot != kNoEdge && slot != e) break;
        slot = e;
        ++filled;
    }
    if (filled != updates.size()) {
        // Roll the index back and refuse the batch.
        for (std::size_t i = 0; i < filled; ++i) {
            const auto& [e, v, c] = updates[i];
            color_index_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
                         static_cast<std::size_t>(c - 1)] = kNoEdge;
        }
        for (const auto& [e, v, c] : updates) {
            const Color old = color_at(e, v);
            EdgeId& slot = color_index_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
                                        static_cast<std::size_t>(old - 1)];
            slot = e;
        }
        throw std::logic_error("recolor batch would violate the vertex constraint");
    }
    // Commit colors and refresh variable membership of touched edges.
    for (const auto& [e, v, c] : updates) {
        const auto [lo, hi] = graph_->endpoints(e);
        auto& cc = colors_[static_cast<std::size_t>(e)];
        (v == lo ? cc.first : cc.second) = c;
    }
    for (const auto& [e, v, c] : updates) {
        if (colors_[static_cast<std::size_t>(e)].is_variable())
            variables_.insert(e);
        else
            variables_.erase(e);
    }
    ++version_;
#ifndef NDEBUG
    assert(variable_count() == recount_variables());
#endif
}

int Configuration::recount_variables() const {
    int count = 0;
    for (const auto& cc : colors_) count += cc.is_variable() ? 1 : 0;
    return count;
}

bool Configuration::scan_vertex_constraint() const {
    std::vector<int> seen(static_cast<std::size_t>(palette_) + 1, -1);
    for (VertexId v = 0; v < graph_->vertex_count(); ++v) {
        for (EdgeId e : graph_->incident_edges(v)) {
            const Color c = color_at(e, v);
            if (c < 1 || c > palette_) return false;
            if (seen[static_cast<std::size_t>(c)] == v) return false;
            seen[static_cast<std::size_t>(c)] = v;
        }
    }
    return true;
}

Configuration initial_configuration(const SimpleGraph& graph, int palette, std::uint64_t seed) {
    if (palette < graph.max_degree())
        throw std::invalid_argument("palette too small: " + std::to_string(palette) + " colors for max degree " +
                                    std::to_string(graph.max_degree()));

    std::vector<ComplexColor> colors(static_cast<std::size_t>(graph.edge_count()));
    std::vector<Color> perm(static_cast<std::size_t>(palette));
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        std::iota(perm.begin(), perm.end(), Color{1});
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(v)));
        rng.shuffle(std::span<Color>(perm));
        int slot = 0;
        for (EdgeId e : graph.incident_edges(v)) {
            auto& cc = colors[static_cast<std::size_t>(e)];
            const auto [lo, hi] = graph.endpoints(e);
            (v == lo ? cc.first : cc.second) = perm[static_cast<std::size_t>(slot++)];
        }
    }
    return Configuration(graph, palette, std::move(colors));
}

bool is_consistent(const Configuration& config) { return config.scan_vertex_constraint(); }

bool is_proper(const Configuration& config) {
    return config.scan_vertex_constraint() && config.recount_variables() == 0;
}

std::vector<EdgeId> variables_containing(const Configuration& config, Color c) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < config.graph().edge_count(); ++e) {
        const ComplexColor cc = config.edge_colors(e);
        if (cc.is_variable() && cc.contains(c)) out.push_back(e);
    }
    return out;
}

std::vector<Color> dontcare_colors(const Configuration& config, VertexId v) {
    std::vector<bool> used(static_cast<std::size_t>(config.palette()) + 1, false);
    for (EdgeId e : config.graph().incident_edges(v))
        used[static_cast<std::size_t>(config.color_at(e, v))] = true;
    std::vector<Color> out;
    for (Color c = 1; c <= config.palette(); ++c)
        if (!used[static_cast<std::size_t>(c)]) out.push_back(c);
    return out;
}

}  // namespace kempe
