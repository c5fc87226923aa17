#include "kempe/directional.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace kempe {

SpanningTree build_spanning_tree(const SimpleGraph& graph, std::uint64_t seed) {
    const VertexId n = graph.vertex_count();
    SpanningTree tree;
    tree.parent_edge.assign(static_cast<std::size_t>(n), kNoEdge);
    tree.depth.assign(static_cast<std::size_t>(n), -1);

    std::vector<VertexId> component;
    std::vector<EdgeId> order;
    for (VertexId start = 0; start < n; ++start) {
        if (tree.depth[static_cast<std::size_t>(start)] >= 0) continue;

        // Collect the component, then root it at its max-degree vertex.
        component.clear();
        component.push_back(start);
        tree.depth[static_cast<std::size_t>(start)] = 0;  // marks visited
        for (std::size_t i = 0; i < component.size(); ++i) {
            for (EdgeId e : graph.incident_edges(component[i])) {
                const VertexId w = graph.other_endpoint(e, component[i]);
                if (tree.depth[static_cast<std::size_t>(w)] < 0) {
                    tree.depth[static_cast<std::size_t>(w)] = 0;
                    component.push_back(w);
                }
            }
        }
        VertexId root = component.front();
        for (VertexId v : component)
            if (graph.degree(v) > graph.degree(root) || (graph.degree(v) == graph.degree(root) && v < root))
                root = v;

        for (VertexId v : component) tree.depth[static_cast<std::size_t>(v)] = -1;
        tree.roots.push_back(root);
        tree.depth[static_cast<std::size_t>(root)] = 0;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            const auto incident = graph.incident_edges(u);
            order.assign(incident.begin(), incident.end());
            Rng rng(derive_seed(seed, 0x5354 + static_cast<std::uint64_t>(u)));
            rng.shuffle(std::span<EdgeId>(order));
            for (EdgeId e : order) {
                const VertexId w = graph.other_endpoint(e, u);
                if (tree.depth[static_cast<std::size_t>(w)] >= 0) continue;
                tree.depth[static_cast<std::size_t>(w)] = tree.depth[static_cast<std::size_t>(u)] + 1;
                tree.parent_edge[static_cast<std::size_t>(w)] = e;
                queue.push_back(w);
            }
        }
    }
    return tree;
}

const char* move_case_name(MoveCase c) {
    switch (c) {
        case MoveCase::kw_reducible: return "KW";
        case MoveCase::dw11: return "DW1.1";
        case MoveCase::dw12: return "DW1.2";
        case MoveCase::dw21: return "DW2.1";
        case MoveCase::dw22: return "DW2.2";
        case MoveCase::blocked_dw12: return "blocked-DW1.2";
        case MoveCase::blocked_dw2: return "blocked-DW2";
    }
    return "?";
}

namespace {

VertexId shared_vertex(const SimpleGraph& g, EdgeId a, EdgeId b) {
    const auto [a_lo, a_hi] = g.endpoints(a);
    const auto [b_lo, b_hi] = g.endpoints(b);
    if (a_lo == b_lo || a_lo == b_hi) return a_lo;
    if (a_hi == b_lo || a_hi == b_hi) return a_hi;
    throw std::invalid_argument("edges are not adjacent");
}

void emit_eliminated(const Configuration& config, EdgeId e, ComplexColor before, RunCounters* counters) {
    if (counters != nullptr) ++counters->eliminated;
    if (config.trace_sink() == nullptr) return;
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::eliminate;
    ev.edge = e;
    ev.before = before;
    ev.after = config.edge_colors(e);
    config.emit(ev);
}

}  // namespace

MoveClassification classify_move(const Configuration& config, EdgeId tagged, EdgeId next) {
    if (!config.is_variable_edge(tagged)) throw std::invalid_argument("tagged edge is not a variable");
    if (tagged == next) throw std::invalid_argument("tagged and next edges must differ");
    const SimpleGraph& g = config.graph();

    MoveClassification cls;
    cls.tagged = tagged;
    cls.next = next;
    cls.front = shared_vertex(g, tagged, next);
    cls.beta = config.color_at(tagged, cls.front);
    cls.alpha = config.color_at(tagged, g.other_endpoint(tagged, cls.front));
    cls.config_version = config.version();

    const VertexId next_far_v = g.other_endpoint(next, cls.front);
    const Color near2 = config.color_at(next, cls.front);
    const Color far2 = config.color_at(next, next_far_v);

    // near2 == beta is impossible (both links would sit at the front).
    if (near2 == cls.alpha || far2 == cls.beta) {
        cls.kind = MoveCase::kw_reducible;
        return cls;
    }

    const Color gamma = near2;
    if (far2 == cls.alpha) {
        // Next is a (γ,α) variable lying inside one maximal (γ,α) path.
        KempePath h = trace_max_path(config, Link{next, cls.front}, gamma, cls.alpha);
        if (!h.contains_link_of(tagged)) {
            cls.kind = MoveCase::dw11;
            cls.inversion = std::move(h);
            return cls;
        }
        // The α-type inversion runs through the tagged edge. The β-type is
        // still available here: flipping the (α,β) path through next's far
        // link turns next into (γ,β) and the exchange takes it out.
        KempePath h2 = trace_max_path(config, Link{next, next_far_v}, cls.alpha, cls.beta);
        if (!h2.contains_link_of(tagged)) {
            cls.kind = MoveCase::dw22;
            cls.inversion = std::move(h2);
            return cls;
        }
        cls.kind = MoveCase::blocked_dw12;
        return cls;
    }

    if (far2 == gamma) {
        KempePath h = trace_max_path(config, Link{next, cls.front}, gamma, cls.alpha);
        if (!h.contains_link_of(tagged)) {
            cls.kind = MoveCase::dw12;
            cls.inversion = std::move(h);
            return cls;
        }
        // The path ends at the tagged edge's midpoint, so the tagged link is
        // one of its end links. When the path reaches next's far link before
        // its near link, flipping just that prefix leaves the front vertex
        // untouched and the move still goes through; otherwise it is blocked.
        std::vector<Link> oriented = h.links;
        if (oriented.back().edge == tagged) std::reverse(oriented.begin(), oriented.end());
        if (oriented.front().edge != tagged)
            throw std::logic_error("tagged link is not terminal on the inversion path");
        std::size_t near_pos = oriented.size(), far_pos = oriented.size();
        for (std::size_t i = 0; i < oriented.size(); ++i) {
            if (oriented[i].edge != next) continue;
            (oriented[i].endpoint == cls.front ? near_pos : far_pos) = i;
        }
        if (near_pos >= oriented.size() || far_pos >= oriented.size())
            throw std::logic_error("inversion path lost the next edge");
        if (far_pos < near_pos) {
            cls.kind = MoveCase::dw12;
            cls.chain_move = true;
            cls.chain_links.assign(oriented.begin(), oriented.begin() + static_cast<std::ptrdiff_t>(far_pos) + 1);
            cls.inversion = std::move(h);
        } else {
            cls.kind = MoveCase::blocked_dw12;
        }
        return cls;
    }

    // Four distinct colors: try the α-type inversion, then the β-type.
    KempePath h1 = trace_max_path(config, Link{next, cls.front}, gamma, cls.alpha);
    if (!h1.contains_link_of(tagged)) {
        cls.kind = MoveCase::dw21;
        cls.inversion = std::move(h1);
        return cls;
    }
    KempePath h2 = trace_max_path(config, Link{next, next_far_v}, far2, cls.beta);
    if (!h2.contains_link_of(tagged)) {
        cls.kind = MoveCase::dw22;
        cls.inversion = std::move(h2);
        return cls;
    }
    cls.kind = MoveCase::blocked_dw2;
    return cls;
}

WalkOutcome apply_move(Configuration& config, const MoveClassification& cls, RunCounters* counters) {
    if (cls.config_version != config.version())
        throw StaleClassificationError("configuration changed since classification");
    if (is_blocked(cls.kind)) throw std::invalid_argument("cannot apply a blocked move");

    const SimpleGraph& g = config.graph();
    const EdgeId tagged = cls.tagged;
    const EdgeId next = cls.next;
    const VertexId front = cls.front;
    const VertexId next_far_v = g.other_endpoint(next, front);

    switch (cls.kind) {
        case MoveCase::kw_reducible: {
            const Color near2 = config.color_at(next, front);
            const Color far2 = config.color_at(next, next_far_v);
            const ComplexColor before_t = config.edge_colors(tagged);
            const ComplexColor before_n = config.edge_colors(next);
            exchange(config, front, tagged, next, counters);
            if (near2 == cls.alpha) {
                if (far2 == cls.alpha) return {WalkOutcomeKind::stepped, next, next_far_v, 1};
                if (far2 == cls.beta) {
                    emit_eliminated(config, tagged, before_t, counters);
                    emit_eliminated(config, next, before_n, counters);
                    return {WalkOutcomeKind::eliminated_two, kNoEdge, -1, 1};
                }
                emit_eliminated(config, tagged, before_t, counters);
                return {WalkOutcomeKind::eliminated_one, kNoEdge, -1, 1};
            }
            // near2 = γ with far2 = β: the exchange turned next into (β,β).
            emit_eliminated(config, next, before_n, counters);
            return {WalkOutcomeKind::eliminated_one, kNoEdge, -1, 1};
        }

        case MoveCase::dw11:
        case MoveCase::dw21: {
            invert_path(config, *cls.inversion, counters);
            const ComplexColor before_t = config.edge_colors(tagged);
            exchange(config, front, tagged, next, counters);
            emit_eliminated(config, tagged, before_t, counters);
            return {WalkOutcomeKind::eliminated_one, kNoEdge, -1, 1};
        }

        case MoveCase::dw22: {
            invert_path(config, *cls.inversion, counters);
            const ComplexColor before_n = config.edge_colors(next);
            exchange(config, front, tagged, next, counters);
            emit_eliminated(config, next, before_n, counters);
            return {WalkOutcomeKind::eliminated_one, kNoEdge, -1, 1};
        }

        case MoveCase::dw12: {
            if (!cls.chain_move) {
                invert_path(config, *cls.inversion, counters);
                exchange(config, front, tagged, next, counters);
                return {WalkOutcomeKind::stepped, next, next_far_v, 1};
            }
            // Prefix chain: flip the path section from the tagged edge up to
            // next's far link by exchanging at each shared vertex, then step.
            const std::vector<Link>& chain = cls.chain_links;
            assert(chain.size() >= 2 && chain.size() % 2 == 0);
            for (std::size_t i = 0; i + 1 < chain.size(); i += 2) {
                assert(chain[i].endpoint == chain[i + 1].endpoint);
                exchange(config, chain[i].endpoint, chain[i].edge, chain[i + 1].edge, counters);
            }
            exchange(config, front, tagged, next, counters);
            return {WalkOutcomeKind::stepped, next, next_far_v, 1};
        }

        case MoveCase::blocked_dw12:
        case MoveCase::blocked_dw2:
            break;
    }
    throw std::logic_error("unreachable move case");
}

std::uint64_t step_budget(std::int64_t n_i, std::int64_t k, int max_degree, std::int64_t edge_count) {
    if (edge_count < 1) throw std::invalid_argument("step budget needs at least one edge");
    if (n_i <= 0) throw std::invalid_argument("step budget needs a positive variable count");
    if (k < 1 || k > n_i) throw std::invalid_argument("list size outside [1, n_i]");
    const double span = static_cast<double>(edge_count - k + 1);
    const double h = 4.0 * static_cast<double>(max_degree) * static_cast<double>(n_i) * span * span / M_LN2;
    // Large instances push h past what a 64-bit count can hold; such budgets
    // are unreachable anyway, so saturate instead of overflowing the cast.
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    if (h >= static_cast<double>(cap)) return cap;
    return static_cast<std::uint64_t>(std::ceil(h));
}

WalkStep walk_to_next_step(Configuration& config, EdgeId tagged, const SpanningTree* tree,
                           Color c_i, Rng& rng, RunCounters* counters, VertexId carried_front) {
    if (!config.is_variable_edge(tagged)) throw std::invalid_argument("tagged edge is not a variable");
    if (!config.edge_colors(tagged).contains(c_i))
        throw std::invalid_argument("tagged variable does not contain the walked color");
    if (counters != nullptr) ++counters->walks;

    const SimpleGraph& g = config.graph();
    const auto [lo, hi] = g.endpoints(tagged);

    VertexId front;
    if (tree == nullptr) {
        front = rng.bounded(2) == 0 ? lo : hi;
    } else if (carried_front == lo || carried_front == hi) {
        front = carried_front;
    } else {
        const int dl = tree->depth[static_cast<std::size_t>(lo)];
        const int dh = tree->depth[static_cast<std::size_t>(hi)];
        front = dl < dh ? lo : dh < dl ? hi : std::min(lo, hi);
    }

    std::vector<EdgeId> cands;
    for (EdgeId e : g.incident_edges(front))
        if (e != tagged) cands.push_back(e);

    if (!cands.empty()) {
        std::size_t primary = 0;
        if (tree != nullptr) {
            const EdgeId parent = tree->parent_edge[static_cast<std::size_t>(front)];
            const auto it = std::find(cands.begin(), cands.end(), parent);
            if (it != cands.end()) {
                primary = static_cast<std::size_t>(it - cands.begin());
            } else {
                int best = std::numeric_limits<int>::max();
                for (std::size_t i = 0; i < cands.size(); ++i) {
                    const int d = tree->depth[static_cast<std::size_t>(g.other_endpoint(cands[i], front))];
                    if (d < best) {
                        best = d;
                        primary = i;
                    }
                }
            }
        } else {
            primary = static_cast<std::size_t>(rng.bounded(cands.size()));
        }
        std::swap(cands[0], cands[primary]);
        rng.shuffle(std::span<EdgeId>(cands).subspan(1));
    }

    for (EdgeId next : cands) {
        MoveClassification cls = classify_move(config, tagged, next);
        if (config.trace_sink() != nullptr) {
            TraceEvent ev;
            ev.kind = TraceEvent::Kind::classify;
            ev.edge = next;
            ev.before = config.edge_colors(tagged);
            ev.after = config.edge_colors(next);
            ev.detail = move_case_name(cls.kind);
            config.emit(ev);
        }
        if (is_blocked(cls.kind)) {
            if (counters != nullptr) ++counters->deflections;
            if (config.trace_sink() != nullptr) {
                TraceEvent ev;
                ev.kind = TraceEvent::Kind::deflect;
                ev.edge = next;
                ev.detail = move_case_name(cls.kind);
                config.emit(ev);
            }
            continue;
        }

        std::vector<EdgeId> affected{tagged, next};
        if (cls.inversion.has_value()) {
            for (const Link& l : cls.inversion->links)
                if (std::find(affected.begin(), affected.end(), l.edge) == affected.end())
                    affected.push_back(l.edge);
        }
        const auto count_ci = [&]() {
            int count = 0;
            for (EdgeId e : affected) {
                const ComplexColor cc = config.edge_colors(e);
                if (cc.is_variable() && cc.contains(c_i)) ++count;
            }
            return count;
        };

        const int before = count_ci();
        const WalkOutcome out = apply_move(config, cls, counters);
        if (count_ci() < before) return {true, kNoEdge, -1};

        if (out.kind == WalkOutcomeKind::stepped) {
            const EdgeId moved = out.moved_variable;
            if (config.is_variable_edge(moved) && variable_walk(config, moved, counters))
                return {true, kNoEdge, -1};
            return {false, moved, out.new_front};
        }
        // A variable outside the walked color died; the tagged edge keeps
        // walking with a changed pair, pushing the same way.
        return {false, tagged, front};
    }

    // Every neighbor blocked. A live continuation link would have been
    // kw_reducible, so the continuation color is missing at the front and
    // the don't-care absorbs the variable.
    const Color far_c = config.color_at(tagged, g.other_endpoint(tagged, front));
    if (config.edge_with_color(front, far_c) != kNoEdge)
        throw std::logic_error("every candidate blocked despite a live continuation link");
    const ComplexColor before = config.edge_colors(tagged);
    exchange_with_dontcare(config, front, tagged, far_c, counters);
    emit_eliminated(config, tagged, before, counters);
    return {true, kNoEdge, -1};
}

}  // namespace kempe
