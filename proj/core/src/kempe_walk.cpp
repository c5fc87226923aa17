#include "kempe/kempe_walk.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace kempe {

namespace {

Color other_of_pair(Color c, Color a, Color b) { return c == a ? b : a; }

bool edge_incident(const SimpleGraph& g, EdgeId e, VertexId v) {
    const auto [lo, hi] = g.endpoints(e);
    return v == lo || v == hi;
}

void emit_recolor(const Configuration& config, TraceEvent::Kind kind, EdgeId e, ComplexColor before) {
    if (config.trace_sink() == nullptr) return;
    TraceEvent ev;
    ev.kind = kind;
    ev.edge = e;
    ev.before = before;
    ev.after = config.edge_colors(e);
    config.emit(ev);
}

}  // namespace

int KempePath::count_variables(const Configuration& config) const {
    int count = 0;
    EdgeId prev = kNoEdge;
    for (const Link& l : links) {
        if (l.edge == prev) continue;  // second link of the same edge
        prev = l.edge;
        if (config.is_variable_edge(l.edge)) ++count;
    }
    return count;
}

bool KempePath::contains_link_of(EdgeId e) const {
    return std::any_of(links.begin(), links.end(), [e](const Link& l) { return l.edge == e; });
}

KempePath trace_max_path(const Configuration& config, Link start, Color a, Color b) {
    const SimpleGraph& g = config.graph();
    const Color start_color = config.color_at(start.edge, start.endpoint);
    if (start_color != a && start_color != b)
        throw std::invalid_argument("start link color outside the requested pair");

    KempePath path;
    path.pair_low = std::min(a, b);
    path.pair_high = std::max(a, b);

    const std::size_t link_budget = 2 * static_cast<std::size_t>(g.edge_count()) + 2;

    // One extension step. `through_midpoint` selects which end of `cur` we
    // leave by; returns false when the path stops there.
    enum class Stop { none, fictitious, vertex };
    auto extend = [&](Link cur, bool through_midpoint, Link* next) -> Stop {
        if (through_midpoint) {
            const VertexId w = g.other_endpoint(cur.edge, cur.endpoint);
            const Color c = config.color_at(cur.edge, w);
            if (c != a && c != b) return Stop::fictitious;
            *next = Link{cur.edge, w};
            return Stop::none;
        }
        const Color here = config.color_at(cur.edge, cur.endpoint);
        const Color cont = other_of_pair(here, a, b);
        const EdgeId e2 = config.edge_with_color(cur.endpoint, cont);
        if (e2 == kNoEdge) return Stop::vertex;
        *next = Link{e2, cur.endpoint};
        return Stop::none;
    };

    // Forward from the start link's midpoint end.
    std::vector<Link> forward{start};
    bool through_midpoint = true;
    for (;;) {
        Link next;
        const Stop stop = extend(forward.back(), through_midpoint, &next);
        if (stop != Stop::none) {
            path.back_end = stop == Stop::fictitious ? KempePath::EndKind::fictitious : KempePath::EndKind::vertex;
            break;
        }
        if (next == start) {
            path.is_cycle = true;
            break;
        }
        forward.push_back(next);
        through_midpoint = !through_midpoint;
        if (forward.size() > link_budget) throw std::logic_error("kempe path trace exceeded link budget");
    }

    if (path.is_cycle) {
        path.links = std::move(forward);
        return path;
    }

    // Backward from the start link's vertex end; a cycle would have closed
    // during the forward sweep.
    std::vector<Link> backward;
    Link cur = start;
    through_midpoint = false;
    for (;;) {
        Link next;
        const Stop stop = extend(cur, through_midpoint, &next);
        if (stop != Stop::none) {
            path.front_end = stop == Stop::fictitious ? KempePath::EndKind::fictitious : KempePath::EndKind::vertex;
            break;
        }
        assert(!(next == start));
        backward.push_back(next);
        cur = next;
        through_midpoint = !through_midpoint;
        if (backward.size() > link_budget) throw std::logic_error("kempe path trace exceeded link budget");
    }

    path.links.reserve(forward.size() + backward.size());
    path.links.insert(path.links.end(), backward.rbegin(), backward.rend());
    path.links.insert(path.links.end(), forward.begin(), forward.end());
    return path;
}

void invert_path(Configuration& config, const KempePath& path, RunCounters* counters) {
    if (path.links.empty()) throw std::invalid_argument("cannot invert an empty path");

    // Maximality re-check: the path must still be exactly the maximal pair
    // path through its first link.
    const Color front_color = config.color_at(path.links.front().edge, path.links.front().endpoint);
    if (front_color != path.pair_low && front_color != path.pair_high)
        throw StalePathError("path link no longer carries a pair color");
    KempePath current = trace_max_path(config, path.links.front(), path.pair_low, path.pair_high);
    auto key = [](const KempePath& p) {
        std::vector<std::pair<EdgeId, VertexId>> k;
        k.reserve(p.links.size());
        for (const Link& l : p.links) k.emplace_back(l.edge, l.endpoint);
        std::sort(k.begin(), k.end());
        return k;
    };
    if (current.is_cycle != path.is_cycle || key(current) != key(path))
        throw StalePathError("path is no longer maximal in this configuration");

    std::vector<ComplexColor> before;
    std::vector<EdgeId> touched;
    if (config.trace_sink() != nullptr) {
        EdgeId prev = kNoEdge;
        for (const Link& l : path.links) {
            if (l.edge == prev) continue;
            prev = l.edge;
            touched.push_back(l.edge);
            before.push_back(config.edge_colors(l.edge));
        }
    }

    std::vector<Configuration::Recolor> updates;
    updates.reserve(path.links.size());
    for (const Link& l : path.links) {
        const Color c = config.color_at(l.edge, l.endpoint);
        updates.push_back({l.edge, l.endpoint, other_of_pair(c, path.pair_low, path.pair_high)});
    }
    config.apply(updates);
    if (counters != nullptr) ++counters->inversions;
    for (std::size_t i = 0; i < touched.size(); ++i)
        emit_recolor(config, TraceEvent::Kind::invert, touched[i], before[i]);
}

void exchange(Configuration& config, VertexId v, EdgeId edge_a, EdgeId edge_b, RunCounters* counters) {
    const SimpleGraph& g = config.graph();
    if (edge_a == edge_b) throw std::invalid_argument("exchange needs two distinct edges");
    if (!edge_incident(g, edge_a, v) || !edge_incident(g, edge_b, v))
        throw std::invalid_argument("exchange edges must both touch the vertex");

    const ComplexColor before_a = config.edge_colors(edge_a);
    const ComplexColor before_b = config.edge_colors(edge_b);
    const Color ca = config.color_at(edge_a, v);
    const Color cb = config.color_at(edge_b, v);
    const Configuration::Recolor updates[] = {{edge_a, v, cb}, {edge_b, v, ca}};
    config.apply(updates);
    if (counters != nullptr) ++counters->exchanges;
    emit_recolor(config, TraceEvent::Kind::exchange, edge_a, before_a);
    emit_recolor(config, TraceEvent::Kind::exchange, edge_b, before_b);
}

void exchange_with_dontcare(Configuration& config, VertexId v, EdgeId e, Color missing,
                            RunCounters* counters) {
    if (!edge_incident(config.graph(), e, v))
        throw std::invalid_argument("edge does not touch the vertex");
    if (missing < 1 || missing > config.palette()) throw std::invalid_argument("color outside palette");
    if (config.edge_with_color(v, missing) != kNoEdge)
        throw std::invalid_argument("color " + std::to_string(missing) + " is present at vertex " +
                                    std::to_string(v) + ", not a don't-care");
    if (config.color_at(e, v) == missing) throw std::invalid_argument("link already carries that color");

    const ComplexColor before = config.edge_colors(e);
    const Configuration::Recolor update[] = {{e, v, missing}};
    config.apply(update);
    if (counters != nullptr) ++counters->exchanges;
    emit_recolor(config, TraceEvent::Kind::dontcare, e, before);
}

namespace {

// One unguarded walk move of variable `t` through `front`, following the
// continuation link there. The caller guarantees the move does not wrap a
// sole-variable cycle.
WalkOutcome raw_step(Configuration& config, EdgeId t, VertexId front, RunCounters* counters) {
    const SimpleGraph& g = config.graph();
    const VertexId far = g.other_endpoint(t, front);
    const Color near_c = config.color_at(t, front);
    const Color far_c = config.color_at(t, far);

    const EdgeId e2 = config.edge_with_color(front, far_c);
    if (e2 == kNoEdge) {
        const ComplexColor before = config.edge_colors(t);
        exchange_with_dontcare(config, front, t, far_c, counters);
        if (counters != nullptr) ++counters->eliminated;
        emit_recolor(config, TraceEvent::Kind::eliminate, t, before);
        return {WalkOutcomeKind::eliminated_one, kNoEdge, -1, 1};
    }

    const VertexId w = g.other_endpoint(e2, front);
    const Color e2_far = config.color_at(e2, w);
    const ComplexColor before_t = config.edge_colors(t);
    const ComplexColor before_e2 = config.edge_colors(e2);
    exchange(config, front, t, e2, counters);

    if (e2_far == far_c) return {WalkOutcomeKind::stepped, e2, w, 1};
    if (e2_far == near_c) {
        if (counters != nullptr) counters->eliminated += 2;
        emit_recolor(config, TraceEvent::Kind::eliminate, t, before_t);
        emit_recolor(config, TraceEvent::Kind::eliminate, e2, before_e2);
        return {WalkOutcomeKind::eliminated_two, kNoEdge, -1, 1};
    }
    if (counters != nullptr) ++counters->eliminated;
    emit_recolor(config, TraceEvent::Kind::eliminate, t, before_t);
    return {WalkOutcomeKind::eliminated_one, kNoEdge, -1, 1};
}

}  // namespace

WalkOutcome kempe_step(Configuration& config, EdgeId variable, VertexId front, RunCounters* counters) {
    if (!config.is_variable_edge(variable)) throw std::invalid_argument("edge is not a variable");
    if (!edge_incident(config.graph(), variable, front))
        throw std::invalid_argument("front vertex not an endpoint of the variable");

    const ComplexColor cc = config.edge_colors(variable);
    const KempePath path = trace_max_path(config, Link{variable, front}, cc.first, cc.second);
    if (path.is_cycle && path.count_variables(config) == 1)
        return {WalkOutcomeKind::closed_cycle, variable, front, 0};
    return raw_step(config, variable, front, counters);
}

bool variable_walk(Configuration& config, EdgeId variable, RunCounters* counters) {
    if (!config.is_variable_edge(variable)) throw std::invalid_argument("edge is not a variable");
    if (counters != nullptr) ++counters->walks;

    const SimpleGraph& g = config.graph();
    const auto [lo, hi] = g.endpoints(variable);
    const Color a = config.color_at(variable, lo);
    const Color b = config.color_at(variable, hi);

    // Search phase, no mutation: follow the pair path out of the lower end
    // until it meets a variable, dies at a vertex, or wraps back through
    // this edge (the sole-variable odd cycle of a canonical configuration).
    VertexId front = lo;
    Color cont = b;
    std::size_t guard = 0;
    const std::size_t limit = 2 * static_cast<std::size_t>(g.edge_count()) + 2;
    std::size_t traced_steps = 0;
    for (;;) {
        const EdgeId e2 = config.edge_with_color(front, cont);
        if (e2 == kNoEdge) break;
        if (e2 == variable) return false;
        if (config.is_variable_edge(e2)) break;
        front = g.other_endpoint(e2, front);
        cont = other_of_pair(cont, a, b);
        ++traced_steps;
        if (++guard > limit) throw std::logic_error("variable walk search exceeded link budget");
    }

    // Exchange along the interior chain; the search bound guarantees the
    // slide terminates in an elimination.
    EdgeId t = variable;
    VertexId f = lo;
    for (std::size_t steps = 0;; ++steps) {
        const WalkOutcome out = raw_step(config, t, f, counters);
        if (out.kind != WalkOutcomeKind::stepped) {
            assert(out.kind == WalkOutcomeKind::eliminated_one || out.kind == WalkOutcomeKind::eliminated_two);
            return true;
        }
        t = out.moved_variable;
        f = out.new_front;
        if (steps > traced_steps + 1) throw std::logic_error("variable walk overran its traced path");
    }
}

WkpVerdict wkp(Configuration& config, RunCounters* counters) {
    for (;;) {
        if (config.variables().empty()) return WkpVerdict::proper;
        bool progressed = false;
        for (EdgeId e : config.variables()) {
            if (variable_walk(config, e, counters)) {
                progressed = true;
                break;  // the list changed; start over from the head
            }
        }
        if (!progressed) return WkpVerdict::canonical;
    }
}

bool canonical_structure_ok(const Configuration& config) {
    for (EdgeId e : config.variables()) {
        const auto [lo, hi] = config.graph().endpoints(e);
        const ComplexColor cc = config.edge_colors(e);
        const KempePath path = trace_max_path(config, Link{e, lo}, cc.first, cc.second);
        if (!path.is_cycle) return false;
        if (path.count_variables(config) != 1) return false;
        if (path.cycle_edge_length() % 2 == 0) return false;
    }
    return true;
}

}  // namespace kempe
