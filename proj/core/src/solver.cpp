#include "kempe/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace kempe {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::proper: return "proper";
        case Verdict::canonical: return "canonical";
        case Verdict::chromatic_claim: return "chromatic_claim_delta_plus_1";
    }
    return "?";
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::wkp: return "wkp";
        case Algorithm::wst: return "wst";
        case Algorithm::random_walk: return "random";
    }
    return "?";
}

namespace {

// WST steps 4-14: per color, walk each listed variable under the step
// budget; any elimination rebuilds the list and restarts the selection.
// Returns true when some variable exhausts every budget, the halting signal
// that the palette is one color short. A pair change along a walk can hand
// a variable a color whose iteration already finished, so the color sweep
// repeats until no variables remain.
bool directional_stage(Configuration& config, const SpanningTree* tree, Rng& rng, RunCounters& counters) {
    const std::int64_t m = config.graph().edge_count();
    const int max_degree = config.graph().max_degree();

    while (!config.variables().empty()) {
        for (Color c_i = 1; c_i <= config.palette(); ++c_i) {
            std::vector<EdgeId> list = variables_containing(config, c_i);
            if (list.empty()) continue;
            std::int64_t n_i = static_cast<std::int64_t>(list.size());

            for (;;) {
                if (list.empty()) break;  // next color
                bool eliminated_any = false;
                for (EdgeId selected : list) {
                    assert(config.is_variable_edge(selected) && config.edge_colors(selected).contains(c_i));
                    const std::uint64_t budget =
                        step_budget(n_i, static_cast<std::int64_t>(list.size()), max_degree, m) - 1;
                    if (config.trace_sink() != nullptr) {
                        TraceEvent ev;
                        ev.kind = TraceEvent::Kind::budget;
                        ev.edge = selected;
                        ev.a = n_i;
                        ev.b = static_cast<std::int64_t>(list.size());
                        ev.c = static_cast<std::int64_t>(budget + 1);
                        config.emit(ev);
                    }
                    EdgeId tracked = selected;
                    VertexId front_hint = -1;
                    for (std::uint64_t step = 0; step < budget; ++step) {
                        const WalkStep res =
                            walk_to_next_step(config, tracked, tree, c_i, rng, &counters, front_hint);
                        if (res.eliminated) {
                            eliminated_any = true;
                            break;
                        }
                        tracked = res.tracked;
                        front_hint = res.front_hint;
                    }
                    if (eliminated_any) break;
                }
                if (!eliminated_any) return true;  // all budgets spent: halt
                list = variables_containing(config, c_i);
                n_i = std::max(n_i, static_cast<std::int64_t>(list.size()));
            }
        }
    }
    return false;
}

}  // namespace

RunReport solve(const SimpleGraph& graph, Algorithm algorithm, int palette, std::uint64_t seed,
                TraceSink* trace) {
    const auto t0 = std::chrono::steady_clock::now();

    RunReport report;
    report.palette = palette;
    report.seed = seed;

    Configuration config = initial_configuration(graph, palette, derive_seed(seed, 2));
    config.set_trace_sink(trace);

    if (algorithm == Algorithm::wkp) {
        report.verdict = wkp(config, &report.counters) == WkpVerdict::proper ? Verdict::proper
                                                                             : Verdict::canonical;
    } else {
        SpanningTree tree;
        const SpanningTree* tree_ptr = nullptr;
        if (algorithm == Algorithm::wst) {
            tree = build_spanning_tree(graph, derive_seed(seed, 1));
            tree_ptr = &tree;
        }
        wkp(config, &report.counters);
        if (config.variables().empty()) {
            report.verdict = Verdict::proper;
        } else {
            Rng rng(derive_seed(seed, 3));
            report.verdict = directional_stage(config, tree_ptr, rng, report.counters)
                                 ? Verdict::chromatic_claim
                                 : Verdict::proper;
        }
    }

    if (report.verdict == Verdict::proper) {
        if (!is_proper(config)) throw std::logic_error("solver reported proper but the verifier disagrees");
        report.coloring.reserve(static_cast<std::size_t>(graph.edge_count()));
        for (EdgeId e = 0; e < graph.edge_count(); ++e) report.coloring.push_back(config.edge_colors(e).first);
    }

    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

RunReport wst(const SimpleGraph& graph, bool random_mode, std::uint64_t seed, TraceSink* trace) {
    return solve(graph, random_mode ? Algorithm::random_walk : Algorithm::wst, graph.max_degree(), seed,
                 trace);
}

FallbackResult color_with_fallback(const SimpleGraph& graph, Algorithm algorithm, std::uint64_t seed,
                                   int max_retries, TraceSink* trace) {
    FallbackResult result;
    result.report = solve(graph, algorithm, graph.max_degree(), seed, trace);
    if (result.report.verdict == Verdict::proper) return result;

    result.class_two_claimed = result.report.verdict == Verdict::chromatic_claim;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        ++result.attempts;
        RunReport retry =
            solve(graph, algorithm, graph.max_degree() + 1, derive_seed(seed, 0xFA11 + static_cast<std::uint64_t>(attempt)), trace);
        if (retry.verdict == Verdict::proper) {
            result.report = std::move(retry);
            return result;
        }
    }
    throw std::runtime_error("fallback exhausted: no proper coloring found with an extra color after " +
                             std::to_string(max_retries) + " retries");
}

}  // namespace kempe
