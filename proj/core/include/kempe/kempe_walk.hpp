#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kempe/configuration.hpp"

namespace kempe {

struct RunCounters {
    std::uint64_t walks = 0;
    std::uint64_t exchanges = 0;
    std::uint64_t inversions = 0;
    std::uint64_t deflections = 0;
    std::uint64_t eliminated = 0;
    friend bool operator==(const RunCounters&, const RunCounters&) = default;
};

// Maximal two-colored link sequence. Consecutive links share alternately an
// edge midpoint and a vertex; for a cycle the first and last links are
// adjacent and every link appears once.
struct KempePath {
    Color pair_low{};   // the {a,b} color pair, pair_low < pair_high
    Color pair_high{};
    std::vector<Link> links;
    bool is_cycle = false;

    // Where an open path stops: at an edge midpoint (the other link of that
    // edge falls outside the pair) or at a vertex missing the continuation
    // color.
    enum class EndKind { fictitious, vertex };
    EndKind front_end = EndKind::vertex;
    EndKind back_end = EndKind::vertex;

    // Edge count of a cycle (each contributing both links).
    int cycle_edge_length() const { return static_cast<int>(links.size() / 2); }
    int count_variables(const Configuration& config) const;
    bool contains_link_of(EdgeId e) const;
};

class StalePathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The unique maximal (a,b) path through start. Consistency makes the
// extension deterministic: a vertex holds at most one a-link and one b-link.
// Visits at most 2|E| links.
KempePath trace_max_path(const Configuration& config, Link start, Color a, Color b);

// Swap the pair colors on every link of a maximal path. Re-validates
// maximality against the current configuration first and throws
// StalePathError if the path no longer matches. Preserves consistency and
// the variable count.
void invert_path(Configuration& config, const KempePath& path, RunCounters* counters = nullptr);

// Exchange the v-side colors of two edges incident to v.
void exchange(Configuration& config, VertexId v, EdgeId edge_a, EdgeId edge_b,
              RunCounters* counters = nullptr);

// Recolor the v-side link of e to a color absent at v.
void exchange_with_dontcare(Configuration& config, VertexId v, EdgeId e, Color missing,
                            RunCounters* counters = nullptr);

enum class WalkOutcomeKind { eliminated_two, eliminated_one, stepped, closed_cycle };

struct WalkOutcome {
    WalkOutcomeKind kind;
    EdgeId moved_variable = kNoEdge;  // where the variable sits after a step
    VertexId new_front = -1;          // walk front after a step
    int steps_taken = 0;
};

// One walk move of a variable through the chosen front endpoint. Refuses to
// act (closed_cycle, no mutation) when the variable's maximal path is a
// cycle it is the sole variable of; otherwise applies exactly one of the
// four one-step move rules. Never increases the variable count.
WalkOutcome kempe_step(Configuration& config, EdgeId variable, VertexId front,
                       RunCounters* counters = nullptr);

// Full walk of one variable along its maximal path, traced from the
// lower-id end first. Returns true when the walk ends in an elimination
// (meeting another variable or a missing-color vertex); returns false and
// leaves the configuration untouched when the path is a cycle owned by this
// variable alone.
bool variable_walk(Configuration& config, EdgeId variable, RunCounters* counters = nullptr);

enum class WkpVerdict { proper, canonical };

// Exhaustive single-variable walk elimination: walks variables in ascending
// edge-id order, restarting from the head after every elimination, until
// none remain (proper) or every survivor refuses (canonical).
WkpVerdict wkp(Configuration& config, RunCounters* counters = nullptr);

// Canonical-shape check used by tests and the solver: every remaining
// variable is the sole variable of an odd two-colored cycle.
bool canonical_structure_ok(const Configuration& config);

}  // namespace kempe
