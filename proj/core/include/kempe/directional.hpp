#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kempe/kempe_walk.hpp"
#include "kempe/rng.hpp"

namespace kempe {

// BFS spanning forest: one root per component, rooted at a maximum-degree
// vertex (ties to the lowest id). Neighbor expansion order is seeded, so
// different seeds give different trees while staying reproducible.
struct SpanningTree {
    std::vector<EdgeId> parent_edge;  // kNoEdge at roots
    std::vector<int> depth;
    std::vector<VertexId> roots;
};

SpanningTree build_spanning_tree(const SimpleGraph& graph, std::uint64_t seed);

enum class MoveCase {
    kw_reducible,  // the next edge shares a useful pair color; one exchange moves or eliminates
    dw11,          // next is a (γ,α) variable; invert its pair path, then exchange
    dw12,          // next is a (γ,γ) constant; invert the (γ,α) path through it, then exchange
    dw21,          // four colors; invert the (γ,α) path through next's near link
    dw22,          // four colors; invert the (δ,β) path through next's far link
    blocked_dw12,  // the DW1 inversion would run through the tagged edge on the wrong side
    blocked_dw2,   // both DW2 inversions run through the tagged edge
};

constexpr bool is_blocked(MoveCase c) {
    return c == MoveCase::blocked_dw12 || c == MoveCase::blocked_dw2;
}
const char* move_case_name(MoveCase c);

struct MoveClassification {
    MoveCase kind;
    EdgeId tagged = kNoEdge;
    EdgeId next = kNoEdge;
    VertexId front = -1;  // shared vertex of tagged and next
    Color alpha = kNoColor;  // tagged = (alpha, beta) with beta on the front side
    Color beta = kNoColor;
    std::optional<KempePath> inversion;  // full-path inversion to apply first
    // DW1.2 realized by a prefix chain: the inversion path ends at the
    // tagged edge's midpoint and reaches next's far link before its near
    // link; `chain_links` is that prefix, flipped by pairwise exchanges.
    bool chain_move = false;
    std::vector<Link> chain_links;
    std::uint64_t config_version = 0;
};

// Classify the one-step move of the tagged variable onto an adjacent edge.
// A candidate inversion is invalid when its maximal path contains a link of
// the tagged edge; with no valid candidate the move is blocked.
MoveClassification classify_move(const Configuration& config, EdgeId tagged, EdgeId next);

// Execute a non-blocked classification: the inversion (or prefix chain)
// followed by the exchange at the front vertex. Throws
// StaleClassificationError if the configuration changed since classify_move.
// Never increases the variable count.
WalkOutcome apply_move(Configuration& config, const MoveClassification& cls,
                       RunCounters* counters = nullptr);

class StaleClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Step allowance ceil(4*Δ*n_i*(m-k+1)^2 / ln 2) for a walk iteration that
// started with n_i tagged-color variables and currently lists k of them.
std::uint64_t step_budget(std::int64_t n_i, std::int64_t k, int max_degree, std::int64_t edge_count);

struct WalkStep {
    bool eliminated = false;     // a c_i-variable went away (directly or via the follow-up walk)
    EdgeId tracked = kNoEdge;    // the walking variable's edge after the call
    VertexId front_hint = -1;    // direction to continue from on the next call
};

// One move attempt of a tagged c_i-variable: pick the next edge (toward the
// tree root, or uniformly at random with tree == nullptr), deflect past
// blocked candidates in seeded order, and fall back to the front don't-care
// when every candidate blocks. Runs variable_walk on a freshly moved
// variable in case the move opened a new pair path.
//
// In tree mode the walk carries its direction: `carried_front` is the front
// returned by the previous step, so a deflected variable keeps moving
// instead of stepping straight back (re-deriving the front from depths
// alone lets a step undo its predecessor and the walk loops on the spot).
// Pass -1 on the first step; the front then defaults to the endpoint closer
// to the root. Random mode draws a fresh endpoint every step.
WalkStep walk_to_next_step(Configuration& config, EdgeId tagged, const SpanningTree* tree,
                           Color c_i, Rng& rng, RunCounters* counters = nullptr,
                           VertexId carried_front = -1);

}  // namespace kempe
