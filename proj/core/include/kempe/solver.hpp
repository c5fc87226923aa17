#pragma once

#include <cstdint>
#include <vector>

#include "kempe/directional.hpp"

namespace kempe {

enum class Verdict { proper, canonical, chromatic_claim };
enum class Algorithm { wkp, wst, random_walk };

const char* verdict_name(Verdict v);
const char* algorithm_name(Algorithm a);

struct RunReport {
    Verdict verdict = Verdict::proper;
    int palette = 0;
    std::vector<Color> coloring;  // per-edge constant color; non-empty iff proper
    RunCounters counters;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
};

// Full pipeline on a fixed palette. wkp runs the Kempe-walk stage alone and
// may end canonical; wst / random_walk continue with budgeted directional
// walks and either reach a proper coloring or halt claiming the palette is
// one color short. A proper verdict is always re-checked by the independent
// verifier before it is reported.
RunReport solve(const SimpleGraph& graph, Algorithm algorithm, int palette, std::uint64_t seed,
                TraceSink* trace = nullptr);

// The spanning-tree walk with the palette pinned to the maximum degree.
RunReport wst(const SimpleGraph& graph, bool random_mode, std::uint64_t seed, TraceSink* trace = nullptr);

struct FallbackResult {
    RunReport report;
    bool class_two_claimed = false;  // the max-degree palette run halted
    int attempts = 1;                // total pipeline runs
};

// Guaranteed-coloring wrapper: solve with K = Δ; on a halt, rerun the whole
// pipeline with K = Δ+1 under fresh derived seeds until it colors, up to
// max_retries attempts. Throws std::runtime_error when the retry budget is
// exhausted rather than ever returning an improper coloring.
FallbackResult color_with_fallback(const SimpleGraph& graph, Algorithm algorithm, std::uint64_t seed,
                                   int max_retries = 8, TraceSink* trace = nullptr);

}  // namespace kempe
