#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kempe/graph.hpp"

namespace kempe {

// One random-instance request. Spec-file lines and the CLI use the compact
// form `regular:4 100 7`, `gnm:2.5 200 1`, or `dimacs:path/to/file.col 0 0`.
struct InstanceSpec {
    enum class Kind { regular, gnm, dimacs };
    Kind kind = Kind::regular;
    int degree = 0;        // regular
    double density = 0.0;  // gnm: edges = floor(density * n)
    std::string path;      // dimacs
    int n = 0;
    std::uint64_t seed = 0;

    static InstanceSpec parse(std::string_view line);  // throws std::invalid_argument
    std::string to_string() const;
};

// Deterministic instance construction. Regular graphs come from seeded stub
// pairing that re-draws valid stubs until the matching completes and retries
// the round on a dead end (capped); gnm draws distinct vertex pairs until
// the edge budget is met. Throws std::invalid_argument on infeasible specs.
SimpleGraph generate_instance(const InstanceSpec& spec);

SimpleGraph random_regular_graph(int n, int degree, std::uint64_t seed);
SimpleGraph random_gnm_graph(int n, std::int64_t edge_count, std::uint64_t seed);

// Random bipartite graph on n vertices (halves as equal as possible) with
// floor(density * n) edges; used by the test fixtures.
SimpleGraph random_bipartite_graph(int n, double density, std::uint64_t seed);

}  // namespace kempe
