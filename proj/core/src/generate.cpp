#include "kempe/generate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "kempe/dimacs.hpp"
#include "kempe/rng.hpp"

namespace kempe {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(std::min(a, b))) << 32) |
           static_cast<std::uint32_t>(std::max(a, b));
}

}  // namespace

InstanceSpec InstanceSpec::parse(std::string_view line) {
    std::istringstream ss{std::string(line)};
    std::string kind_token;
    InstanceSpec spec;
    long long n = 0;
    unsigned long long seed = 0;
    if (!(ss >> kind_token >> n >> seed)) throw std::invalid_argument("spec line needs `kind n seed`");
    spec.n = static_cast<int>(n);
    spec.seed = seed;

    const auto colon = kind_token.find(':');
    const std::string head = kind_token.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : kind_token.substr(colon + 1);
    if (head == "regular") {
        spec.kind = Kind::regular;
        if (arg.empty()) throw std::invalid_argument("regular spec needs a degree, e.g. regular:4");
        spec.degree = std::stoi(arg);
    } else if (head == "gnm") {
        spec.kind = Kind::gnm;
        if (arg.empty()) throw std::invalid_argument("gnm spec needs a density, e.g. gnm:2");
        spec.density = std::stod(arg);
    } else if (head == "dimacs") {
        spec.kind = Kind::dimacs;
        if (arg.empty()) throw std::invalid_argument("dimacs spec needs a path, e.g. dimacs:graph.col");
        spec.path = arg;
    } else {
        throw std::invalid_argument("unknown instance kind '" + head + "'");
    }
    return spec;
}

std::string InstanceSpec::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::regular: out << "regular:" << degree; break;
        case Kind::gnm: out << "gnm:" << density; break;
        case Kind::dimacs: out << "dimacs:" << path; break;
    }
    out << "/" << n << "/" << seed;
    return out.str();
}

SimpleGraph random_regular_graph(int n, int degree, std::uint64_t seed) {
    if (n <= 0 || degree < 0) throw std::invalid_argument("regular graph needs n > 0 and degree >= 0");
    if (degree >= n) throw std::invalid_argument("degree must be below the vertex count");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw std::invalid_argument("n * degree must be even for a regular graph");

    const int max_rounds = 10000;
    Rng rng(derive_seed(seed, 0x4e47));
    std::vector<VertexId> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree));

    for (int round = 0; round < max_rounds; ++round) {
        stubs.clear();
        for (VertexId v = 0; v < n; ++v)
            for (int i = 0; i < degree; ++i) stubs.push_back(v);

        std::vector<std::pair<VertexId, VertexId>> edges;
        edges.reserve(stubs.size() / 2);
        std::unordered_set<std::uint64_t> used;
        bool stuck = false;

        // Pair stubs greedily, re-drawing partners that would create a loop
        // or a repeat; a dead end restarts the whole round.
        while (!stubs.empty()) {
            rng.shuffle(std::span<VertexId>(stubs));
            const std::size_t before = stubs.size();
            std::vector<VertexId> leftover;
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                const VertexId a = stubs[i], b = stubs[i + 1];
                if (a == b || used.contains(pair_key(a, b))) {
                    leftover.push_back(a);
                    leftover.push_back(b);
                    continue;
                }
                used.insert(pair_key(a, b));
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            stubs = std::move(leftover);
            if (stubs.size() == before) {
                // No pair could be placed; the residue is unmatchable.
                stuck = true;
                break;
            }
        }
        if (!stuck) return SimpleGraph(static_cast<VertexId>(n), edges);
    }
    throw std::runtime_error("regular graph generation did not converge");
}

SimpleGraph random_gnm_graph(int n, std::int64_t edge_count, std::uint64_t seed) {
    if (n < 0 || edge_count < 0) throw std::invalid_argument("gnm needs n >= 0 and m >= 0");
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (edge_count > max_edges) throw std::invalid_argument("edge count exceeds simple-graph capacity");

    Rng rng(derive_seed(seed, 0x474e4d));
    std::unordered_set<std::uint64_t> used;
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(edge_count));
    while (static_cast<std::int64_t>(edges.size()) < edge_count) {
        const VertexId a = static_cast<VertexId>(rng.bounded(static_cast<std::uint64_t>(n)));
        const VertexId b = static_cast<VertexId>(rng.bounded(static_cast<std::uint64_t>(n)));
        if (a == b) continue;
        if (!used.insert(pair_key(a, b)).second) continue;
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return SimpleGraph(static_cast<VertexId>(n), edges);
}

SimpleGraph random_bipartite_graph(int n, double density, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("bipartite graph needs at least two vertices");
    const VertexId left = n / 2;
    const VertexId right = static_cast<VertexId>(n) - left;
    std::int64_t edge_count = static_cast<std::int64_t>(density * n);
    edge_count = std::min(edge_count, static_cast<std::int64_t>(left) * right);

    Rng rng(derive_seed(seed, 0xb1b2));
    std::unordered_set<std::uint64_t> used;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (static_cast<std::int64_t>(edges.size()) < edge_count) {
        const VertexId a = static_cast<VertexId>(rng.bounded(static_cast<std::uint64_t>(left)));
        const VertexId b = left + static_cast<VertexId>(rng.bounded(static_cast<std::uint64_t>(right)));
        if (!used.insert(pair_key(a, b)).second) continue;
        edges.emplace_back(a, b);
    }
    return SimpleGraph(static_cast<VertexId>(n), edges);
}

SimpleGraph generate_instance(const InstanceSpec& spec) {
    switch (spec.kind) {
        case InstanceSpec::Kind::regular:
            return random_regular_graph(spec.n, spec.degree, spec.seed);
        case InstanceSpec::Kind::gnm:
            return random_gnm_graph(spec.n, static_cast<std::int64_t>(spec.density * spec.n), spec.seed);
        case InstanceSpec::Kind::dimacs:
            return parse_dimacs_file(spec.path);
    }
    throw std::logic_error("unreachable instance kind");
}

}  // namespace kempe
