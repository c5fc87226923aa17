#include "kempe/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace kempe {

SimpleGraph parse_dimacs(std::istream& in, DimacsWarnings* warnings) {
    DimacsWarnings local;
    DimacsWarnings& warn = warnings != nullptr ? *warnings : local;

    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m_declared = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::unordered_set<std::uint64_t> seen;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(line_no, "repeated problem header");
            std::string format;
            if (!(ss >> format >> n >> m_declared)) throw ParseError(line_no, "malformed problem header");
            if (format != "edge" && format != "edges" && format != "col")
                throw ParseError(line_no, "unsupported problem format '" + format + "'");
            if (n < 0 || m_declared < 0) throw ParseError(line_no, "negative size in header");
            have_header = true;
            edges.reserve(static_cast<std::size_t>(m_declared));
            continue;
        }
        if (tag == "e") {
            if (!have_header) throw ParseError(line_no, "edge before problem header");
            long long u = 0, v = 0;
            if (!(ss >> u >> v)) throw ParseError(line_no, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex out of range");
            if (u == v) throw ParseError(line_no, "self-loop rejected");
            const VertexId a = static_cast<VertexId>(std::min(u, v) - 1);
            const VertexId b = static_cast<VertexId>(std::max(u, v) - 1);
            const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
            if (!seen.insert(key).second) {
                ++warn.duplicate_edges;
                continue;
            }
            edges.emplace_back(a, b);
            continue;
        }
        // Benchmark files carry extensions like `n` lines; skip them.
        ++warn.ignored_lines;
    }
    if (!have_header) throw ParseError(line_no, "missing problem header");
    return SimpleGraph(static_cast<VertexId>(n), edges);
}

SimpleGraph parse_dimacs_file(const std::string& path, DimacsWarnings* warnings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in, warnings);
}

void write_dimacs(std::ostream& out, const SimpleGraph& graph, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream ss(comment);
        std::string line;
        while (std::getline(ss, line)) out << "c " << line << "\n";
    }
    out << "p edge " << graph.vertex_count() << " " << graph.edge_count() << "\n";
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const auto [lo, hi] = graph.endpoints(e);
        out << "e " << lo + 1 << " " << hi + 1 << "\n";
    }
}

}  // namespace kempe
