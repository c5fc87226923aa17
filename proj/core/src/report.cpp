#include "kempe/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kempe {

std::string emit_report_json(const RunReport& report) {
    nlohmann::json j;
    j["verdict"] = verdict_name(report.verdict);
    j["palette"] = report.palette;
    j["seed"] = report.seed;
    if (report.verdict == Verdict::proper) j["coloring"] = report.coloring;
    j["counters"] = {{"walks", report.counters.walks},
                     {"exchanges", report.counters.exchanges},
                     {"inversions", report.counters.inversions},
                     {"deflections", report.counters.deflections},
                     {"eliminated", report.counters.eliminated}};
    j["wall_time_s"] = 0.0;
    return j.dump(2) + "\n";
}

std::string emit_report_text(const RunReport& report) {
    std::ostringstream out;
    out << "verdict:     " << verdict_name(report.verdict) << "\n";
    out << "palette:     " << report.palette << "\n";
    out << "seed:        " << report.seed << "\n";
    out << "walks:       " << report.counters.walks << "\n";
    out << "exchanges:   " << report.counters.exchanges << "\n";
    out << "inversions:  " << report.counters.inversions << "\n";
    out << "deflections: " << report.counters.deflections << "\n";
    out << "eliminated:  " << report.counters.eliminated << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", report.wall_time_s);
    out << "wall_time_s: " << buf << "\n";
    if (report.verdict == Verdict::proper) {
        out << "coloring:   ";
        for (std::size_t e = 0; e < report.coloring.size(); ++e) {
            if (e % 16 == 0) out << "\n  ";
            out << report.coloring[e] << " ";
        }
        out << "\n";
    }
    return out.str();
}

RunReport parse_report_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("bad report JSON: ") + e.what());
    }
    RunReport report;
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "proper")
        report.verdict = Verdict::proper;
    else if (verdict == "canonical")
        report.verdict = Verdict::canonical;
    else if (verdict == "chromatic_claim_delta_plus_1")
        report.verdict = Verdict::chromatic_claim;
    else
        throw std::runtime_error("unknown verdict '" + verdict + "'");
    report.palette = j.at("palette").get<int>();
    report.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("coloring")) report.coloring = j["coloring"].get<std::vector<Color>>();
    if (j.contains("counters")) {
        const auto& c = j["counters"];
        report.counters.walks = c.value("walks", 0ull);
        report.counters.exchanges = c.value("exchanges", 0ull);
        report.counters.inversions = c.value("inversions", 0ull);
        report.counters.deflections = c.value("deflections", 0ull);
        report.counters.eliminated = c.value("eliminated", 0ull);
    }
    report.wall_time_s = j.value("wall_time_s", 0.0);
    return report;
}

RunReport parse_report_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_report_json(in);
}

namespace {
const char* trace_kind_name(TraceEvent::Kind k) {
    switch (k) {
        case TraceEvent::Kind::exchange: return "exchange";
        case TraceEvent::Kind::dontcare: return "dontcare";
        case TraceEvent::Kind::invert: return "invert";
        case TraceEvent::Kind::classify: return "classify";
        case TraceEvent::Kind::deflect: return "deflect";
        case TraceEvent::Kind::eliminate: return "eliminate";
        case TraceEvent::Kind::budget: return "budget";
        case TraceEvent::Kind::select: return "select";
    }
    return "?";
}
}  // namespace

std::string format_trace_event(const TraceEvent& event) {
    std::ostringstream out;
    out << "ev=" << trace_kind_name(event.kind);
    if (event.edge != kNoEdge) out << " edge=" << event.edge;
    switch (event.kind) {
        case TraceEvent::Kind::exchange:
        case TraceEvent::Kind::dontcare:
        case TraceEvent::Kind::invert:
        case TraceEvent::Kind::eliminate:
        case TraceEvent::Kind::classify:
            out << " before=" << event.before.first << ":" << event.before.second;
            out << " after=" << event.after.first << ":" << event.after.second;
            break;
        case TraceEvent::Kind::budget:
            out << " n_i=" << event.a << " k=" << event.b << " r=" << event.c;
            break;
        default:
            break;
    }
    if (event.detail[0] != '\0') out << " case=" << event.detail;
    return out.str();
}

void StreamTraceSink::on_event(const TraceEvent& event) {
    (*out_) << format_trace_event(event) << "\n";
}

}  // namespace kempe
