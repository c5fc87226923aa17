#pragma once

#include <iosfwd>
#include <string>

#include "kempe/solver.hpp"

namespace kempe {

// JSON report with a fixed schema: coloring (edge-id indexed array, present
// only for proper verdicts), counters, palette, seed, verdict, wall_time_s.
// Byte-identical for identical runs: wall_time_s is pinned to 0 here so that
// equal (graph, algorithm, seed) inputs serialize to equal bytes; measured
// time is reported by the text format and the bench CSV instead.
std::string emit_report_json(const RunReport& report);

// Human-readable summary, including the measured wall time.
std::string emit_report_text(const RunReport& report);

RunReport parse_report_json(std::istream& in);  // throws std::runtime_error on bad input
RunReport parse_report_json_file(const std::string& path);

// One trace event per line, stable key=value fields.
std::string format_trace_event(const TraceEvent& event);

// Sink that formats every event onto a stream.
class StreamTraceSink final : public TraceSink {
public:
    explicit StreamTraceSink(std::ostream& out) : out_(&out) {}
    void on_event(const TraceEvent& event) override;

private:
    std::ostream* out_;
};

}  // namespace kempe
