#pragma once

#include <iosfwd>
#include <vector>

#include "kempe/generate.hpp"
#include "kempe/solver.hpp"

namespace kempe {

struct BenchRow {
    InstanceSpec spec;
    std::uint64_t solve_seed = 0;
    Verdict verdict = Verdict::proper;
    int colors = 0;  // palette on success, 0 otherwise
    std::uint64_t walks = 0;
    std::uint64_t exchanges = 0;
    double time_s = 0.0;
};

struct BenchOptions {
    Algorithm algorithm = Algorithm::wst;
    int repetitions = 1;
    std::uint64_t seed = 0;  // master solve seed; per-run seeds are derived
    int jobs = 1;            // worker threads; rows keep spec/rep order regardless
};

// Solve every spec `repetitions` times. Each proper run is re-checked by the
// independent verifier on the serialized coloring before its row is emitted;
// a verifier failure aborts with std::logic_error.
std::vector<BenchRow> run_bench(const std::vector<InstanceSpec>& specs, const BenchOptions& options);

inline constexpr const char* kBenchCsvHeader = "spec,seed,verdict,colors,walks,exchanges,time_s";
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Aggregated per-spec digest (success count and time quantiles), the
// human-facing companion of the CSV.
void write_bench_summary(std::ostream& out, const std::vector<BenchRow>& rows);

std::vector<InstanceSpec> read_spec_file(std::istream& in);

}  // namespace kempe
