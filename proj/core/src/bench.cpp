#include "kempe/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kempe/configuration.hpp"
#include "kempe/report.hpp"

namespace kempe {

namespace {

// Round-trip the coloring through the JSON report and verify it against a
// fresh configuration, trusting nothing the solver cached.
void verify_row(const SimpleGraph& graph, const RunReport& report) {
    std::istringstream ss(emit_report_json(report));
    const RunReport reloaded = parse_report_json(ss);
    if (reloaded.coloring.size() != static_cast<std::size_t>(graph.edge_count()))
        throw std::logic_error("bench verifier: coloring size mismatch");
    std::vector<ComplexColor> colors(reloaded.coloring.size());
    for (std::size_t e = 0; e < colors.size(); ++e)
        colors[e] = {reloaded.coloring[e], reloaded.coloring[e]};
    Configuration check(graph, reloaded.palette, std::move(colors));
    if (!is_proper(check)) throw std::logic_error("bench verifier: reported coloring is not proper");
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<InstanceSpec>& specs, const BenchOptions& options) {
    struct Task {
        std::size_t spec_index;
        int rep;
    };
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < specs.size(); ++s)
        for (int r = 0; r < options.repetitions; ++r) tasks.push_back({s, r});

    std::vector<BenchRow> rows(tasks.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size() || failed.load()) break;
            const Task& task = tasks[i];
            const InstanceSpec& spec = specs[task.spec_index];
            try {
                const SimpleGraph graph = generate_instance(spec);
                const std::uint64_t solve_seed =
                    derive_seed(options.seed, (static_cast<std::uint64_t>(task.spec_index) << 20) +
                                                  static_cast<std::uint64_t>(task.rep));
                const auto t0 = std::chrono::steady_clock::now();
                const RunReport report = solve(graph, options.algorithm, graph.max_degree(), solve_seed);
                const double elapsed =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (report.verdict == Verdict::proper) verify_row(graph, report);

                BenchRow& row = rows[i];
                row.spec = spec;
                row.solve_seed = solve_seed;
                row.verdict = report.verdict;
                row.colors = report.verdict == Verdict::proper ? report.palette : 0;
                row.walks = report.counters.walks;
                row.exchanges = report.counters.exchanges;
                row.time_s = elapsed;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure = spec.to_string() + ": " + e.what();
                failed.store(true);
            }
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw std::runtime_error("bench run failed: " + failure);
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kBenchCsvHeader << "\n";
    for (const BenchRow& row : rows) {
        char time_buf[64];
        std::snprintf(time_buf, sizeof time_buf, "%.6f", row.time_s);
        out << row.spec.to_string() << "," << row.solve_seed << "," << verdict_name(row.verdict) << ","
            << row.colors << "," << row.walks << "," << row.exchanges << "," << time_buf << "\n";
    }
}

void write_bench_summary(std::ostream& out, const std::vector<BenchRow>& rows) {
    std::map<std::string, std::vector<const BenchRow*>> by_spec;
    for (const BenchRow& row : rows) by_spec[row.spec.to_string()].push_back(&row);
    for (const auto& [name, group] : by_spec) {
        std::vector<double> times;
        int successes = 0;
        int colors = 0;
        for (const BenchRow* row : group) {
            times.push_back(row->time_s);
            if (row->verdict == Verdict::proper) {
                ++successes;
                colors = row->colors;
            }
        }
        std::sort(times.begin(), times.end());
        const auto quantile = [&](double q) {
            const std::size_t idx = std::min(times.size() - 1,
                                             static_cast<std::size_t>(std::floor(q * static_cast<double>(times.size()))));
            return times[idx];
        };
        char buf[160];
        std::snprintf(buf, sizeof buf, "min=%.6f median=%.6f p95=%.6f max=%.6f", times.front(),
                      quantile(0.5), quantile(0.95), times.back());
        out << name << ": " << successes << "/" << group.size() << " proper";
        if (successes > 0) out << " with " << colors << " colors";
        out << ", " << buf << "\n";
    }
}

std::vector<InstanceSpec> read_spec_file(std::istream& in) {
    std::vector<InstanceSpec> specs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            specs.push_back(InstanceSpec::parse(line));
        } catch (const std::exception& e) {
            throw std::runtime_error("spec file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return specs;
}

}  // namespace kempe
