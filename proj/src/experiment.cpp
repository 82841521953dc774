#include "vcsim/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace vcsim {
namespace {

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("VCSIM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::string sanitize(const std::string& s) {
    std::string out = s;
    for (auto& ch : out)
        if (ch == '/') ch = '-';
    return out;
}

std::string format_load(double load) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", load);
    return buf;
}

}  // namespace

std::vector<GridResult> run_grid(const ExperimentConfig& config, unsigned threads) {
    if (!config.valid()) throw std::invalid_argument("invalid ExperimentConfig");

    // A cell shares one request stream across all arms.
    struct Cell {
        Rational oversub;
        double load;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (const auto& o : config.oversub_factors)
        for (const double l : config.loads)
            for (const auto s : config.seeds) cells.push_back({o, l, s});

    std::vector<std::vector<GridResult>> per_cell(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                const Cell& cell = cells[i];
                Scenario base = config.base;
                base.tree_spec.oversub_tor_agg = cell.oversub;
                base.workload.target_load = cell.load;
                base.workload.seed = cell.seed;
                const auto stream = generate(base.workload, base.tree_spec);
                for (const Arm& arm : config.arms) {
                    Scenario s = base;
                    s.embedder = arm.embedder;
                    s.scheme = arm.scheme;
                    per_cell[i].push_back(
                        {arm, cell.oversub, cell.load, cell.seed, run(s, stream)});
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    const unsigned n = std::min<std::size_t>(worker_count(threads), cells.size());
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::vector<GridResult> results;
    for (auto& cell_results : per_cell)
        for (auto& r : cell_results) results.push_back(std::move(r));
    return results;
}

void write_timeseries_csv(const MetricsReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << "time,slots_sum,bw_sum,accepted,rejected,revenue\n";
    char buf[256];
    for (const auto& s : report.series) {
        std::snprintf(buf, sizeof(buf), "%.9f,%.6f,%.6f,%lld,%lld,%.2f\n", s.time, s.slots_sum,
                      s.bw_sum, static_cast<long long>(s.accepted),
                      static_cast<long long>(s.rejected), s.revenue);
        out << buf;
    }
}

void write_summary_csv(const ExperimentConfig& config, const std::vector<GridResult>& results,
                       const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << "scenario,embedder,scheme,oversub,load,seed,mean_slots_sum,mean_bw_sum,"
           "acceptance,revenue\n";
    char buf[512];
    for (const auto& r : results) {
        const auto total = r.report.accepted + r.report.rejected;
        const double acceptance =
            total > 0 ? static_cast<double>(r.report.accepted) / static_cast<double>(total) : 0.0;
        std::snprintf(buf, sizeof(buf), "%s,%s,%s,%s,%s,%llu,%.6f,%.6f,%.6f,%.2f\n",
                      config.name.c_str(), to_string(r.arm.embedder).c_str(),
                      to_string(r.arm.scheme).c_str(), to_string(r.oversub).c_str(),
                      format_load(r.load).c_str(), static_cast<unsigned long long>(r.seed),
                      r.report.mean_slots_sum, r.report.mean_bw_sum, acceptance,
                      r.report.revenue);
        out << buf;
    }
}

std::string timeseries_filename(const GridResult& r) {
    return "ts_" + to_string(r.arm.embedder) + "_" + to_string(r.arm.scheme) + "_o" +
           sanitize(to_string(r.oversub)) + "_l" + format_load(r.load) + "_s" +
           std::to_string(r.seed) + ".csv";
}

std::vector<GridResult> run_and_write(const ExperimentConfig& config,
                                      const std::filesystem::path& out_dir, unsigned threads) {
    std::filesystem::create_directories(out_dir);
    auto results = run_grid(config, threads);
    for (const auto& r : results) write_timeseries_csv(r.report, out_dir / timeseries_filename(r));
    write_summary_csv(config, results, out_dir / "summary.csv");
    return results;
}

}  // namespace vcsim
