#pragma once

#include "vcsim/simulator.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace vcsim {

struct Arm {
    EmbedAlgo embedder;
    PricingScheme scheme;
};

/// One Scenario template plus sweep axes. Each grid cell is a
/// (oversubscription, load, seed) triple; every arm within a cell runs on
/// the identical request stream so comparisons are paired.
struct ExperimentConfig {
    std::string name = "default";
    Scenario base;
    std::vector<Arm> arms = {{EmbedAlgo::oktopus, PricingScheme::drp},
                             {EmbedAlgo::oktopus, PricingScheme::dsp},
                             {EmbedAlgo::tetris, PricingScheme::dsp}};
    std::vector<Rational> oversub_factors = {Rational(4)};
    std::vector<double> loads = {0.8};
    std::vector<std::uint64_t> seeds = {1};

    bool valid() const {
        return !arms.empty() && !oversub_factors.empty() && !loads.empty() && !seeds.empty();
    }
};

struct GridResult {
    Arm arm;
    Rational oversub;
    double load;
    std::uint64_t seed;
    MetricsReport report;
};

/// Runs the whole grid. Cells run in parallel up to `threads` workers
/// (0 means use VCSIM_THREADS or the hardware default); results come back
/// in deterministic grid order regardless of scheduling.
std::vector<GridResult> run_grid(const ExperimentConfig& config, unsigned threads = 0);

/// Header: time,slots_sum,bw_sum,accepted,rejected,revenue
void write_timeseries_csv(const MetricsReport& report, const std::filesystem::path& path);

/// Header: scenario,embedder,scheme,oversub,load,seed,mean_slots_sum,
///         mean_bw_sum,acceptance,revenue
void write_summary_csv(const ExperimentConfig& config, const std::vector<GridResult>& results,
                       const std::filesystem::path& path);

std::string timeseries_filename(const GridResult& r);

/// Runs the grid and writes one time-series CSV per cell/arm plus
/// summary.csv into out_dir.
std::vector<GridResult> run_and_write(const ExperimentConfig& config,
                                      const std::filesystem::path& out_dir,
                                      unsigned threads = 0);

}  // namespace vcsim
