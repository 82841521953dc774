#pragma once

#include "vcsim/request.hpp"
#include "vcsim/topology.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace vcsim {

struct WorkloadConfig {
    double mean_n = 49.0;                       // expected VC size
    std::vector<Rational> demand_values =      // candidate values for c and b
        {Rational(1, 8), Rational(1, 4), Rational(1, 2)};
    double target_load = 0.8;                   // fraction of total compute
    double mean_duration = 1.0;
    int total_requests = 80000;
    int warmup_requests = 10000;
    std::uint64_t seed = 1;

    bool valid() const {
        return mean_n >= 1.0 && !demand_values.empty() && target_load > 0.0 &&
               target_load <= 1.0 && mean_duration > 0.0 && total_requests > 0 &&
               warmup_requests >= 0 && warmup_requests < total_requests;
    }

    bool operator==(const WorkloadConfig&) const = default;
};

/// Poisson arrival rate inducing the target compute load:
/// rate = load * capacity / (mean_duration * E[n*c]).
double arrival_rate_for(const WorkloadConfig& config, const FatTreeSpec& tree_spec);

/// Materializes the full request stream: exponential inter-arrivals at the
/// computed rate, exponential durations, geometric sizes with the given
/// mean (minimum 1), c and b i.i.d. uniform over demand_values.
/// Deterministic given the seed; arrival times strictly increasing.
std::vector<VCRequest> generate(const WorkloadConfig& config, const FatTreeSpec& tree_spec);

/// One request per line: id arrival duration n c b. Arrival and duration are
/// printed so they round-trip bit-exactly; c and b as exact fractions.
void dump_stream(const std::vector<VCRequest>& stream, std::ostream& out);
std::vector<VCRequest> load_stream(std::istream& in);

}  // namespace vcsim
