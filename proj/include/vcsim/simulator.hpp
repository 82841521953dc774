#pragma once

#include "vcsim/embed.hpp"
#include "vcsim/pricing.hpp"
#include "vcsim/workload.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vcsim {

enum class EmbedAlgo { oktopus, tetris };

std::string to_string(EmbedAlgo algo);
std::string to_string(PricingScheme scheme);

/// One simulation cell: a substrate, a workload, and the embedder/pricing
/// combination under study.
struct Scenario {
    FatTreeSpec tree_spec;
    WorkloadConfig workload;
    EmbedAlgo embedder = EmbedAlgo::oktopus;
    PricingScheme scheme = PricingScheme::dsp;
    UnitPrices prices;
    LambdaParams lambdas;
    TemplateSet templates = TemplateSet::paper_defaults();
};

struct MetricsSample {
    double time;
    double slots_sum;  // units of 1/8 VM
    double bw_sum;     // same units
    std::int64_t accepted;
    std::int64_t rejected;
    double revenue;
};

struct MetricsReport {
    double mean_slots_sum = 0.0;
    double mean_bw_sum = 0.0;
    std::int64_t accepted = 0;
    std::int64_t rejected = 0;
    double revenue = 0.0;
    std::vector<MetricsSample> series;  // one sample per event in the scored window
    WorkloadConfig workload;            // provenance, checked by compare()
};

/// Runs the discrete-event loop over the given request stream: each arrival
/// is embedded or rejected and priced, each departure releases exactly what
/// was reserved. Requests before the warmup cutoff occupy resources but do
/// not score. Aborts (throws) on any internal accounting inconsistency.
MetricsReport run(const Scenario& scenario, const std::vector<VCRequest>& stream);

/// Convenience: generates the stream from scenario.workload first.
MetricsReport run(const Scenario& scenario);

struct ComparisonTable {
    std::vector<Scenario> scenarios;
    std::vector<MetricsReport> reports;

    /// (mean_i - mean_j) / mean_j for the slots (dim 0) or bandwidth (dim 1)
    /// resource sum.
    double relative_difference(std::size_t i, std::size_t j, int dim) const;
};

/// Paired comparison: all scenarios must share the same workload config
/// (same seed, same stream). Throws std::invalid_argument otherwise.
ComparisonTable compare(const std::vector<Scenario>& scenarios);

}  // namespace vcsim
