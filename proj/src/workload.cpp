#include "vcsim/workload.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace vcsim {

double arrival_rate_for(const WorkloadConfig& config, const FatTreeSpec& tree_spec) {
    double mean_demand = 0.0;
    for (const auto& v : config.demand_values) mean_demand += to_double(v);
    mean_demand /= static_cast<double>(config.demand_values.size());
    const double expected_compute = config.mean_n * mean_demand;
    return config.target_load * to_double(tree_spec.total_compute()) /
           (config.mean_duration * expected_compute);
}

std::vector<VCRequest> generate(const WorkloadConfig& config, const FatTreeSpec& tree_spec) {
    if (!config.valid()) throw std::invalid_argument("invalid WorkloadConfig");
    const double rate = arrival_rate_for(config, tree_spec);

    std::mt19937_64 rng(config.seed);
    std::exponential_distribution<double> interarrival(rate);
    std::exponential_distribution<double> duration(1.0 / config.mean_duration);
    // Geometric on {1,2,...} with the requested mean: 1 + failures at
    // success probability 1/mean_n.
    std::geometric_distribution<int> size_minus_one(1.0 / config.mean_n);
    std::uniform_int_distribution<std::size_t> demand_index(0, config.demand_values.size() - 1);

    std::vector<VCRequest> stream;
    stream.reserve(config.total_requests);
    double now = 0.0;
    for (int i = 0; i < config.total_requests; ++i) {
        double gap = interarrival(rng);
        while (gap <= 0.0) gap = interarrival(rng);  // keep arrivals strictly increasing
        now += gap;
        VCRequest req;
        req.id = i;
        req.arrival = now;
        req.duration = duration(rng);
        while (req.duration <= 0.0) req.duration = duration(rng);
        req.n = 1 + size_minus_one(rng);
        req.c = config.demand_values[demand_index(rng)];
        req.b = config.demand_values[demand_index(rng)];
        stream.push_back(req);
    }
    return stream;
}

void dump_stream(const std::vector<VCRequest>& stream, std::ostream& out) {
    char buf[128];
    for (const auto& req : stream) {
        std::snprintf(buf, sizeof(buf), "%lld %.17g %.17g %d %s %s\n",
                      static_cast<long long>(req.id), req.arrival, req.duration, req.n,
                      to_string(req.c).c_str(), to_string(req.b).c_str());
        out << buf;
    }
}

std::vector<VCRequest> load_stream(std::istream& in) {
    std::vector<VCRequest> stream;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        VCRequest req;
        std::string c_str, b_str;
        if (!(ls >> req.id >> req.arrival >> req.duration >> req.n >> c_str >> b_str))
            throw std::runtime_error("malformed stream line: '" + line + "'");
        req.c = parse_rational(c_str);
        req.b = parse_rational(b_str);
        if (!req.valid()) throw std::runtime_error("invalid request in stream: '" + line + "'");
        stream.push_back(req);
    }
    return stream;
}

}  // namespace vcsim
