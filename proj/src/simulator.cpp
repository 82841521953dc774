#include "vcsim/simulator.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace vcsim {
namespace {

struct Departure {
    double time;
    std::int64_t vc_id;
    bool operator>(const Departure& o) const {
        if (time != o.time) return time > o.time;
        return vc_id > o.vc_id;
    }
};

struct ActiveVC {
    Placement placement;
    bool scored;
    Rational slots_credit;  // n*c in 1/8-VM units
    Rational bw_credit;     // n*b in 1/8-VM units
};

}  // namespace

std::string to_string(EmbedAlgo algo) {
    return algo == EmbedAlgo::oktopus ? "oktopus" : "tetris";
}

std::string to_string(PricingScheme scheme) {
    switch (scheme) {
        case PricingScheme::ideal: return "ideal";
        case PricingScheme::drp: return "drp";
        default: return "dsp";
    }
}

MetricsReport run(const Scenario& scenario, const std::vector<VCRequest>& stream) {
    FatTree tree = build(scenario.tree_spec);
    MetricsReport report;
    report.workload = scenario.workload;
    if (stream.empty()) return report;

    std::priority_queue<Departure, std::vector<Departure>, std::greater<>> departures;
    std::unordered_map<std::int64_t, ActiveVC> active;

    const int warmup = scenario.workload.warmup_requests;
    const bool any_scored = warmup < static_cast<int>(stream.size());
    const double window_start = any_scored ? stream[warmup].arrival : 0.0;
    const double window_end = stream.back().arrival;

    Rational slots_sum(0), bw_sum(0);  // scored requests only
    double slots_integral = 0.0, bw_integral = 0.0;
    double clock = window_start;
    bool in_window = false;

    auto advance_to = [&](double t) {
        if (!any_scored || t < window_start) return;
        if (!in_window) {
            in_window = true;
            clock = window_start;
        }
        const double upto = std::min(t, window_end);
        if (upto > clock) {
            slots_integral += to_double(slots_sum) * (upto - clock);
            bw_integral += to_double(bw_sum) * (upto - clock);
            clock = upto;
        }
    };

    auto sample = [&](double t) {
        if (!in_window || t > window_end) return;
        report.series.push_back({t, to_double(slots_sum), to_double(bw_sum), report.accepted,
                                 report.rejected, report.revenue});
    };

    auto process_departure = [&](const Departure& d) {
        advance_to(d.time);
        auto it = active.find(d.vc_id);
        if (it == active.end()) throw std::runtime_error("departure of unknown VC");
        tree.release(it->second.placement);
        if (it->second.scored) {
            slots_sum -= it->second.slots_credit;
            bw_sum -= it->second.bw_credit;
        }
        active.erase(it);
        sample(d.time);
    };

    for (std::size_t i = 0; i < stream.size(); ++i) {
        const VCRequest& req = stream[i];
        while (!departures.empty() && departures.top().time <= req.arrival) {
            process_departure(departures.top());
            departures.pop();
        }
        advance_to(req.arrival);
        const bool scored = static_cast<int>(i) >= warmup;

        // DRP embeds the upgraded template demand; the metric credit stays
        // with the original request.
        VCRequest embed_req = req;
        bool priceable = true;
        if (scenario.scheme == PricingScheme::drp) {
            if (auto t = drp_upgrade(req, scenario.templates)) {
                embed_req.c = *t;
                embed_req.b = *t;
            } else {
                priceable = false;
            }
        }

        std::optional<Placement> placement;
        if (priceable) {
            placement = scenario.embedder == EmbedAlgo::oktopus
                            ? oktopus::embed(tree, embed_req)
                            : tetris::embed(tree, embed_req);
        }

        if (placement) {
            tree.reserve(*placement);
            Rational price(0);
            switch (scenario.scheme) {
                case PricingScheme::ideal:
                    price = price_ideal(req, scenario.prices).total();
                    break;
                case PricingScheme::drp:
                    price = price_drp(req, scenario.prices, scenario.templates)->total();
                    break;
                case PricingScheme::dsp:
                    price = price_dsp(req, scenario.prices, scenario.lambdas).total();
                    break;
            }
            ActiveVC vc;
            vc.placement = *placement;
            vc.scored = scored;
            vc.slots_credit = req.c * req.n * 8;
            vc.bw_credit = req.b * req.n * 8;
            active.emplace(req.id, vc);
            departures.push({req.arrival + req.duration, req.id});
            if (scored) {
                slots_sum += vc.slots_credit;
                bw_sum += vc.bw_credit;
                report.accepted += 1;
                report.revenue += to_double(price) * req.duration;
            }
        } else if (scored) {
            report.rejected += 1;
        }
        sample(req.arrival);
    }

    // Drain remaining departures; afterwards the substrate must be back to
    // full capacity or the bookkeeping is broken.
    while (!departures.empty()) {
        process_departure(departures.top());
        departures.pop();
    }
    if (!tree.at_full_capacity())
        throw std::runtime_error("residuals do not restore to capacities after drain");

    const double window = window_end - window_start;
    if (window > 0.0) {
        report.mean_slots_sum = slots_integral / window;
        report.mean_bw_sum = bw_integral / window;
    }
    return report;
}

MetricsReport run(const Scenario& scenario) {
    return run(scenario, generate(scenario.workload, scenario.tree_spec));
}

double ComparisonTable::relative_difference(std::size_t i, std::size_t j, int dim) const {
    const double a = dim == 0 ? reports[i].mean_slots_sum : reports[i].mean_bw_sum;
    const double b = dim == 0 ? reports[j].mean_slots_sum : reports[j].mean_bw_sum;
    if (b == 0.0) throw std::domain_error("relative difference against zero baseline");
    return (a - b) / b;
}

ComparisonTable compare(const std::vector<Scenario>& scenarios) {
    if (scenarios.empty()) throw std::invalid_argument("compare: no scenarios");
    for (const auto& s : scenarios) {
        if (!(s.workload == scenarios.front().workload) ||
            !(s.tree_spec.host_count() == scenarios.front().tree_spec.host_count()))
            throw std::invalid_argument("compare: scenarios must share workload");
    }
    const auto stream = generate(scenarios.front().workload, scenarios.front().tree_spec);
    ComparisonTable table;
    table.scenarios = scenarios;
    for (const auto& s : scenarios) table.reports.push_back(run(s, stream));
    return table;
}

}  // namespace vcsim
