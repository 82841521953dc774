#include "vcsim/hose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vcsim {
namespace hose {

Rational uplink_demand(int k, int n, const Rational& b) {
    if (k < 0 || k > n) throw std::invalid_argument("uplink_demand: k out of [0,n]");
    return b * std::min(k, n - k);
}

Placement make_placement(std::int64_t vc_id, const std::vector<std::pair<int, int>>& host_counts,
                         const VCRequest& req, const FatTree& tree) {
    Placement p;
    p.vc_id = vc_id;
    p.per_vm_compute = req.c;
    p.host_counts = host_counts;
    std::sort(p.host_counts.begin(), p.host_counts.end());
    // merge duplicate host entries
    std::vector<std::pair<int, int>> merged;
    for (const auto& [h, k] : p.host_counts) {
        if (!merged.empty() && merged.back().first == h)
            merged.back().second += k;
        else
            merged.emplace_back(h, k);
    }
    p.host_counts = std::move(merged);

    std::map<int, int> rack_counts;
    std::map<int, int> pod_counts;
    int total = 0;
    for (const auto& [h, k] : p.host_counts) {
        if (k < 1) throw std::invalid_argument("placement count must be >= 1");
        total += k;
        rack_counts[tree.rack_of_host(h)] += k;
        pod_counts[tree.pod_of_host(h)] += k;
    }
    if (total != req.n) throw std::invalid_argument("placement counts must sum to n");

    for (const auto& [h, k] : p.host_counts)
        p.host_demands.emplace_back(h, uplink_demand(k, req.n, req.b));
    for (const auto& [r, k] : rack_counts)
        p.rack_demands.emplace_back(r, uplink_demand(k, req.n, req.b));
    for (const auto& [pd, k] : pod_counts)
        p.pod_demands.emplace_back(pd, uplink_demand(k, req.n, req.b));
    return p;
}

ValidationResult validate(const Placement& p, const VCRequest& req, const FatTree& tree) {
    ValidationResult result;
    for (const auto& [h, k] : p.host_counts) {
        if (tree.host_compute_residual(h) < req.c * k)
            result.violations.push_back({Violation::Element::host_compute, h});
    }
    for (const auto& [h, d] : p.host_demands) {
        if (tree.host_bw_residual(h) < d)
            result.violations.push_back({Violation::Element::host_link, h});
    }
    for (const auto& [r, d] : p.rack_demands) {
        if (tree.rack_bw_residual(r) < d)
            result.violations.push_back({Violation::Element::rack_uplink, r});
    }
    for (const auto& [pd, d] : p.pod_demands) {
        if (tree.pod_bw_residual(pd) < d)
            result.violations.push_back({Violation::Element::pod_uplink, pd});
    }
    return result;
}

}  // namespace hose
}  // namespace vcsim
