#include "vcsim/embed.hpp"

#include <vector>

namespace vcsim {
namespace oktopus {
namespace {

struct Subtree {
    int first_host;
    int host_count;
};

// Candidate subtrees per level, fixed index order. The root level is the
// whole tree as a single candidate.
std::vector<Subtree> candidates(const FatTreeSpec& spec, int level) {
    std::vector<Subtree> out;
    const int hosts = spec.host_count();
    switch (level) {
        case 0:
            for (int h = 0; h < hosts; ++h) out.push_back({h, 1});
            break;
        case 1:
            for (int r = 0; r < spec.rack_count(); ++r)
                out.push_back({r * spec.hosts_per_rack, spec.hosts_per_rack});
            break;
        case 2:
            for (int p = 0; p < spec.pods; ++p)
                out.push_back({p * spec.racks_per_pod * spec.hosts_per_rack,
                               spec.racks_per_pod * spec.hosts_per_rack});
            break;
        default:
            out.push_back({0, hosts});
            break;
    }
    return out;
}

std::optional<Placement> try_candidate(const FatTree& tree, const VCRequest& req,
                                       const Subtree& sub) {
    std::vector<std::pair<int, int>> counts;
    int remaining = req.n;
    for (int h = sub.first_host; h < sub.first_host + sub.host_count && remaining > 0; ++h) {
        const int k = max_vms_on_host(tree, h, req, remaining);
        if (k > 0) {
            counts.emplace_back(h, k);
            remaining -= k;
        }
    }
    if (remaining > 0) return std::nullopt;
    Placement p = hose::make_placement(req.id, counts, req, tree);
    if (!hose::validate(p, req, tree).feasible()) return std::nullopt;
    return p;
}

}  // namespace

int max_vms_on_host(const FatTree& tree, int host, const VCRequest& req, int remaining) {
    const Rational& compute = tree.host_compute_residual(host);
    const Rational& bw = tree.host_bw_residual(host);
    // Full collocation needs zero uplink bandwidth, so k = n comes first;
    // otherwise take the largest k on the contiguous feasible prefix (the
    // {n-a..n} branch of the non-monotone demand is not searched).
    if (remaining == req.n && req.c * req.n <= compute) return req.n;
    int k = 0;
    while (k < remaining && req.c * (k + 1) <= compute &&
           hose::uplink_demand(k + 1, req.n, req.b) <= bw) {
        ++k;
    }
    return k;
}

std::optional<Placement> embed(const FatTree& tree, const VCRequest& req) {
    for (int level = 0; level < 4; ++level) {
        for (const auto& sub : candidates(tree.spec(), level)) {
            if (auto p = try_candidate(tree, req, sub)) return p;
        }
    }
    return std::nullopt;
}

}  // namespace oktopus
}  // namespace vcsim
