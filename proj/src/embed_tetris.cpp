#include "vcsim/embed.hpp"

#include <algorithm>
#include <vector>

namespace vcsim {
namespace tetris {
namespace {

struct Subtree {
    int first_host;
    int host_count;
};

std::vector<Subtree> candidates(const FatTreeSpec& spec, int level) {
    std::vector<Subtree> out;
    switch (level) {
        case 0:
            for (int h = 0; h < spec.host_count(); ++h) out.push_back({h, 1});
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
            out.push_back({0, spec.host_count()});
            break;
    }
    return out;
}

// Greedily place up to max_vms VMs on the best-scoring host of the window
// [first_i, first_i + window_count), one VM at a time; ties go to the lowest
// host index. Returns the number actually placed.
int greedy_fill(const FatTree& tree, const VCRequest& req, const Subtree& sub,
                std::vector<int>& counts, int first_i, int window_count, int max_vms) {
    int placed = 0;
    while (placed < max_vms) {
        int best_i = -1;
        Rational best_score;
        for (int i = first_i; i < first_i + window_count; ++i) {
            const auto s = score(tree, sub.first_host + i, req, counts[i]);
            if (s && (best_i < 0 || *s > best_score)) {
                best_i = i;
                best_score = *s;
            }
        }
        if (best_i < 0) break;
        ++counts[best_i];
        ++placed;
    }
    return placed;
}

std::optional<Placement> try_candidate(const FatTree& tree, const VCRequest& req,
                                       const Subtree& sub) {
    std::vector<int> counts(sub.host_count, 0);
    int placed = 0;

    // Host anchor: if some host can hold more than half the VC, collocating
    // there earns the hose discount min(k, n-k); grab the largest such block.
    {
        int best_i = -1, best_m = 0;
        for (int i = 0; i < sub.host_count; ++i) {
            const int h = sub.first_host + i;
            for (int m = req.n; 2 * m > req.n && m > best_m; --m) {
                if (req.c * m <= tree.host_compute_residual(h) &&
                    hose::uplink_demand(m, req.n, req.b) <= tree.host_bw_residual(h)) {
                    best_i = i;
                    best_m = m;
                    break;
                }
            }
            if (best_m == req.n) break;
        }
        if (best_i >= 0) {
            counts[best_i] = best_m;
            placed = best_m;
        }
    }

    // Rack anchor: at pod/root level, concentrating more than half the VC in
    // one rack earns the same discount on that rack's uplink.
    const int hpr = tree.spec().hosts_per_rack;
    if (placed == 0 && sub.host_count > hpr) {
        const int windows = sub.host_count / hpr;
        int best_w = -1, best_cap = 0;
        for (int w = 0; w < windows; ++w) {
            std::vector<int> scratch(sub.host_count, 0);
            const int cap = greedy_fill(tree, req, sub, scratch, w * hpr, hpr, req.n);
            if (cap > best_cap) {
                best_w = w;
                best_cap = cap;
            }
        }
        if (best_w >= 0 && 2 * best_cap > req.n)
            placed = greedy_fill(tree, req, sub, counts, best_w * hpr, hpr, best_cap);
    }

    if (placed < req.n &&
        greedy_fill(tree, req, sub, counts, 0, sub.host_count, req.n - placed) !=
            req.n - placed)
        return std::nullopt;

    std::vector<std::pair<int, int>> host_counts;
    for (int i = 0; i < sub.host_count; ++i)
        if (counts[i] > 0) host_counts.emplace_back(sub.first_host + i, counts[i]);
    Placement p = hose::make_placement(req.id, host_counts, req, tree);
    // The score only sees access-level bandwidth; this gate covers the rack
    // and pod uplinks.
    if (!hose::validate(p, req, tree).feasible()) return std::nullopt;
    return p;
}

}  // namespace

std::optional<Rational> score(const FatTree& tree, int host, const VCRequest& req,
                              int current_k) {
    const int k = current_k + 1;
    const Rational compute_left = tree.host_compute_residual(host) - req.c * k;
    const Rational bw_left =
        tree.host_bw_residual(host) - hose::uplink_demand(k, req.n, req.b);
    if (compute_left < Rational(0) || bw_left < Rational(0)) return std::nullopt;
    const Rational cf = compute_left / tree.spec().host_compute_capacity;
    const Rational bf = bw_left / tree.spec().host_link_capacity;
    const Rational hi = std::max(cf, bf);
    if (hi == Rational(0)) return Rational(1);  // both residuals exhausted: perfectly balanced
    return std::min(cf, bf) / hi;
}

std::optional<Placement> embed(const FatTree& tree, const VCRequest& req) {
    for (int level = 0; level < 4; ++level) {
        for (const auto& sub : candidates(tree.spec(), level)) {
            if (auto p = try_candidate(tree, req, sub)) return p;
        }
    }
    return oktopus::embed(tree, req);
}

}  // namespace tetris
}  // namespace vcsim
