#pragma once

#include "vcsim/request.hpp"
#include "vcsim/topology.hpp"

#include <vector>

namespace vcsim {
namespace hose {

/// Worst-case hose-model bandwidth a VC needs on the uplink of a subtree
/// holding k of its n VMs: min(k, n-k) * b. Zero when the VC is fully inside
/// or fully outside the subtree.
Rational uplink_demand(int k, int n, const Rational& b);

/// Builds the full Placement for a set of per-host counts: applies
/// uplink_demand at every host, rack, and pod cut.
Placement make_placement(std::int64_t vc_id, const std::vector<std::pair<int, int>>& host_counts,
                         const VCRequest& req, const FatTree& tree);

struct Violation {
    enum class Element { host_compute, host_link, rack_uplink, pod_uplink };
    Element element;
    int index;
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool feasible() const { return violations.empty(); }
};

/// Checks a placement against the tree's current residuals: per-host compute
/// and the hose demand on every touched uplink.
ValidationResult validate(const Placement& p, const VCRequest& req, const FatTree& tree);

}  // namespace hose
}  // namespace vcsim
