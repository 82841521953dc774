#pragma once

#include "vcsim/rational.hpp"

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace vcsim {

/// Three-layer fat-tree parameters. Capacities are normalized: one host has
/// compute 1 and an access link of capacity 1.
struct FatTreeSpec {
    int pods = 1;
    int racks_per_pod = 1;
    int hosts_per_rack = 1;
    Rational host_compute_capacity{1};
    Rational host_link_capacity{1};
    Rational oversub_tor_agg{1};   // >= 1
    Rational oversub_agg_core{1};  // >= 1

    int host_count() const { return pods * racks_per_pod * hosts_per_rack; }
    int rack_count() const { return pods * racks_per_pod; }

    Rational total_compute() const { return host_compute_capacity * host_count(); }
    Rational rack_uplink_capacity() const {
        return host_link_capacity * hosts_per_rack / oversub_tor_agg;
    }
    Rational pod_uplink_capacity() const {
        return rack_uplink_capacity() * racks_per_pod / oversub_agg_core;
    }

    bool valid() const {
        return pods >= 1 && racks_per_pod >= 1 && hosts_per_rack >= 1 &&
               host_compute_capacity > Rational(0) && host_link_capacity > Rational(0) &&
               oversub_tor_agg >= Rational(1) && oversub_agg_core >= Rational(1);
    }
};

/// Per-host VM counts of one embedded VC plus the bandwidth it reserves on
/// each uplink. Demands are derived once from the hose formula (see hose.hpp)
/// and carried along so release restores exactly what reserve took.
struct Placement {
    std::int64_t vc_id = 0;
    std::vector<std::pair<int, int>> host_counts;           // (host index, count >= 1)
    std::vector<std::pair<int, Rational>> host_demands;     // access-link bandwidth
    std::vector<std::pair<int, Rational>> rack_demands;     // ToR->agg uplink
    std::vector<std::pair<int, Rational>> pod_demands;      // agg->core uplink
    Rational per_vm_compute;

    int total_vms() const {
        int s = 0;
        for (const auto& [h, k] : host_counts) s += k;
        return s;
    }
};

/// Residual-capacity state of the substrate. One simulation owns one tree.
class FatTree {
public:
    explicit FatTree(const FatTreeSpec& spec);

    const FatTreeSpec& spec() const { return spec_; }

    const Rational& host_compute_residual(int host) const { return host_compute_[host]; }
    const Rational& host_bw_residual(int host) const { return host_bw_[host]; }
    const Rational& rack_bw_residual(int rack) const { return rack_bw_[rack]; }
    const Rational& pod_bw_residual(int pod) const { return pod_bw_[pod]; }

    int rack_of_host(int host) const { return host / spec_.hosts_per_rack; }
    int pod_of_host(int host) const { return host / (spec_.hosts_per_rack * spec_.racks_per_pod); }
    int pod_of_rack(int rack) const { return rack / spec_.racks_per_pod; }

    /// All-or-nothing: throws std::runtime_error and leaves the tree
    /// unchanged if the placement does not fit the current residuals or the
    /// VC is already reserved.
    void reserve(const Placement& p);

    /// Inverse of reserve. Throws on release of a VC that is not active.
    void release(const Placement& p);

    bool fits(const Placement& p) const;
    bool at_full_capacity() const;  // true iff no VC occupies anything

private:
    FatTreeSpec spec_;
    std::vector<Rational> host_compute_;
    std::vector<Rational> host_bw_;
    std::vector<Rational> rack_bw_;
    std::vector<Rational> pod_bw_;
    std::unordered_set<std::int64_t> active_;
};

FatTree build(const FatTreeSpec& spec);

}  // namespace vcsim
