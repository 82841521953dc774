#include "vcsim/topology.hpp"

#include <stdexcept>

namespace vcsim {

FatTree::FatTree(const FatTreeSpec& spec) : spec_(spec) {
    if (!spec.valid()) throw std::invalid_argument("invalid FatTreeSpec");
    host_compute_.assign(spec.host_count(), spec.host_compute_capacity);
    host_bw_.assign(spec.host_count(), spec.host_link_capacity);
    rack_bw_.assign(spec.rack_count(), spec.rack_uplink_capacity());
    pod_bw_.assign(spec.pods, spec.pod_uplink_capacity());
}

FatTree build(const FatTreeSpec& spec) { return FatTree(spec); }

bool FatTree::fits(const Placement& p) const {
    for (const auto& [h, k] : p.host_counts) {
        if (host_compute_[h] < p.per_vm_compute * k) return false;
    }
    for (const auto& [h, d] : p.host_demands) {
        if (host_bw_[h] < d) return false;
    }
    for (const auto& [r, d] : p.rack_demands) {
        if (rack_bw_[r] < d) return false;
    }
    for (const auto& [pd, d] : p.pod_demands) {
        if (pod_bw_[pd] < d) return false;
    }
    return true;
}

void FatTree::reserve(const Placement& p) {
    if (active_.count(p.vc_id)) throw std::runtime_error("VC already reserved");
    if (!fits(p)) throw std::runtime_error("placement infeasible against residuals");
    for (const auto& [h, k] : p.host_counts) host_compute_[h] -= p.per_vm_compute * k;
    for (const auto& [h, d] : p.host_demands) host_bw_[h] -= d;
    for (const auto& [r, d] : p.rack_demands) rack_bw_[r] -= d;
    for (const auto& [pd, d] : p.pod_demands) pod_bw_[pd] -= d;
    active_.insert(p.vc_id);
}

void FatTree::release(const Placement& p) {
    if (!active_.count(p.vc_id)) throw std::runtime_error("release of VC that is not reserved");
    for (const auto& [h, k] : p.host_counts) {
        host_compute_[h] += p.per_vm_compute * k;
        if (host_compute_[h] > spec_.host_compute_capacity)
            throw std::runtime_error("release overflows host compute capacity");
    }
    for (const auto& [h, d] : p.host_demands) {
        host_bw_[h] += d;
        if (host_bw_[h] > spec_.host_link_capacity)
            throw std::runtime_error("release overflows host link capacity");
    }
    for (const auto& [r, d] : p.rack_demands) {
        rack_bw_[r] += d;
        if (rack_bw_[r] > spec_.rack_uplink_capacity())
            throw std::runtime_error("release overflows rack uplink capacity");
    }
    for (const auto& [pd, d] : p.pod_demands) {
        pod_bw_[pd] += d;
        if (pod_bw_[pd] > spec_.pod_uplink_capacity())
            throw std::runtime_error("release overflows pod uplink capacity");
    }
    active_.erase(p.vc_id);
}

bool FatTree::at_full_capacity() const {
    for (const auto& r : host_compute_)
        if (r != spec_.host_compute_capacity) return false;
    for (const auto& r : host_bw_)
        if (r != spec_.host_link_capacity) return false;
    for (const auto& r : rack_bw_)
        if (r != spec_.rack_uplink_capacity()) return false;
    for (const auto& r : pod_bw_)
        if (r != spec_.pod_uplink_capacity()) return false;
    return active_.empty();
}

}  // namespace vcsim
