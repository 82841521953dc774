#pragma once

#include "vcsim/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vcsim {

/// One virtual-cluster demand VC(n,c,b): n VMs, each with compute c and
/// hose bandwidth b, both normalized to the capacity of one host.
struct VCRequest {
    std::int64_t id = 0;
    int n = 1;            // VM count, >= 1
    Rational c;           // per-VM compute fraction, in (0,1]
    Rational b;           // per-VM bandwidth fraction, in (0,1]
    double arrival = 0.0;
    double duration = 1.0;

    bool valid() const {
        return n >= 1 && c > Rational(0) && c <= Rational(1) && b > Rational(0) &&
               b <= Rational(1) && duration > 0.0;
    }
};

/// c/b. Balanced requests have ratio 1; ratio != 1 marks a skewed request.
Rational resource_ratio(const VCRequest& req);

/// Coupled (c,b) templates with c == b, sorted ascending.
class TemplateSet {
public:
    explicit TemplateSet(std::vector<Rational> values);

    static TemplateSet paper_defaults();  // {1/8, 1/4, 1/2}

    const std::vector<Rational>& values() const { return values_; }
    Rational largest() const { return values_.back(); }

private:
    std::vector<Rational> values_;
};

/// Smallest template value >= max(c,b), or nullopt when the request exceeds
/// the largest template and cannot be upgraded.
std::optional<Rational> drp_upgrade(const VCRequest& req, const TemplateSet& templates);

}  // namespace vcsim
