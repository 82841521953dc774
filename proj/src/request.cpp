#include "vcsim/request.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcsim {

Rational resource_ratio(const VCRequest& req) {
    if (!req.valid()) throw std::invalid_argument("invalid VCRequest");
    return req.c / req.b;
}

TemplateSet::TemplateSet(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("template set must be nonempty");
    if (!std::is_sorted(values_.begin(), values_.end(),
                        [](const Rational& a, const Rational& b) { return a < b; }) ||
        std::adjacent_find(values_.begin(), values_.end()) != values_.end()) {
        throw std::invalid_argument("template values must be strictly increasing");
    }
    for (const auto& v : values_) {
        if (v <= Rational(0) || v > Rational(1)) throw std::invalid_argument("template value out of (0,1]");
    }
}

TemplateSet TemplateSet::paper_defaults() {
    return TemplateSet({Rational(1, 8), Rational(1, 4), Rational(1, 2)});
}

std::optional<Rational> drp_upgrade(const VCRequest& req, const TemplateSet& templates) {
    const Rational dominant = std::max(req.c, req.b);
    for (const auto& t : templates.values()) {
        if (t >= dominant) return t;
    }
    return std::nullopt;
}

}  // namespace vcsim
