#include "vcsim/pricing.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcsim {
namespace {

Rational clamp01(const Rational& v) {
    return std::min(std::max(v, Rational(0)), Rational(1));
}

Rational solve_lambda(const Rational& n_vms, const Rational& expected_gap,
                      const Rational& unit_price, const Rational& delta) {
    const Rational denom = n_vms * expected_gap * unit_price;
    if (denom <= Rational(0)) throw std::domain_error("no skewed demand to calibrate against");
    return clamp01(Rational(1) - delta / (denom * 2));
}

}  // namespace

PriceQuote price_ideal(const VCRequest& req, const UnitPrices& prices) {
    PriceQuote q;
    q.scheme = PricingScheme::ideal;
    q.base = (req.c * prices.p_c + req.b * prices.p_b) * req.n;
    q.skew_fee = Rational(0);
    return q;
}

std::optional<PriceQuote> price_drp(const VCRequest& req, const UnitPrices& prices,
                                    const TemplateSet& templates) {
    if (!drp_upgrade(req, templates)) return std::nullopt;
    PriceQuote q;
    q.scheme = PricingScheme::drp;
    q.base = std::max(req.c, req.b) * (prices.p_c + prices.p_b) * req.n;
    q.skew_fee = Rational(0);
    return q;
}

PriceQuote price_dsp(const VCRequest& req, const UnitPrices& prices,
                     const LambdaParams& lambdas) {
    PriceQuote q;
    q.scheme = PricingScheme::dsp;
    q.base = (req.b * prices.p_b + req.c * prices.p_c) * req.n;
    if (req.c >= req.b) {
        q.skew_fee = (req.c - req.b) * prices.p_b * lambdas.lambda_b * req.n;
    } else {
        q.skew_fee = (req.b - req.c) * prices.p_c * lambdas.lambda_c * req.n;
    }
    return q;
}

Rational calibrate_lambda_b(const CalibrationInput& input, const UnitPrices& prices) {
    return solve_lambda(input.skewed_vm_count, input.expected_c - input.expected_b,
                        prices.p_b, input.delta);
}

Rational calibrate_lambda_c(const CalibrationInput& input, const UnitPrices& prices) {
    return solve_lambda(input.skewed_vm_count, input.expected_b - input.expected_c,
                        prices.p_c, input.delta);
}

}  // namespace vcsim
