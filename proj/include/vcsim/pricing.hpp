#pragma once

#include "vcsim/rational.hpp"
#include "vcsim/request.hpp"

#include <optional>

namespace vcsim {

struct UnitPrices {
    Rational p_c{1};  // currency per unit compute per VM
    Rational p_b{1};  // currency per unit bandwidth per VM
};

struct LambdaParams {
    Rational lambda_c{0};
    Rational lambda_b{0};
};

enum class PricingScheme { ideal, drp, dsp };

struct PriceQuote {
    PricingScheme scheme = PricingScheme::ideal;
    Rational base;
    Rational skew_fee;  // 0 for ideal and drp
    Rational total() const { return base + skew_fee; }
};

/// P = n * (c*p_c + b*p_b): pay exactly the requested resource proportions.
PriceQuote price_ideal(const VCRequest& req, const UnitPrices& prices);

/// Dominant-resource pricing: P = n * max(c,b) * (p_c + p_b). The request
/// must be upgradable to a coupled template; otherwise it is unpriceable.
std::optional<PriceQuote> price_drp(const VCRequest& req, const UnitPrices& prices,
                                    const TemplateSet& templates);

/// Demand-specific pricing: the ideal price plus a lambda-weighted fee on
/// the skewed excess. lambda = 1 recovers DRP, lambda = 0 recovers ideal.
PriceQuote price_dsp(const VCRequest& req, const UnitPrices& prices,
                     const LambdaParams& lambdas);

struct CalibrationInput {
    Rational skewed_vm_count;  // N: expected VMs in requests skewed this direction
    Rational expected_c;       // E[c]
    Rational expected_b;       // E[b]
    Rational delta;            // DRP-vs-ideal provider profit difference
};

/// Solves N * (E[c]-E[b]) * p_b * (1-lambda_b) = delta/2 for lambda_b,
/// clamped to [0,1]. Throws std::domain_error when there is no skewed
/// demand to calibrate against (zero denominator).
Rational calibrate_lambda_b(const CalibrationInput& input, const UnitPrices& prices);

/// Symmetric counterpart, calibrating against requests with b > c.
Rational calibrate_lambda_c(const CalibrationInput& input, const UnitPrices& prices);

}  // namespace vcsim
