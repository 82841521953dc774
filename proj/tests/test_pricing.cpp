#include "vcsim/pricing.hpp"

#include <doctest.h>

#include <random>

using namespace vcsim;

namespace {

VCRequest make(int n, Rational c, Rational b) {
    VCRequest r;
    r.n = n;
    r.c = c;
    r.b = b;
    return r;
}

const UnitPrices kEight{Rational(8), Rational(8)};

}  // namespace

TEST_CASE("price_ideal") {
    CHECK(price_ideal(make(10, Rational(1, 4), Rational(1, 8)), kEight).total() == Rational(30));
    CHECK(price_ideal(make(1, Rational(1, 8), Rational(1, 8)), kEight).total() == Rational(2));
    CHECK(price_ideal(make(10, Rational(1, 4), Rational(1, 8)), kEight).skew_fee == Rational(0));
}

TEST_CASE("price_drp") {
    const auto templates = TemplateSet::paper_defaults();
    CHECK(price_drp(make(10, Rational(1, 4), Rational(1, 8)), kEight, templates)->total() ==
          Rational(40));
    const UnitPrices six{Rational(6), Rational(6)};
    CHECK(price_drp(make(9, Rational(1, 6), Rational(2, 6)), six, templates)->total() ==
          Rational(36));
    // balanced request: equals ideal
    const auto req = make(5, Rational(1, 4), Rational(1, 4));
    CHECK(price_drp(req, kEight, templates)->total() == price_ideal(req, kEight).total());
    // unpriceable beyond the largest template
    const TemplateSet small({Rational(1, 8)});
    CHECK_FALSE(price_drp(make(1, Rational(1, 2), Rational(1, 8)), kEight, small).has_value());
}

TEST_CASE("price_dsp with the paper's lambda") {
    const LambdaParams l{Rational(1, 6), Rational(1, 6)};
    const auto q = price_dsp(make(10, Rational(1, 4), Rational(1, 8)), kEight, l);
    CHECK(q.base == Rational(30));
    CHECK(q.skew_fee == Rational(5, 3));  // 10 * (1/8) * 8 * (1/6)
    CHECK(q.total() == Rational(30) + Rational(5, 3));
}

TEST_CASE("DSP endpoint identities and sandwich over random requests") {
    std::mt19937_64 rng(31);
    const auto templates = TemplateSet::paper_defaults();
    const Rational pool[] = {Rational(1, 8), Rational(1, 6), Rational(1, 4), Rational(2, 6),
                             Rational(1, 2)};
    const Rational lpool[] = {Rational(0), Rational(1, 6), Rational(1, 3), Rational(1, 2),
                              Rational(5, 6), Rational(1)};
    for (int i = 0; i < 10000; ++i) {
        const auto req = make(1 + int(rng() % 60), pool[rng() % 5], pool[rng() % 5]);
        const UnitPrices prices{Rational(1 + std::int64_t(rng() % 10)),
                                Rational(1 + std::int64_t(rng() % 10))};
        const Rational p_ideal = price_ideal(req, prices).total();
        const Rational p_drp =
            price_drp(req, prices, templates).value_or(PriceQuote{}).total();
        // every pool value is covered by the largest template
        REQUIRE(price_drp(req, prices, templates).has_value());

        CHECK(price_dsp(req, prices, {Rational(1), Rational(1)}).total() == p_drp);
        CHECK(price_dsp(req, prices, {Rational(0), Rational(0)}).total() == p_ideal);

        const LambdaParams l{lpool[rng() % 6], lpool[rng() % 6]};
        const Rational p_dsp = price_dsp(req, prices, l).total();
        CHECK(p_ideal <= p_dsp);
        CHECK(p_dsp <= p_drp);

        if (req.c == req.b) {
            CHECK(p_ideal == p_drp);
            CHECK(p_dsp == p_ideal);
        }
    }
}

TEST_CASE("DSP total is non-decreasing in n, c, b, and both lambdas") {
    const UnitPrices prices{Rational(5), Rational(3)};
    std::mt19937_64 rng(37);
    const Rational pool[] = {Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 2)};
    for (int i = 0; i < 2000; ++i) {
        const auto req = make(1 + int(rng() % 30), pool[rng() % 4], pool[rng() % 4]);
        const LambdaParams l{Rational(std::int64_t(rng() % 7), 6),
                             Rational(std::int64_t(rng() % 7), 6)};
        const Rational base = price_dsp(req, prices, l).total();
        CHECK(price_dsp(make(req.n + 1, req.c, req.b), prices, l).total() >= base);
        if (req.c < Rational(1, 2))
            CHECK(price_dsp(make(req.n, req.c + Rational(1, 8), req.b), prices, l).total() >=
                  base);
        if (req.b < Rational(1, 2))
            CHECK(price_dsp(make(req.n, req.c, req.b + Rational(1, 8)), prices, l).total() >=
                  base);
        CHECK(price_dsp(req, prices, {l.lambda_c + Rational(1, 6), l.lambda_b}).total() >= base);
        CHECK(price_dsp(req, prices, {l.lambda_c, l.lambda_b + Rational(1, 6)}).total() >= base);
    }
}

TEST_CASE("calibrate_lambda_b solves the sharing equation") {
    UnitPrices unit{Rational(1), Rational(1)};
    CalibrationInput input{Rational(100), Rational(0), Rational(0), Rational(10)};
    input.expected_c = Rational(1, 5);
    input.expected_b = Rational(1, 10);  // gap 0.1
    CHECK(calibrate_lambda_b(input, unit) == Rational(1, 2));

    // delta = 0: DSP degenerates to DRP
    input.delta = Rational(0);
    CHECK(calibrate_lambda_b(input, unit) == Rational(1));
}

TEST_CASE("calibrate clamps to [0,1] and rejects a zero denominator") {
    UnitPrices unit{Rational(1), Rational(1)};
    CalibrationInput input{Rational(1), Rational(1, 2), Rational(1, 4), Rational(100)};
    CHECK(calibrate_lambda_b(input, unit) == Rational(0));  // huge delta clamps at 0

    input.expected_c = input.expected_b;  // no skewed demand
    CHECK_THROWS_AS(calibrate_lambda_b(input, unit), std::domain_error);

    // symmetric direction
    CalibrationInput rev{Rational(100), Rational(1, 10), Rational(1, 5), Rational(10)};
    CHECK(calibrate_lambda_c(rev, unit) == Rational(1, 2));
}
