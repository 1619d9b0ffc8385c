#include <catch2/catch_amalgamated.hpp>

#include "srgm/models.hpp"
#include "srgm/rng.hpp"

#include <cmath>
#include <limits>

using namespace srgm;
using Catch::Approx;

namespace {

Params random_params(SplitMix64& rng, double a_lo = 1.0, double a_hi = 1000.0, double b_lo = 0.01,
                     double b_hi = 1.0) {
    return {detail::uniform(rng, a_lo, a_hi), detail::uniform(rng, b_lo, b_hi)};
}

}  // namespace

TEST_CASE("mu(0) is exactly zero for every model", "[models]") {
    SplitMix64 rng(101);
    for (ModelKind kind : all_models)
        for (int i = 0; i < 50; ++i) REQUIRE(mean_value(kind, random_params(rng), 0.0) == 0.0);
}

TEST_CASE("mean value closed forms", "[models]") {
    CHECK(mean_value(ModelKind::go_exponential, {1.0, 0.3}, 0.0) == 0.0);
    CHECK(mean_value(ModelKind::power, {2.0, 0.5}, 1.0) == 2.0);  // 1^b = 1
    // a ln(1 + bt) = ln(e) = 1 at t = e - 1
    CHECK(mean_value(ModelKind::musa_okumoto, {1.0, 1.0}, 1.7182818284590453) == Approx(1.0).epsilon(1e-14));
    // 10 (1 - 2 e^{-1}), checked against a high-precision evaluation
    CHECK(mean_value(ModelKind::delayed_s_shaped, {10.0, 0.1}, 10.0) ==
          Approx(2.6424111765711538).epsilon(1e-13));
}

TEST_CASE("failure intensity closed forms", "[models]") {
    CHECK(failure_intensity(ModelKind::go_exponential, {1.0, 0.3}, 0.0) == Approx(0.3));
    CHECK(failure_intensity(ModelKind::delayed_s_shaped, {57.0, 0.42}, 0.0) == 0.0);
    // ab / (1 + bt) = 1 / 2
    CHECK(failure_intensity(ModelKind::musa_okumoto, {2.0, 0.5}, 2.0) == 0.5);
}

TEST_CASE("power intensity at the time origin", "[models]") {
    CHECK_THROWS_AS(failure_intensity(ModelKind::power, {1.0, 0.5}, 0.0), std::domain_error);
    CHECK(failure_intensity(ModelKind::power, {3.0, 1.0}, 0.0) == Approx(3.0));  // slope of a t
    CHECK(failure_intensity(ModelKind::power, {3.0, 2.0}, 0.0) == 0.0);
}

TEST_CASE("non-finite or non-positive arguments are domain errors", "[models]") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    for (ModelKind kind : all_models) {
        CHECK_THROWS_AS(mean_value(kind, {1.0, 0.5}, nan), std::domain_error);
        CHECK_THROWS_AS(mean_value(kind, {inf, 0.5}, 1.0), std::domain_error);
        CHECK_THROWS_AS(mean_value(kind, {1.0, nan}, 1.0), std::domain_error);
        CHECK_THROWS_AS(mean_value(kind, {0.0, 0.5}, 1.0), std::domain_error);
        CHECK_THROWS_AS(mean_value(kind, {1.0, -0.5}, 1.0), std::domain_error);
        CHECK_THROWS_AS(mean_value(kind, {1.0, 0.5}, -1.0), std::domain_error);
        CHECK_THROWS_AS(failure_intensity(kind, {1.0, 0.5}, nan), std::domain_error);
    }
}

TEST_CASE("default bounds", "[models]") {
    SearchSpace s = default_bounds();
    CHECK(s.a_min == 1e-5);
    CHECK(s.a_max == 2000.0);
    CHECK(s.b_min == 1e-5);
    CHECK(s.b_max == 1.0);
    CHECK(s.a_min < s.a_max);
    CHECK(s.b_min < s.b_max);
    CHECK_NOTHROW(validate(s));
    CHECK_THROWS_AS(validate(SearchSpace{5.0, 5.0, 0.1, 1.0}), std::domain_error);
    CHECK_THROWS_AS(validate(SearchSpace{-1.0, 5.0, 0.1, 1.0}), std::domain_error);
}

TEST_CASE("mu is non-decreasing in t", "[models][property]") {
    SplitMix64 rng(202);
    for (ModelKind kind : all_models) {
        for (int i = 0; i < 200; ++i) {
            Params p = random_params(rng, 0.1, 2000.0, 1e-4, 1.0);
            double t1 = detail::uniform(rng, 0.0, 500.0);
            double t2 = t1 + detail::uniform(rng, 0.0, 500.0);
            REQUIRE(mean_value(kind, p, t2) >= mean_value(kind, p, t1));
        }
    }
}

TEST_CASE("intensity matches a central finite difference of mu", "[models][property]") {
    SplitMix64 rng(303);
    for (ModelKind kind : all_models) {
        for (int i = 0; i < 100; ++i) {
            Params p = random_params(rng);
            double t = detail::uniform(rng, 0.1, 50.0);  // away from the power singularity
            double h = 1e-5 * std::max(1.0, t);
            double fd = (mean_value(kind, p, t + h) - mean_value(kind, p, t - h)) / (2.0 * h);
            double lambda = failure_intensity(kind, p, t);
            REQUIRE(std::abs(lambda - fd) <= 1e-6 * std::max(1.0, lambda));
        }
    }
}

TEST_CASE("GO and DSS saturate at a", "[models][property]") {
    SplitMix64 rng(404);
    for (ModelKind kind : {ModelKind::go_exponential, ModelKind::delayed_s_shaped}) {
        for (int i = 0; i < 100; ++i) {
            Params p = random_params(rng);
            double t20 = 20.0 / p.b;  // bt = 20
            double mu = mean_value(kind, p, t20);
            REQUIRE(mu > 0.999 * p.a);
            REQUIRE(mu < p.a);
            REQUIRE(mean_value(kind, p, 1e12) <= p.a);
        }
    }
}

TEST_CASE("POW and M-O grow without bound", "[models][property]") {
    SplitMix64 rng(505);
    for (int i = 0; i < 100; ++i) {
        Params p = random_params(rng, 1.0, 1000.0, 0.05, 1.0);

        // power: mu doubles exactly when t scales by 2^{1/b}
        double t1 = detail::uniform(rng, 1.0, 100.0);
        double t2 = t1 * std::pow(2.0, 1.0 / p.b);
        CHECK(mean_value(ModelKind::power, p, t2) ==
              Approx(2.0 * mean_value(ModelKind::power, p, t1)).epsilon(1e-9));

        // musa-okumoto: mu doubles at t2 = ((1 + b t1)^2 - 1) / b
        double mo_t2 = ((1.0 + p.b * t1) * (1.0 + p.b * t1) - 1.0) / p.b;
        CHECK(mean_value(ModelKind::musa_okumoto, p, mo_t2) ==
              Approx(2.0 * mean_value(ModelKind::musa_okumoto, p, t1)).epsilon(1e-9));
    }
    // no finite limit
    CHECK(mean_value(ModelKind::power, {1.0, 0.5}, 1e12) > 1e5);
    CHECK(mean_value(ModelKind::musa_okumoto, {1.0, 1.0}, 1e300) > 600.0);
}

TEST_CASE("model names parse and print", "[models]") {
    CHECK(parse_model("go") == ModelKind::go_exponential);
    CHECK(parse_model("power") == ModelKind::power);
    CHECK(parse_model("dss") == ModelKind::delayed_s_shaped);
    CHECK(parse_model("mo") == ModelKind::musa_okumoto);
    CHECK(model_display_name(ModelKind::go_exponential) == "EXP(G-O)");
    CHECK_THROWS_WITH(parse_model("weibull"),
                      Catch::Matchers::ContainsSubstring("go, power, dss, mo"));
}
