#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <random>

#include "degreelab/errors.hpp"
#include "degreelab/young.hpp"
#include "oracles.hpp"

using namespace degreelab;

namespace {
constexpr double kE = 2.718281828459045235;

WeightedField random_field(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> value(0.0, 10.0), weight(0.01, 2.0);
    WeightedField f;
    for (std::size_t i = 0; i < n; ++i) {
        f.values.push_back(value(rng));
        f.weights.push_back(weight(rng));
    }
    return f;
}
} // namespace

TEST_CASE("evaluation of the built-in gauges") {
    CHECK(YoungFunction::power(2.0)(0.0) == 0.0);
    CHECK(YoungFunction::power(3.0)(2.0) == doctest::Approx(8.0));

    // direct 64-bit evaluation of t^2 / log(e + t) at t = e - 1
    const double t = kE - 1.0;
    const double expected = t * t / std::log(kE + t);
    CHECK(expected == doctest::Approx(1.981698).epsilon(1e-6));
    CHECK(YoungFunction::power_log(2, 1)(t) == doctest::Approx(expected));

    CHECK_THROWS_AS(YoungFunction::power(2.0)(-1.0), evaluation_error);
}

TEST_CASE("gauge axioms are validated at construction") {
    CHECK_NOTHROW(YoungFunction::power(1.0));
    CHECK_NOTHROW(YoungFunction::power_log(4, 1.5));
    CHECK_THROWS_AS(YoungFunction::power(0.5), config_error);

    // sampled square root: increasing but concave
    std::vector<std::array<double, 2>> rows;
    for (double t = 0.25; t <= 64.0; t *= 2.0) rows.push_back({t, std::sqrt(t)});
    CHECK_THROWS_AS(YoungFunction::tabulated(rows, "sqrt"), config_error);

    // non-monotone table
    CHECK_THROWS_AS(YoungFunction::tabulated({{1.0, 1.0}, {2.0, 0.5}}, "bad"),
                    config_error);
}

TEST_CASE("descriptor parsing") {
    CHECK(YoungFunction::parse("power:p=1.5").description() == "power:p=1.5");
    CHECK(YoungFunction::parse("powlog:n=2,a=1")(1.0) ==
          doctest::Approx(1.0 / std::log(kE + 1.0)));
    CHECK_THROWS_AS(YoungFunction::parse("mystery:1"), config_error);
}

TEST_CASE("tabulated gauges load from csv") {
    const std::string path = "young_table_test.csv";
    {
        std::ofstream f(path);
        f << std::setprecision(17) << "t,P\n";
        for (double t = 1e-6; t <= 2e6; t *= 2.0) f << t << "," << t * t << "\n";
    }
    const auto gauge = YoungFunction::parse("table:" + path);
    std::remove(path.c_str());
    CHECK(gauge(2.0) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(gauge.table_range().has_value());
    // behaves like its sampled power law under the checks
    CHECK(check_divergence(gauge, 2).holds());
    CHECK(check_doubling(gauge).parameters.at("K") ==
          doctest::Approx(4.0).epsilon(1e-6));
    CHECK_THROWS_AS(YoungFunction::parse("table:no_such_file.csv"), config_error);
}

TEST_CASE("divergence of the tail integral") {
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        CHECK(check_divergence(YoungFunction::power(n), n).holds());
        CHECK(check_divergence(YoungFunction::power_log(n, 1), n).holds());
        CHECK(check_divergence(YoungFunction::power_log(n, 1.5), n).fails());
        CHECK(check_divergence(YoungFunction::power(n - 1), n).fails());
    }
    // closed form for the convergent power case: tail integral = 1/(n-p) = 1
    const auto v = check_divergence(YoungFunction::power(1), 2);
    CHECK(v.fails());
    CHECK(v.partial_sums.back() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("borderline gauges stay inconclusive with a diagnostic") {
    const auto v = check_divergence(YoungFunction::power(1.95), 2);
    CHECK(v.status == ConditionStatus::Inconclusive);
    CHECK(!v.diagnostic.empty());
    CHECK(!v.partial_sums.empty());
}

TEST_CASE("small-o comparison against t^n") {
    CHECK(check_small_o(YoungFunction::power_log(2, 1), 2).holds());
    CHECK(check_small_o(YoungFunction::power(2), 2).fails());
    CHECK(check_small_o(YoungFunction::power(1.5), 2).holds());
    CHECK(check_small_o(YoungFunction::power(2.5), 2).fails());
}

TEST_CASE("doubling constants") {
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const auto v = check_doubling(YoungFunction::power(p));
        CHECK(v.holds());
        CHECK(v.parameters.at("K") ==
              doctest::Approx(std::pow(2.0, p)).epsilon(1e-12));
    }
    const auto v = check_doubling(YoungFunction::power_log(2, 1));
    CHECK(v.holds());
    CHECK(v.parameters.at("K") >= 2.0);
    CHECK(v.parameters.at("K") <= 4.0 * (1.0 + 1e-9));
}

TEST_CASE("doubling flags runaway tables") {
    // e^t sampled on [1, 40]: the doubling ratio grows without bound
    std::vector<std::array<double, 2>> rows;
    for (double t = 1.0; t <= 40.0; t += 0.5) rows.push_back({t, std::exp(t)});
    const auto gauge = YoungFunction::tabulated(rows, "exp-table");

    const auto narrow = check_doubling(gauge, {1.0, 10.0});
    CHECK(narrow.status == ConditionStatus::Inconclusive);
    CHECK(!narrow.diagnostic.empty());

    const auto wide = check_doubling(gauge, {1.0, 19.0});
    CHECK(wide.fails());
}

TEST_CASE("growth condition t^-alpha P(t) non-decreasing") {
    CHECK(check_growth_alpha(YoungFunction::power(2), 1.0).holds());
    CHECK(check_growth_alpha(YoungFunction::power_log(4, 1), 3.5, {1.0, 1e6})
              .holds());
    const auto v = check_growth_alpha(YoungFunction::power(1), 1.5);
    CHECK(v.fails());
    CHECK(v.parameters.count("violation_t") == 1);
}

TEST_CASE("radial projection energy") {
    const auto finite = radial_projection_energy(YoungFunction::power(1.5), 2);
    CHECK(finite.verdict == RadialVerdict::Finite);
    CHECK(finite.value == doctest::Approx(4.0 * oracle::pi).epsilon(1e-6));

    CHECK(radial_projection_energy(YoungFunction::power_log(2, 1), 2).verdict ==
          RadialVerdict::Infinite);
    CHECK(radial_projection_energy(YoungFunction::power(2), 2).verdict ==
          RadialVerdict::Infinite);
}

TEST_CASE("radial verdict mirrors the divergence verdict") {
    for (int n : {2, 3, 4}) {
        const std::vector<YoungFunction> gauges = {
            YoungFunction::power(n), YoungFunction::power_log(n, 1),
            YoungFunction::power_log(n, 1.5), YoungFunction::power(n - 1)};
        for (const auto& gauge : gauges) {
            CAPTURE(n);
            CAPTURE(gauge.description());
            const auto div = check_divergence(gauge, n);
            CHECK(div.status != ConditionStatus::Inconclusive);
            const auto radial = radial_projection_energy(gauge, n);
            CHECK((radial.verdict == RadialVerdict::Infinite) == div.holds());
        }
    }
    // a borderline gauge must stay undecided on both routes, not just one
    const auto div = check_divergence(YoungFunction::power(1.95), 2);
    const auto rad = radial_projection_energy(YoungFunction::power(1.95), 2);
    CHECK(div.status == ConditionStatus::Inconclusive);
    CHECK(rad.verdict == RadialVerdict::Inconclusive);
}

TEST_CASE("luxemburg norm equals the weighted p-norm for power gauges") {
    std::mt19937_64 rng(20240811);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const auto gauge = YoungFunction::power(p);
        for (int trial = 0; trial < 12; ++trial) {
            const auto field = random_field(rng, 40);
            double mean = 0.0;
            for (std::size_t i = 0; i < field.values.size(); ++i)
                mean += field.weights[i] * std::pow(field.values[i], p);
            const double pnorm = std::pow(mean, 1.0 / p);
            CHECK(luxemburg_norm(field, gauge) ==
                  doctest::Approx(pnorm).epsilon(1e-6));
        }
    }
}

TEST_CASE("luxemburg norm basics") {
    const auto square = YoungFunction::power(2);
    CHECK(luxemburg_norm({{1.0}, {1.0}}, square) == doctest::Approx(1.0));
    CHECK(luxemburg_norm({{2.0, 0.0}, {0.5, 0.5}}, square) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    CHECK(luxemburg_norm({{0.0, 0.0}, {1.0, 1.0}}, square) == 0.0);
    CHECK_THROWS_AS(luxemburg_norm({{1.0}, {1.0, 2.0}}, square), config_error);
}

TEST_CASE("luxemburg norm is positively homogeneous") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> scale(0.1, 30.0);
    const std::vector<YoungFunction> gauges = {YoungFunction::power(1.5),
                                               YoungFunction::power_log(2, 1),
                                               YoungFunction::power_log(3, 1.5)};
    for (const auto& gauge : gauges)
        for (int trial = 0; trial < 8; ++trial) {
            auto field = random_field(rng, 25);
            const double lambda = scale(rng);
            const double base = luxemburg_norm(field, gauge);
            for (auto& v : field.values) v *= lambda;
            CHECK(luxemburg_norm(field, gauge) ==
                  doctest::Approx(lambda * base).epsilon(1e-6));
        }
}

TEST_CASE("unit ball property: mean <= 1 forces norm <= 1") {
    std::mt19937_64 rng(99);
    const auto gauge = YoungFunction::power_log(2, 1);
    for (int trial = 0; trial < 20; ++trial) {
        auto field = random_field(rng, 30);
        const double mean = orlicz_mean(field, gauge);
        const double cut = mean > 1.0 ? mean : 1.0;
        // rescale weights so the mean is exactly at the unit ball boundary
        for (auto& w : field.weights) w /= cut;
        CHECK(orlicz_mean(field, gauge) <= 1.0 + 1e-12);
        CHECK(luxemburg_norm(field, gauge) <= 1.0 + 1e-8);
    }
}

TEST_CASE("orlicz mean") {
    const auto square = YoungFunction::power(2);
    CHECK(orlicz_mean({{}, {}}, square) == 0.0);
    CHECK(orlicz_mean({{1.0}, {4.0 * oracle::pi}}, square) ==
          doctest::Approx(4.0 * oracle::pi));
}
