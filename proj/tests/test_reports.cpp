#include "cyclemeter/catalog.hpp"
#include "cyclemeter/error.hpp"
#include "cyclemeter/measure.hpp"
#include "cyclemeter/reports.hpp"
#include "cyclemeter/special.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace cyclemeter;

TEST_CASE("loglog slope and trend helpers") {
    int n[] = {10, 100, 1000};
    double v[] = {1e-1, 1e-2, 1e-3};
    CHECK(loglog_slope(n, v) == doctest::Approx(-1.0).epsilon(1e-12));
    double one[] = {0.3};
    CHECK(std::isnan(loglog_slope(std::span<const int>(n, 1), one)));
    double bumpy[] = {1.0, 0.8, 0.82, 0.7};
    CHECK(nonincreasing_trend(bumpy));
    double rising[] = {1.0, 1.2};
    CHECK_FALSE(nonincreasing_trend(rising));
    double twice[] = {1.0, 1.01, 1.02};
    CHECK_FALSE(nonincreasing_trend(twice));
}

TEST_CASE("poisson_vector_report for Ewens") {
    auto e1 = ewens_family(1);
    int single[] = {30};
    auto r1 = poisson_vector_report(e1, 1, single);
    REQUIRE(r1.size() == 2);
    // E[Y_1] = theta r = 1: the b = 1 law of C_1 is close to Poisson(1).
    auto joint = joint_cycle_pmf<double>(e1.weights, 30, 1);
    double tv = 0;
    for (int c = 0; c <= 30; ++c) tv += std::abs(joint.at({c}) - poisson_pmf(1, c));
    for (int c = 31; c < 80; ++c) tv += poisson_pmf(1, c);
    CHECK(r1[0].values[0] == doctest::Approx(tv / 2).epsilon(1e-9));

    auto e2 = ewens_family(2);
    int grid[] = {25, 50, 100, 200};
    for (const auto& r : poisson_vector_report(e2, 2, grid)) {
        CHECK(r.values.size() == 4);
        for (std::size_t i = 1; i < 4; ++i) CHECK(r.values[i] < r.values[i - 1]);
        CHECK(r.reference_rate == "1/n (pointwise bound)");
    }
    CHECK_THROWS_AS(poisson_vector_report(polylog_family(Rational(-1, 2)), 1, grid), UnsupportedClassError);
}

TEST_CASE("mod_poisson_report") {
    auto e2 = ewens_family(2);
    int grid[] = {100, 200, 400};
    double s0[] = {0.0};
    auto zero = mod_poisson_report(e2, grid, s0);
    for (double v : zero.values) CHECK(v <= 1e-12);
    auto r = mod_poisson_report(e2, grid, kDefaultSGrid);
    for (std::size_t i = 1; i < 3; ++i) {
        double ratio = r.values[i] / r.values[i - 1];
        CHECK(ratio >= 0.35);
        CHECK(ratio <= 0.65);
    }
    CHECK_THROWS_AS(mod_poisson_report(polylog_family(1), grid, s0), UnsupportedClassError);
}

TEST_CASE("clt_report") {
    int grid[] = {100, 1000};
    for (int theta : {1, 2}) {
        auto r = clt_report(ewens_family(theta), grid);
        REQUIRE(r.size() == 2);
        CHECK(r[0].metric == "d_K");
        CHECK(r[0].values[1] < r[0].values[0]);
        CHECK(r[1].values[1] < r[1].values[0]);
        if (theta == 1) CHECK(r[0].values[1] < 0.2);
    }
    int one[] = {50};
    auto single = clt_report(theta_shift_family(1, 1, 2), one);
    CHECK(single[0].n_values.size() == 1);
    CHECK(single[0].values.size() == 1);
    CHECK(single[0].values[0] >= 0);
    int bad[] = {1};
    CHECK_THROWS_AS(clt_report(ewens_family(1), bad), UsageError);
}

TEST_CASE("poisson_k_approx_report") {
    int one[] = {1};
    auto r = poisson_k_approx_report(ewens_family(1), one);
    // n = 1: K = 1 surely against Poisson(0) = point mass at 0.
    CHECK(r[0].values[0] == doctest::Approx(1.0));
    CHECK(r[1].values[0] == doctest::Approx(1.0));
    int grid[] = {100, 300, 1000};
    auto g = poisson_k_approx_report(ewens_family(1), grid);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(g[0].values[i] * std::log(double(grid[i])) < 0.3);
        CHECK(g[1].values[i] * std::sqrt(std::log(double(grid[i]))) < 0.35);
    }
}

TEST_CASE("large_deviation_report") {
    auto r = large_deviation_report(ewens_family(1), 400, std::nullopt);
    auto p = total_cycles_pmf<double>(ewens_family(1).weights, 400);
    CHECK(r.exact == p.at(r.k));
    CHECK(r.k == static_cast<int>(std::lround(r.mean + 3 * r.sd)));
    auto fixed = large_deviation_report(ewens_family(1), 400, 5);
    CHECK(fixed.k == 5);
    CHECK_THROWS_AS(large_deviation_report(ewens_family(1), 40, 41), UsageError);
}

TEST_CASE("serialization") {
    int grid[] = {100, 1000};
    auto reports = clt_report(ewens_family(1), grid);
    auto doc = nlohmann::json::parse(to_json(reports));
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["rows"].size() == 2);
    CHECK(doc[0]["rows"][1]["value"].get<double>() == reports[0].values[1]);

    std::istringstream csv(to_csv(reports));
    std::string header, line;
    std::getline(csv, header);
    CHECK(header == "n,metric,value,reference_rate_value");
    std::getline(csv, line);
    auto first = line.find(','), second = line.find(',', first + 1), third = line.find(',', second + 1);
    CHECK(line.substr(0, first) == "100");
    CHECK(std::stod(line.substr(second + 1, third - second - 1)) == reports[0].values[0]);
    CHECK(format_number(0.1) == "0.10000000000000001");

    auto ld = nlohmann::json::parse(to_json(large_deviation_report(ewens_family(1), 200, 4)));
    CHECK(ld["k"] == 4);
}
