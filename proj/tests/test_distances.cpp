#include "cyclemeter/distances.hpp"
#include "cyclemeter/special.hpp"

#include <doctest.h>

#include <cmath>

using namespace cyclemeter;

namespace {

IntPmf<double> pmf(std::vector<int> s, std::vector<double> m) {
    IntPmf<double> p;
    p.support = std::move(s);
    p.mass = std::move(m);
    return p;
}

double direct_poisson(double lambda, int k) {
    double p = std::exp(-lambda);
    for (int j = 1; j <= k; ++j) p *= lambda / j;
    return p;
}

} // namespace

TEST_CASE("point-mass distances") {
    auto d0 = pmf({0}, {1.0}), d1 = pmf({1}, {1.0});
    CHECK(d_loc(d0, d0) == 0);
    CHECK(d_K(d0, d0) == 0);
    CHECK(d_loc(d0, d1) == 1);
    CHECK(d_K(d0, d1) == 1);
    CHECK(total_variation(d0, d1) == 1);
    CHECK(d_K(pmf({0, 1}, {0.5, 0.5}), d0) == 0.5);
}

TEST_CASE("Poisson(1) vs Poisson(1.1)") {
    auto p = poisson_distribution(1.0), q = poisson_distribution(1.1);
    double loc = 0, kol = 0, cp = 0, cq = 0;
    for (int k = 0; k < 60; ++k) {
        double a = direct_poisson(1.0, k), b = direct_poisson(1.1, k);
        loc = std::max(loc, std::abs(a - b));
        cp += a;
        cq += b;
        kol = std::max(kol, std::abs(cp - cq));
    }
    CHECK(std::abs(d_loc(p, q) - loc) < 1e-12);
    CHECK(std::abs(d_K(p, q) - kol) < 1e-12);
}

TEST_CASE("symmetry and standard inequalities") {
    auto a = pmf({0, 1, 2, 5}, {0.1, 0.4, 0.3, 0.2});
    auto b = pmf({1, 2, 3}, {0.5, 0.25, 0.25});
    CHECK(d_loc(a, b) == d_loc(b, a));
    CHECK(d_K(a, b) == d_K(b, a));
    CHECK(d_loc(a, b) <= 2 * total_variation(a, b));
    CHECK(d_K(a, b) <= total_variation(a, b));
    for (double lam : {0.3, 2.0, 9.5}) {
        auto p = poisson_distribution(lam), q = poisson_distribution(lam * 1.2);
        CHECK(d_loc(p, q) <= 2 * total_variation(p, q));
        CHECK(d_K(p, q) <= total_variation(p, q) + 1e-12);
    }
}

TEST_CASE("Poisson truncation") {
    for (double lam : {0.0, 0.5, 4.0, 30.0}) {
        auto p = poisson_distribution(lam, 1e-15);
        CHECK(p.tol == 1e-15);
        CHECK(std::abs(p.total() - 1) < 1e-14);
        double tail = 0;
        for (int k = p.support.back() + 1; k < p.support.back() + 200; ++k) tail += direct_poisson(lam, k);
        CHECK(tail < 1e-15);
    }
    CHECK(poisson_quantile(0, 1e-15) == 0);
}
