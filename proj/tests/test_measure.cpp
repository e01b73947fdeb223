#include "cyclemeter/catalog.hpp"
#include "cyclemeter/error.hpp"
#include "cyclemeter/generalized.hpp"
#include "cyclemeter/measure.hpp"
#include "cyclemeter/partitions.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace cyclemeter;
using testing_support::q;

namespace {

std::vector<WeightSequence> catalog() {
    return {
        WeightSequence::constant(q("1/2")),
        WeightSequence::constant(1),
        WeightSequence::constant(2),
        WeightSequence::constant(3),
        theta_shift_family(1, 1, 2).weights,
        polylog_family(q("-1/2")).weights,
        polylog_family(1).weights,
        WeightSequence::from_values({1, 0, 1, q("1/2")}, 2, "gapped"),
    };
}

} // namespace

TEST_CASE("normalization_constants examples") {
    auto one = normalization_constants<Rational>(WeightSequence::constant(1), 20);
    auto two = normalization_constants<Rational>(WeightSequence::constant(2), 20);
    for (int n = 0; n <= 20; ++n) {
        CHECK(one[n] == 1);
        CHECK(two[n] == n + 1);
    }
    for (const auto& theta : catalog()) CHECK(normalization_constants<Rational>(theta, 3)[0] == 1);
    auto zero = normalization_constants<Rational>(WeightSequence::constant(0), 4);
    CHECK(zero[0] == 1);
    CHECK(zero[4] == 0);
}

TEST_CASE("normalization matches the partition oracle up to n = 40") {
    for (const auto& theta : catalog()) {
        auto h = normalization_constants<Rational>(theta, 40);
        for (int n = 0; n <= 40; n += (n < 16 ? 1 : 8)) {
            CAPTURE(theta.name());
            CAPTURE(n);
            CHECK(h[n] == brute_force_normalization<Rational>(theta, n));
        }
    }
}

TEST_CASE("h recurrence") {
    for (const auto& theta : catalog()) {
        auto h = normalization_constants<Rational>(theta, 60);
        for (int n = 1; n <= 60; ++n) {
            Rational s(0);
            for (int k = 1; k <= n; ++k) s += theta.exact(k) * h[n - k];
            CHECK(Rational(n) * h[n] == s);
        }
    }
}

TEST_CASE("joint_cycle_pmf examples") {
    auto one = WeightSequence::constant(1);
    auto p = joint_cycle_pmf<Rational>(one, 3, 1);
    CHECK(p.at({0}) == q("1/3"));
    CHECK(p.at({1}) == q("1/2"));
    CHECK(p.at({2}) == 0);
    CHECK(p.at({3}) == q("1/6"));
    auto p2 = joint_cycle_pmf<Rational>(one, 2, 2);
    CHECK(p2.at({2, 0}) == q("1/2"));
    CHECK(p2.at({0, 1}) == q("1/2"));
    CHECK(p2.at({1, 0}) == 0);
    auto single = joint_cycle_pmf<Rational>(WeightSequence::constant(q("5/2")), 1, 1);
    CHECK(single.at({1}) == 1);
    CHECK_THROWS_AS(joint_cycle_pmf<Rational>(one, 3, 4), UsageError);
    CHECK_THROWS_AS(joint_cycle_pmf<Rational>(WeightSequence::constant(0), 3, 1), DegenerateMeasureError);
}

TEST_CASE("joint_cycle_pmf support lists every tuple in lexicographic order") {
    auto p = joint_cycle_pmf<Rational>(WeightSequence::constant(2), 6, 3);
    CHECK(std::is_sorted(p.support.begin(), p.support.end()));
    for (const auto& c : p.support) CHECK(c[0] + 2 * c[1] + 3 * c[2] <= 6);
    CHECK(p.is_normalized());
}

TEST_CASE("joint and K laws match the partition oracle for n <= 12") {
    for (const auto& theta : catalog()) {
        for (int n = 1; n <= 12; ++n) {
            CAPTURE(theta.name());
            CAPTURE(n);
            auto law = brute_force_cycle_type_pmf<Rational>(theta, n).pmf;
            for (int b = 1; b <= std::min(3, n); ++b) {
                auto exact = joint_cycle_pmf<Rational>(theta, n, b);
                auto brute = cycle_count_marginal(law, n, b);
                CHECK(exact.support == brute.support);
                CHECK(exact.mass == brute.mass);
            }
            auto k = total_cycles_pmf<Rational>(theta, n);
            auto kb = length_marginal(law, n);
            CHECK(k.mass == kb.mass);
        }
    }
}

TEST_CASE("joint law on S_n by direct enumeration") {
    auto theta = WeightSequence::from_values({q("1/3"), 2, 1, q("5/4")}, 1);
    for (int n = 2; n <= 7; ++n) {
        std::map<std::vector<int>, Rational> raw;
        Rational total(0);
        testing_support::for_each_permutation(n, [&](const std::vector<int>& lengths) {
            Rational w(1);
            std::vector<int> c(2, 0);
            for (int l : lengths) {
                w *= theta.exact(l);
                if (l <= 2) ++c[l - 1];
            }
            raw[c] += w;
            total += w;
        });
        auto p = joint_cycle_pmf<Rational>(theta, n, 2);
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto it = raw.find(p.support[i]);
            CHECK(p.mass[i] == (it == raw.end() ? Rational(0) : it->second / total));
        }
    }
}

TEST_CASE("marginal of the b = 3 law is the b = 1 law") {
    for (const auto& theta : catalog()) {
        const int n = 15;
        auto p3 = joint_cycle_pmf<Rational>(theta, n, 3);
        auto p1 = joint_cycle_pmf<Rational>(theta, n, 1);
        std::vector<Rational> marg(n + 1, 0);
        for (std::size_t i = 0; i < p3.size(); ++i) marg[p3.support[i][0]] += p3.mass[i];
        for (int c = 0; c <= n; ++c) CHECK(p1.at({c}) == marg[c]);
    }
}

TEST_CASE("total_cycles_pmf examples") {
    auto k3 = total_cycles_pmf<Rational>(WeightSequence::constant(1), 3);
    CHECK(k3.mass == std::vector<Rational>{q("1/3"), q("1/2"), q("1/6")});
    auto k1 = total_cycles_pmf<Rational>(WeightSequence::constant(1), 1);
    CHECK(k1.mass == std::vector<Rational>{1});
    auto k2 = total_cycles_pmf<Rational>(WeightSequence::constant(2), 2);
    CHECK(k2.mass == std::vector<Rational>{q("1/3"), q("2/3")});
    CHECK_THROWS_AS(total_cycles_pmf<Rational>(WeightSequence::constant(0), 2), DegenerateMeasureError);
}

TEST_CASE("uniform K law is Stirling over n!") {
    auto c = testing_support::stirling_first(20);
    for (int n = 1; n <= 20; ++n) {
        auto k = total_cycles_pmf<Rational>(WeightSequence::constant(1), n);
        CHECK(k.total() == 1);
        for (int j = 1; j <= n; ++j) CHECK(k.at(j) == Rational(c[n][j]) / Rational(testing_support::factorial(n)));
    }
}

TEST_CASE("total_cycles_pmfs shares one table") {
    auto theta = WeightSequence::constant(q("3/2"));
    int ns[] = {4, 9, 2};
    auto many = total_cycles_pmfs<Rational>(theta, ns);
    for (int i = 0; i < 3; ++i) CHECK(many[i].mass == total_cycles_pmf<Rational>(theta, ns[i]).mass);
}

TEST_CASE("expected_cycle_counts") {
    auto e = expected_cycle_counts<Rational>(WeightSequence::constant(1), 9);
    for (int m = 1; m <= 9; ++m) CHECK(e[m] == Rational(1, m));
    auto e2 = expected_cycle_counts<Rational>(WeightSequence::constant(2), 2);
    CHECK(e2[1] == q("4/3"));
    CHECK(e2[2] == q("1/3"));
    CHECK(expected_cycle_counts<Rational>(WeightSequence::constant(5), 1)[1] == 1);
    for (const auto& theta : catalog()) {
        auto ec = expected_cycle_counts<Rational>(theta, 25);
        Rational s(0);
        for (int m = 1; m <= 25; ++m) s += Rational(m) * ec[m];
        CHECK(s == 25);
    }
}

TEST_CASE("double path agrees with the exact path") {
    for (const auto& theta : catalog()) {
        const int n = 30;
        auto kd = total_cycles_pmf<double>(theta, n);
        auto kq = total_cycles_pmf<Rational>(theta, n);
        for (int k = 1; k <= n; ++k) CHECK(kd.at(k) == doctest::Approx(kq.at(k).get_d()).epsilon(1e-10));
        auto jd = joint_cycle_pmf<double>(theta, n, 2);
        auto jq = joint_cycle_pmf<Rational>(theta, n, 2);
        for (std::size_t i = 0; i < jd.size(); ++i) CHECK(std::abs(jd.mass[i] - jq.mass[i].get_d()) < 1e-12);
    }
}

TEST_CASE("rescaling keeps huge weights representable") {
    auto fam = exp_weight_family(1.5, 1.0);  // theta_m = e^{1.5 m}
    auto kd = total_cycles_pmf<double>(fam.weights, 300);
    CHECK(kd.is_normalized());
    auto uniform = total_cycles_pmf<double>(WeightSequence::constant(1), 300);
    // theta_m = e^{1.5 m} tilts every permutation by e^{1.5 n}: the law is uniform.
    for (int k = 1; k <= 300; k += 7) CHECK(std::abs(kd.at(k) - uniform.at(k)) < 1e-12);
    CHECK(probability_scale(fam.weights, 300) == doctest::Approx(std::exp(-1.5)));
}

TEST_CASE("double recurrence at n = 4000") {
    auto theta = theta_shift_family(1, 1, 2).weights;
    auto h = normalization_constants<double>(theta, 4000);
    for (int n = 1; n <= 4000; n += 37) {
        double s = 0;
        for (int k = 1; k <= n; ++k) s += theta(k) * h[n - k];
        CHECK(std::abs(n * h[n] - s) <= 1e-10 * std::abs(n * h[n]));
    }
}
