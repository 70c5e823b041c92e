#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "spectra/channel.hpp"

using namespace spectra;

namespace {

// Monte Carlo oracle: |h|^2 at distance d is exponential with mean d^-2,
// so the sample mean over n draws has standard error d^-2 / sqrt(n).
double mean_power(double d, std::uint64_t seed, int n) {
    Rng rng(seed);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += sample_gain(d, rng).power_gain();
    return sum / n;
}

}  // namespace

TEST_CASE("sample_gain mean matches inverse-square law") {
    const int n = 100000;
    for (double d : {1.0, 2.0}) {
        const double expect = 1.0 / (d * d);
        const double se = expect / std::sqrt(static_cast<double>(n));
        const double mean = mean_power(d, 42, n);
        CHECK(std::abs(mean - expect) <= 4.0 * se);
    }
}

TEST_CASE("sample_gain is deterministic under seeding") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) {
        const ComplexGain ga = sample_gain(3.0, a);
        const ComplexGain gb = sample_gain(3.0, b);
        CHECK(ga.re == gb.re);
        CHECK(ga.im == gb.im);
    }
}

TEST_CASE("sample_gain rejects sub-minimum distances") {
    Rng rng(1);
    CHECK_THROWS_AS(sample_gain(0.05, rng), std::domain_error);
    CHECK_THROWS_AS(sample_gain(0.0, rng), std::domain_error);
    CHECK_THROWS_AS(sample_gain(-1.0, rng), std::domain_error);
    CHECK_NOTHROW(sample_gain(kMinDistanceM, rng));
}

TEST_CASE("build_channels yields one ChannelSet per SU") {
    Topology topo;
    topo.pt = {0, 0};
    topo.pr = {100, 0};
    topo.ed = {150, 0};
    for (int i = 0; i < 10; ++i) {
        topo.st.push_back({50.0, 5.0 * i});
        topo.sr.push_back({50.0, 5.0 * i + 30.0});
    }
    Rng rng(7);
    const auto channels = build_channels(topo, rng);
    REQUIRE(channels.size() == 10);
    for (const auto& ch : channels) {
        CHECK(ch.g_ps >= 0.0);
        CHECK(ch.g_sp >= 0.0);
        CHECK(ch.g_ss >= 0.0);
        CHECK(ch.g_se >= 0.0);
    }
}

TEST_CASE("equidistant links draw from the same distribution") {
    // Single SU with all four distances equal: the four mean gains agree
    // within Monte Carlo error.
    Topology topo;
    topo.pt = {0, 10};
    topo.pr = {0, -10};
    topo.ed = {10, 0};
    topo.st.push_back({0, 0});
    topo.sr.push_back({-10, 0});
    Rng rng(99);
    const int n = 20000;
    double sums[4] = {0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
        const auto ch = build_channels(topo, rng).front();
        sums[0] += ch.g_ps;
        sums[1] += ch.g_sp;
        sums[2] += ch.g_ss;
        sums[3] += ch.g_se;
    }
    const double expect = 1.0 / 100.0;
    const double se = expect / std::sqrt(static_cast<double>(n));
    for (double s : sums) CHECK(std::abs(s / n - expect) <= 4.0 * se);
}

TEST_CASE("colocated ED and PR give identically distributed g_sp and g_se") {
    Topology topo;
    topo.pt = {0, 30};
    topo.pr = {60, 0};
    topo.ed = {40, std::sqrt(60.0 * 60.0 - 40.0 * 40.0)};  // same distance from ST
    topo.st.push_back({0, 0});
    topo.sr.push_back({30, 0});
    REQUIRE(distance_m(topo.st[0], topo.pr) ==
            doctest::Approx(distance_m(topo.st[0], topo.ed)));
    Rng rng(5);
    const int n = 20000;
    double sum_sp = 0.0, sum_se = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto ch = build_channels(topo, rng).front();
        sum_sp += ch.g_sp;
        sum_se += ch.g_se;
    }
    const double expect = 1.0 / 3600.0;
    const double se = expect / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(sum_sp / n - expect) <= 4.0 * se);
    CHECK(std::abs(sum_se / n - expect) <= 4.0 * se);
}

TEST_CASE("build_channels reproduces bit-identical gains under one seed") {
    Topology topo;
    topo.pt = {0, 0};
    topo.pr = {100, 0};
    topo.ed = {120, 0};
    topo.st.push_back({40, 0});
    topo.sr.push_back({40, 30});
    Rng a(2024), b(2024);
    for (int i = 0; i < 50; ++i) {
        const auto ca = build_channels(topo, a).front();
        const auto cb = build_channels(topo, b).front();
        CHECK(ca.g_ps == cb.g_ps);
        CHECK(ca.g_sp == cb.g_sp);
        CHECK(ca.g_ss == cb.g_ss);
        CHECK(ca.g_se == cb.g_se);
    }
}
