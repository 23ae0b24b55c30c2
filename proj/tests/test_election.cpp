#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "leachsim/election.hpp"
#include "leachsim/engine.hpp"
#include "leachsim/rng.hpp"

using namespace leachsim;

namespace {

// Hand-built state with every node at (0,0): election never looks at
// positions, so these suffice for threshold/eligibility tests.
NetworkState make_state(int n, double p, Protocol proto, double e0 = 0.5) {
    ScenarioConfig cfg;
    cfg.n_nodes = n;
    cfg.e0_joules = e0;
    cfg.proto.p_ch = p;
    cfg.proto.protocol = proto;
    auto res = validate_config(cfg);
    REQUIRE(res.ok());

    NetworkState st;
    st.cfg = res.config->get();
    st.bs = res.config->bs();
    st.nodes.resize(n);
    for (int i = 0; i < n; ++i) {
        st.nodes[i].id = i;
        st.nodes[i].energy = e0;
        st.nodes[i].alive = true;
        st.nodes[i].ch_eligible = true;
    }
    st.epoch.epoch_length = epoch_length_from_p(p);
    st.k_opt = 5.0;
    return st;
}

}  // namespace

TEST_SUITE("election") {

TEST_CASE("epoch length: integral 1/p survives fp noise, fractional rounds up") {
    CHECK(epoch_length_from_p(0.05) == 20);
    CHECK(epoch_length_from_p(0.1) == 10);
    CHECK(epoch_length_from_p(0.4) == 3);   // ceil(2.5)
    CHECK(epoch_length_from_p(0.3) == 4);   // ceil(3.33)
    CHECK(epoch_length_from_p(1.0) == 1);
    CHECK(epoch_length_from_p(0.125) == 8);
}

TEST_CASE("leach threshold hand values") {
    CHECK(leach_threshold(0.1, 0, true) == doctest::Approx(0.1).epsilon(1e-12));
    // last round of the epoch: 0.1 / (1 - 0.9) = 1, clamped exactly
    CHECK(leach_threshold(0.1, 9, true) == 1.0);
    CHECK(leach_threshold(0.1, 5, false) == 0.0);
    // epoch wraps: r = 10 behaves like r = 0
    CHECK(leach_threshold(0.1, 10, true) == leach_threshold(0.1, 0, true));
}

TEST_CASE("rleach threshold: dead energy and ineligibility always give zero") {
    CHECK(rleach_threshold(0.05, 3, true, 0.0, 0.5, 23.9, KoptMode::LiteralClamp, 100) == 0.0);
    CHECK(rleach_threshold(0.05, 3, false, 0.5, 0.5, 23.9, KoptMode::LiteralClamp, 100) == 0.0);
}

TEST_CASE("rleach threshold literal mode hand value") {
    // 0.05 * 0.5 * 23.9 = 0.5975, below the clamp
    CHECK(rleach_threshold(0.05, 0, true, 0.25, 0.5, 23.9, KoptMode::LiteralClamp, 100) ==
          doctest::Approx(0.5975).epsilon(1e-9));
    // full energy saturates: 0.05 * 23.9 > 1
    CHECK(rleach_threshold(0.05, 0, true, 0.5, 0.5, 23.9, KoptMode::LiteralClamp, 100) == 1.0);
}

TEST_CASE("rleach threshold off mode coincides with leach bit for bit") {
    SplitMix64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const double p = 0.01 + rng.next_double() * 0.99;
        const long long r = static_cast<long long>(rng.next_double() * 100);
        const bool elig = rng.next_double() < 0.8;
        const double e = rng.next_double() * 0.5 + 1e-9;
        CHECK(rleach_threshold(p, r, elig, e, 0.5, 23.9, KoptMode::Off, 77) ==
              leach_threshold(p, r, elig));
    }
}

TEST_CASE("rleach threshold is non-decreasing in residual energy") {
    SplitMix64 rng(6);
    for (int i = 0; i < 2000; ++i) {
        const double p = 0.01 + rng.next_double() * 0.5;
        const long long r = static_cast<long long>(rng.next_double() * 60);
        const double e1 = rng.next_double() * 0.5;
        const double e2 = e1 + rng.next_double() * (0.5 - e1);
        const KoptMode mode = i % 2 ? KoptMode::LiteralClamp : KoptMode::Normalized;
        CHECK(rleach_threshold(p, r, true, e1, 0.5, 23.9, mode, 100) <=
              rleach_threshold(p, r, true, e2, 0.5, 23.9, mode, 100));
    }
}

TEST_CASE("thresholds always land in [0, 1]") {
    SplitMix64 rng(9);
    for (int i = 0; i < 5000; ++i) {
        const double p = 1e-3 + rng.next_double() * (1.0 - 1e-3);
        const long long r = static_cast<long long>(rng.next_double() * 200);
        const bool elig = rng.next_double() < 0.9;
        const double e0 = 0.1 + rng.next_double();
        const double e = rng.next_double() * e0;
        const double kopt = 1e-3 + rng.next_double() * 60.0;
        const int n_alive = 1 + static_cast<int>(rng.next_double() * 200);
        const KoptMode mode = static_cast<KoptMode>(i % 3);

        const double tl = leach_threshold(p, r, elig);
        CHECK(tl >= 0.0);
        CHECK(tl <= 1.0);
        const double tr = rleach_threshold(p, r, elig, e, e0, kopt, mode, n_alive);
        CHECK(tr >= 0.0);
        CHECK(tr <= 1.0);
    }
}

TEST_CASE("optimal cluster count: uniform-square mean distance oracle") {
    // Monte Carlo: mean distance from a uniform point in [0,100]^2 to the
    // center. Closed form is (sqrt(2) + asinh(1)) / 6 * 100 = 38.2598...
    SplitMix64 rng(12345);
    double sum = 0.0;
    const int kSamples = 1'000'000;
    for (int i = 0; i < kSamples; ++i) {
        const double dx = rng.next_double() * 100.0 - 50.0;
        const double dy = rng.next_double() * 100.0 - 50.0;
        sum += std::sqrt(dx * dx + dy * dy);
    }
    const double mc_mean = sum / kSamples;
    CHECK(mc_mean == doctest::Approx(38.2598).epsilon(0.005));

    ScenarioConfig cfg{};
    auto res = validate_config(cfg);
    REQUIRE(res.ok());

    // independent arithmetic in pJ units vs the SI implementation
    const double expected = std::sqrt(100.0 / (2.0 * std::numbers::pi)) *
                            std::sqrt(10.0 / 0.0013) * 100.0 / (38.25 * 38.25);
    CHECK(compute_k_opt(*res.config, 38.25) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(compute_k_opt(*res.config, 38.25) == doctest::Approx(23.9).epsilon(5e-3));
    CHECK(compute_k_opt(*res.config, mc_mean) == doctest::Approx(23.9).epsilon(2e-2));
}

TEST_CASE("optimal cluster count: override wins and sqrt(n) scaling holds") {
    ScenarioConfig cfg{};
    cfg.proto.kopt_override = 5.0;
    auto withOverride = validate_config(cfg);
    REQUIRE(withOverride.ok());
    CHECK(compute_k_opt(*withOverride.config, 38.25) == 5.0);

    ScenarioConfig small{};
    ScenarioConfig big{};
    big.n_nodes = 400;
    auto s = validate_config(small);
    auto b = validate_config(big);
    REQUIRE(s.ok());
    REQUIRE(b.ok());
    CHECK(compute_k_opt(*b.config, 38.25) ==
          doctest::Approx(2.0 * compute_k_opt(*s.config, 38.25)).epsilon(1e-12));
}

TEST_CASE("election uses strict less-than against the threshold") {
    auto st = make_state(1, 0.05, Protocol::Leach);
    const double draw_below[] = {0.04};
    CHECK(elect_cluster_heads(st, draw_below) == std::vector<int>{0});

    auto st2 = make_state(1, 0.05, Protocol::Leach);
    const double draw_at[] = {0.05};
    CHECK(elect_cluster_heads(st2, draw_at).empty());
}

TEST_CASE("election respects per-node eligibility under scripted draws") {
    auto st = make_state(3, 0.1, Protocol::Leach);
    st.round = 5;  // mid-epoch, so the served set is not reset
    st.epoch.round = 5;
    st.epoch.served_this_epoch.insert(2);
    st.nodes[2].ch_eligible = false;

    const double draws[] = {0.0, 0.99, 0.0};
    const auto chs = elect_cluster_heads(st, draws);
    CHECK(chs == std::vector<int>{0});
    CHECK(st.epoch.served_this_epoch.count(0) == 1);
    CHECK_FALSE(st.nodes[0].ch_eligible);
    CHECK(st.nodes[1].ch_eligible);
}

TEST_CASE("election is pure given state and draws") {
    auto base = make_state(5, 0.2, Protocol::Leach);
    const double draws[] = {0.1, 0.9, 0.05, 0.5, 0.19};
    auto a = base;
    auto b = base;
    CHECK(elect_cluster_heads(a, draws) == elect_cluster_heads(b, draws));
}

TEST_CASE("dead nodes receive no draw and cannot be elected") {
    auto st = make_state(3, 0.5, Protocol::Leach);
    st.nodes[1].alive = false;
    st.nodes[1].energy = 0.0;
    const double draws[] = {0.0, 0.0};  // one per alive node (ids 0 and 2)
    const auto chs = elect_cluster_heads(st, draws);
    CHECK(chs == std::vector<int>{0, 2});
}

TEST_CASE("epoch fairness: every node serves exactly once per complete epoch") {
    const int n = 30;
    const double p = 0.1;
    auto st = make_state(n, p, Protocol::Leach);
    const long long epoch = st.epoch.epoch_length;
    SplitMix64 rng(77);

    std::vector<int> served_in_epoch(n, 0);
    for (long long r = 0; r < 3 * epoch; ++r) {
        if (r % epoch == 0) served_in_epoch.assign(n, 0);
        st.round = r;
        st.epoch.round = r;
        std::vector<double> draws(n);
        for (auto& d : draws) d = rng.next_double();
        for (int id : elect_cluster_heads(st, draws)) {
            served_in_epoch[id] += 1;
            CHECK(served_in_epoch[id] <= 1);
        }
        if (r % epoch == epoch - 1) {
            // final epoch round has threshold 1: everyone left is elected
            for (int i = 0; i < n; ++i) CHECK(served_in_epoch[i] == 1);
            CHECK(st.epoch.served_this_epoch.size() == static_cast<size_t>(n));
        }
    }
}

TEST_CASE("expected CH count matches n*p at the epoch start") {
    const int n = 100;
    const double p = 0.05;
    auto base = make_state(n, p, Protocol::Leach);
    SplitMix64 rng(31);

    const int kTrials = 10000;
    long long total = 0;
    for (int t = 0; t < kTrials; ++t) {
        auto st = base;
        std::vector<double> draws(n);
        for (auto& d : draws) d = rng.next_double();
        total += static_cast<long long>(elect_cluster_heads(st, draws).size());
    }
    const double mean = static_cast<double>(total) / kTrials;
    // binomial(100, 0.05): sd = 2.1794, three standard errors over 10k trials
    const double three_se = 3.0 * 2.1794 / std::sqrt(static_cast<double>(kTrials));
    CHECK(std::abs(mean - n * p) < three_se);
}

}  // TEST_SUITE
