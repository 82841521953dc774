#include "vcsim/hose.hpp"
#include "vcsim/topology.hpp"

#include <doctest.h>

#include <random>

using namespace vcsim;

TEST_CASE("build: paper-scale tree has 16000 hosts = 128k small-VM slots") {
    FatTreeSpec spec{10, 40, 40};
    CHECK(spec.host_count() == 16000);
    CHECK(spec.total_compute() == Rational(16000));
    CHECK(spec.total_compute() / Rational(1, 8) == Rational(128000));
    FatTree tree = build(spec);
    CHECK(tree.at_full_capacity());
}

TEST_CASE("build: Figure 2 topology is one rack of six hosts") {
    FatTreeSpec spec{1, 1, 6};
    FatTree tree = build(spec);
    CHECK(spec.host_count() == 6);
    CHECK(spec.rack_count() == 1);
    CHECK(tree.rack_bw_residual(0) == Rational(6));
}

TEST_CASE("build: oversubscription shapes the uplink capacities") {
    FatTreeSpec spec{2, 40, 40, Rational(1), Rational(1), Rational(4), Rational(1)};
    CHECK(spec.rack_uplink_capacity() == Rational(10));  // 40 * 1 / 4
    CHECK(spec.pod_uplink_capacity() == Rational(400));  // 40 * 10 / 1

    FatTreeSpec deep{2, 8, 16, Rational(1), Rational(1), Rational(4), Rational(2)};
    CHECK(deep.rack_uplink_capacity() == Rational(4));
    CHECK(deep.pod_uplink_capacity() == Rational(16));
}

TEST_CASE("capacity formulas hold for randomized specs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        FatTreeSpec spec;
        spec.pods = 1 + int(rng() % 4);
        spec.racks_per_pod = 1 + int(rng() % 6);
        spec.hosts_per_rack = 1 + int(rng() % 10);
        spec.oversub_tor_agg = Rational(1 + std::int64_t(rng() % 8));
        spec.oversub_agg_core = Rational(1 + std::int64_t(rng() % 4));
        FatTree tree = build(spec);
        CHECK(tree.rack_bw_residual(0) ==
              spec.host_link_capacity * spec.hosts_per_rack / spec.oversub_tor_agg);
        CHECK(tree.pod_bw_residual(0) ==
              spec.rack_uplink_capacity() * spec.racks_per_pod / spec.oversub_agg_core);
    }
}

TEST_CASE("reserve then release restores the tree bit-identically") {
    FatTree tree = build(FatTreeSpec{1, 1, 6});
    VCRequest req{1, 9, Rational(2, 6), Rational(1, 6)};
    const auto p = hose::make_placement(1, {{0, 3}, {1, 3}, {2, 3}}, req, tree);
    tree.reserve(p);
    CHECK_FALSE(tree.at_full_capacity());
    tree.release(p);
    CHECK(tree.at_full_capacity());
}

TEST_CASE("dense VC2 reservation leaves no slots but half the bandwidth") {
    FatTree tree = build(FatTreeSpec{1, 1, 6});
    VCRequest vc2{2, 9, Rational(2, 6), Rational(1, 6)};
    tree.reserve(hose::make_placement(2, {{0, 3}, {1, 3}, {2, 3}}, vc2, tree));
    for (int h = 0; h < 3; ++h) {
        CHECK(tree.host_compute_residual(h) == Rational(0));
        CHECK(tree.host_bw_residual(h) == Rational(1, 2));
    }
    for (int h = 3; h < 6; ++h) {
        CHECK(tree.host_compute_residual(h) == Rational(1));
        CHECK(tree.host_bw_residual(h) == Rational(1));
    }
}

TEST_CASE("reserve is all-or-nothing on capacity violation") {
    FatTree tree = build(FatTreeSpec{1, 1, 2});
    VCRequest req{3, 7, Rational(1, 6), Rational(1, 8)};
    // 7/6 compute on one fresh host does not fit
    const auto p = hose::make_placement(3, {{0, 7}}, req, tree);
    CHECK_THROWS_AS(tree.reserve(p), std::runtime_error);
    CHECK(tree.at_full_capacity());
}

TEST_CASE("double release and double reserve are errors") {
    FatTree tree = build(FatTreeSpec{1, 1, 2});
    VCRequest req{4, 2, Rational(1, 4), Rational(1, 8)};
    const auto p = hose::make_placement(4, {{0, 2}}, req, tree);
    tree.reserve(p);
    CHECK_THROWS_AS(tree.reserve(p), std::runtime_error);
    tree.release(p);
    CHECK_THROWS_AS(tree.release(p), std::runtime_error);
    CHECK(tree.at_full_capacity());
}

TEST_CASE("randomized reserve/release sequences conserve capacity") {
    std::mt19937_64 rng(17);
    FatTreeSpec spec{2, 3, 4, Rational(1), Rational(1), Rational(2), Rational(1)};
    FatTree tree = build(spec);
    const Rational vals[] = {Rational(1, 8), Rational(1, 4), Rational(1, 2)};

    std::vector<std::pair<Placement, VCRequest>> held;
    std::int64_t next_id = 0;
    for (int step = 0; step < 2000; ++step) {
        const bool do_release = !held.empty() && (rng() % 2 == 0);
        if (do_release) {
            const std::size_t i = rng() % held.size();
            tree.release(held[i].first);
            held.erase(held.begin() + i);
        } else {
            VCRequest req;
            req.id = next_id++;
            req.n = 1 + int(rng() % 6);
            req.c = vals[rng() % 3];
            req.b = vals[rng() % 3];
            std::vector<std::pair<int, int>> counts;
            int left = req.n;
            int h = int(rng() % spec.host_count());
            while (left > 0) {
                const int k = 1 + int(rng() % left);
                counts.emplace_back(h, k);
                left -= k;
                h = (h + 1 + int(rng() % 3)) % spec.host_count();
                for (const auto& [hh, kk] : counts)
                    if (hh == h) h = (h + 1) % spec.host_count();
            }
            auto p = hose::make_placement(req.id, counts, req, tree);
            if (hose::validate(p, req, tree).feasible()) {
                tree.reserve(p);
                held.emplace_back(std::move(p), req);
            }
        }
        // residuals never negative, never above capacity
        for (int hh = 0; hh < spec.host_count(); ++hh) {
            CHECK(tree.host_compute_residual(hh) >= Rational(0));
            CHECK(tree.host_bw_residual(hh) <= spec.host_link_capacity);
        }
    }
    for (const auto& [p, req] : held) tree.release(p);
    CHECK(tree.at_full_capacity());
}
