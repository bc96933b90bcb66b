#include <doctest.h>

#include "nulldecomp/generator.hpp"
#include "nulldecomp/validate.hpp"
#include "test_util.hpp"

using namespace nulldecomp;

TEST_CASE("enumerate_cycle_lengths") {
    CHECK(std::get<std::set<int>>(enumerate_cycle_lengths(ndtest::path_graph(3), 100))
              .empty());
    CHECK(std::get<std::set<int>>(enumerate_cycle_lengths(ndtest::cycle_graph(6), 100)) ==
          std::set<int>{6});
    // independent brute-force confirmation on the 7-vertex component
    Graph h = ndtest::load_fixture("h.el");
    CHECK(std::get<std::set<int>>(enumerate_cycle_lengths(h, 100)) == std::set<int>{6});
    CHECK(ndtest::naive_cycle_lengths(h) == std::set<int>{6});

    SUBCASE("cap returns Inconclusive") {
        Graph k4 = Graph::from_edge_list(
            {}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
        auto r = enumerate_cycle_lengths(k4, 3);  // K4 has 7 elementary cycles
        CHECK(std::holds_alternative<Inconclusive>(r));
        CHECK(std::get<std::set<int>>(enumerate_cycle_lengths(k4, 7)) ==
              std::set<int>{3, 4});
    }
}

TEST_CASE("check_c4kfree_bipartite") {
    SUBCASE("c4 rejected with a length-4 witness") {
        auto r = check_c4kfree_bipartite(ndtest::load_fixture("c4.el"));
        auto rej = std::get<Rejection>(r);
        CHECK_FALSE(rej.odd_cycle);
        CHECK(rej.witness.length == 4);
        CHECK(rej.witness.cycle == std::vector<int>{1, 2, 3, 4, 1});
    }
    SUBCASE("c6 certified") {
        auto r = check_c4kfree_bipartite(ndtest::load_fixture("c6.el"));
        auto cert = std::get<Certificate>(r);
        CHECK(cert.cycle_lengths == std::set<int>{6});
    }
    SUBCASE("g3 rejected deterministically on the odd cycle") {
        Graph g3 = ndtest::load_fixture("g3.el");
        auto r1 = check_c4kfree_bipartite(g3);
        auto r2 = check_c4kfree_bipartite(g3);
        auto rej1 = std::get<Rejection>(r1);
        auto rej2 = std::get<Rejection>(r2);
        CHECK(rej1.odd_cycle);
        CHECK(rej1.witness.cycle == rej2.witness.cycle);
        CHECK(witness_is_valid(g3, rej1.witness));
        CHECK(rej1.witness.length % 2 == 1);
    }
    SUBCASE("g1 certified") {
        auto r = check_c4kfree_bipartite(ndtest::load_fixture("g1.el"));
        auto cert = std::get<Certificate>(r);
        CHECK(cert.cycle_lengths == std::set<int>{6, 10});
        CHECK(cert.cycle_count == 6);
    }
}

TEST_CASE("bipartite instances only produce even cycle lengths") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenSpec spec{10, 3, Family::bipartite_any, seed};
        Graph g = generate(spec);
        auto lengths = std::get<std::set<int>>(enumerate_cycle_lengths(g, 100000));
        for (int l : lengths) CHECK(l % 2 == 0);
    }
}

TEST_CASE("rejections on random near-trees are confirmed by brute force") {
    int rejected_bipartite = 0, rejected_odd = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        for (Family family : {Family::bipartite_any, Family::general}) {
            GenSpec spec{10, 2, family, seed};
            Graph g = generate(spec);
            auto r = check_c4kfree_bipartite(g);
            auto* rej = std::get_if<Rejection>(&r);
            if (!rej) continue;
            CHECK(witness_is_valid(g, rej->witness));
            auto naive = ndtest::naive_cycle_lengths(g);
            if (rej->odd_cycle) {
                ++rejected_odd;
                CHECK(rej->witness.length % 2 == 1);
                CHECK(naive.count(rej->witness.length));
            } else {
                ++rejected_bipartite;
                CHECK(rej->witness.length % 4 == 0);
                bool naive_has_4k = false;
                for (int l : naive) naive_has_4k = naive_has_4k || l % 4 == 0;
                CHECK(naive_has_4k);
            }
        }
    }
    CHECK(rejected_bipartite > 0);
    CHECK(rejected_odd > 0);
}
