#include <doctest.h>

#include "nulldecomp/decomposition.hpp"
#include "nulldecomp/oracles.hpp"
#include "nulldecomp/validate.hpp"
#include "test_util.hpp"

using namespace nulldecomp;
namespace orc = nulldecomp::oracle;

TEST_CASE("enumerate_max_independent_sets") {
    Graph k2 = ndtest::load_fixture("k2.el");
    CHECK(orc::enumerate_max_independent_sets(k2) ==
          std::vector<VertexSet>{{1}, {2}});
    CHECK(orc::enumerate_max_independent_sets(ndtest::path_graph(3)) ==
          std::vector<VertexSet>{{1, 3}});

    SUBCASE("g3 intersections") {
        Graph g3 = ndtest::load_fixture("g3.el");
        auto sets = orc::enumerate_max_independent_sets(g3);
        CHECK(sets.size() == 10);
        CHECK(sets.front().size() == 7);
        VertexSet in_all = sets.front();
        VertexSet in_some;
        for (const auto& s : sets) {
            VertexSet next;
            for (int v : in_all)
                if (s.count(v)) next.insert(v);
            in_all = next;
            in_some.insert(s.begin(), s.end());
        }
        CHECK(in_all == VertexSet{2, 3, 4});
        VertexSet in_none;
        for (int v : g3.vertices())
            if (!in_some.count(v)) in_none.insert(v);
        CHECK(in_none == VertexSet{1});
    }
    SUBCASE("budget error") {
        CHECK_THROWS_AS(orc::enumerate_max_independent_sets(ndtest::path_graph(10), 5),
                        BudgetError);
    }
}

TEST_CASE("zito_decomposition") {
    auto p3 = orc::zito_decomposition(ndtest::path_graph(3));
    CHECK(p3.always == VertexSet{1, 3});
    CHECK(p3.never == VertexSet{2});
    CHECK(p3.sometimes.empty());

    auto k2 = orc::zito_decomposition(ndtest::load_fixture("k2.el"));
    CHECK(k2.always.empty());
    CHECK(k2.never.empty());
    CHECK(k2.sometimes == VertexSet{1, 2});

    auto g3 = orc::zito_decomposition(ndtest::load_fixture("g3.el"));
    CHECK(g3.always == VertexSet{2, 3, 4});
    CHECK(g3.never == VertexSet{1});
    CHECK(g3.sometimes == VertexSet{5, 6, 7, 8, 9, 10, 11, 12, 13});
}

TEST_CASE("gallai_edmonds_decomposition") {
    auto k2 = orc::gallai_edmonds_decomposition(ndtest::load_fixture("k2.el"));
    CHECK(k2.always.empty());
    CHECK(k2.never.empty());
    CHECK(k2.sometimes == VertexSet{1, 2});

    auto p3 = orc::gallai_edmonds_decomposition(ndtest::path_graph(3));
    CHECK(p3.always == VertexSet{1, 3});
    CHECK(p3.never == VertexSet{2});

    auto g3 = orc::gallai_edmonds_decomposition(ndtest::load_fixture("g3.el"));
    CHECK(g3.always == VertexSet{2, 3, 4, 9, 10, 11, 12, 13});
    CHECK(g3.never == VertexSet{1});
    CHECK(g3.sometimes == VertexSet{5, 6, 7, 8});
}

TEST_CASE("nullspace_decomposition_general") {
    SUBCASE("c4 support and core are the whole vertex set") {
        auto c4 = orc::nullspace_decomposition_general(ndtest::load_fixture("c4.el"));
        CHECK(c4.always == VertexSet{1, 2, 3, 4});
        CHECK(c4.never == VertexSet{1, 2, 3, 4});
        CHECK(c4.overlap == VertexSet{1, 2, 3, 4});
        CHECK(c4.sometimes.empty());
    }
    SUBCASE("k2 is all npart") {
        auto k2 = orc::nullspace_decomposition_general(ndtest::load_fixture("k2.el"));
        CHECK(k2.always.empty());
        CHECK(k2.never.empty());
        CHECK(k2.sometimes == VertexSet{1, 2});
        CHECK(k2.overlap.empty());
    }
    SUBCASE("g3 support, core, npart and overlap") {
        auto g3 = orc::nullspace_decomposition_general(ndtest::load_fixture("g3.el"));
        CHECK(g3.always == VertexSet{2, 3, 4, 5, 6, 7, 8});
        CHECK(g3.never == VertexSet{1, 5, 6, 7, 8});
        CHECK(g3.overlap == VertexSet{5, 6, 7, 8});
        CHECK(g3.sometimes == VertexSet{9, 10, 11, 12, 13});
    }
}

TEST_CASE("enumerate_maximum_matchings") {
    CHECK(orc::enumerate_maximum_matchings(ndtest::path_graph(3)).size() == 2);
    CHECK(orc::enumerate_maximum_matchings(ndtest::load_fixture("c6.el")).size() == 2);

    SUBCASE("per-component counts of the g1 decomposition multiply to 2880") {
        Graph g1 = ndtest::load_fixture("g1.el");
        Matching m = maximum_matching(g1, std::get<Bipartition>(bipartition(g1)));
        NullDecomposition d = null_decomposition(g1, m);
        mpz_class product = 1;
        for (const auto& comp : d.s_components)
            product *= static_cast<long>(orc::enumerate_maximum_matchings(comp).size());
        for (const auto& comp : d.n_components)
            product *= static_cast<long>(orc::enumerate_maximum_matchings(comp).size());
        CHECK(product == 2880);
    }
    SUBCASE("budget error") {
        CHECK_THROWS_AS(orc::enumerate_maximum_matchings(ndtest::path_graph(12), 5),
                        BudgetError);
    }
}

TEST_CASE("matching_number_brute agrees with augmenting search") {
    Graph g3 = ndtest::load_fixture("g3.el");
    CHECK(orc::matching_number_brute(g3) == 5);
    Graph g2 = ndtest::load_fixture("g2.el");
    CHECK(orc::matching_number_brute(g2) == 5);
}

TEST_CASE("regression: g2 decompositions coincide outside the class") {
    Graph g2 = ndtest::load_fixture("g2.el");
    CHECK_FALSE(is_certified(check_c4kfree_bipartite(g2)));
    auto zito = orc::zito_decomposition(g2);
    auto ge = orc::gallai_edmonds_decomposition(g2);
    auto ns = orc::nullspace_decomposition_general(g2);
    CHECK(ns.overlap.empty());
    CHECK(zito.always == ge.always);
    CHECK(ge.always == ns.always);
    CHECK(zito.never == ge.never);
    CHECK(ge.never == ns.never);
    CHECK(zito.sometimes == ge.sometimes);
    CHECK(ge.sometimes == ns.sometimes);
}

TEST_CASE("regression: g3 decompositions genuinely differ") {
    Graph g3 = ndtest::load_fixture("g3.el");
    auto zito = orc::zito_decomposition(g3);
    auto ge = orc::gallai_edmonds_decomposition(g3);
    auto ns = orc::nullspace_decomposition_general(g3);
    CHECK(zito.always != ge.always);
    CHECK(ns.always != zito.always);
    CHECK_FALSE(ns.overlap.empty());
}
