#include <doctest.h>

#include "nulldecomp/decomposition.hpp"
#include "nulldecomp/generator.hpp"
#include "nulldecomp/null_basis.hpp"
#include "nulldecomp/validate.hpp"
#include "test_util.hpp"

using namespace nulldecomp;

namespace {

Matching canonical(const Graph& g) {
    return maximum_matching(g, std::get<Bipartition>(bipartition(g)));
}

// a known null vector of the 56-vertex fixture with support in two components
RationalVector known_null_vector(const Graph& g1) {
    RationalVector x(g1.vertices());
    for (int v : {2, 8, 25, 27}) x.set(v, 1);
    for (int v : {3, 7, 9, 26, 28}) x.set(v, -1);
    x.set(10, 2);
    return x;
}

}  // namespace

TEST_CASE("null_vector_for") {
    SUBCASE("isolated vertex gives its own indicator") {
        Graph g = parse_edge_list("5\n1 2\n");
        Matching m = canonical(g);
        RationalVector z = null_vector_for(g, m, 5);
        CHECK(z.at(5) == -1);
        CHECK(z.support() == VertexSet{5});
    }
    SUBCASE("p3 anchored at 3") {
        Graph p3 = ndtest::path_graph(3);
        Matching m = Matching::from_edges(p3, {{1, 2}});
        RationalVector z = null_vector_for(p3, m, 3);
        CHECK(z.at(3) == -1);
        CHECK(z.at(1) == 1);
        CHECK(z.at(2) == 0);
    }
    SUBCASE("g1 anchored at 7 reproduces the worked vector") {
        Graph g1 = ndtest::load_fixture("g1.el");
        Matching m1 = ndtest::load_fixture_matching(g1, "g1_m1.el");
        RationalVector z = null_vector_for(g1, m1, 7);
        CHECK(z.at(7) == -1);
        CHECK(z.at(4) == 0);
        CHECK(z.at(5) == 0);
        CHECK(z.at(6) == 0);
        CHECK(z.at(8) == 1);
        CHECK(z.at(9) == -1);
        CHECK(z.at(10) == 2);
        CHECK(z.support() == VertexSet{7, 8, 9, 10});
    }
    SUBCASE("saturated anchor is an error") {
        Graph p3 = ndtest::path_graph(3);
        Matching m = Matching::from_edges(p3, {{1, 2}});
        CHECK_THROWS_AS(null_vector_for(p3, m, 1), std::invalid_argument);
    }
}

TEST_CASE("null_basis") {
    SUBCASE("k2 basis is empty") {
        Graph k2 = ndtest::load_fixture("k2.el");
        NullBasis nb = null_basis(k2, canonical(k2));
        CHECK(nb.vectors.empty());
    }
    SUBCASE("star k13 anchors both free leaves") {
        Graph k13 = ndtest::load_fixture("k13.el");
        Matching m = Matching::from_edges(k13, {{0, 1}});
        NullBasis nb = null_basis(k13, m);
        CHECK(nb.anchors == std::vector<int>{2, 3});
        for (const auto& z : nb.vectors) CHECK(z.at(1) == 1);
    }
    SUBCASE("g1 with the fixture matching") {
        Graph g1 = ndtest::load_fixture("g1.el");
        Matching m1 = ndtest::load_fixture_matching(g1, "g1_m1.el");
        NullBasis nb = null_basis(g1, m1);
        CHECK(nb.anchors == std::vector<int>{3, 7, 13, 21, 24, 28});
        CHECK(nb.vectors.size() == 6);
        // anchor submatrix is -identity
        for (std::size_t i = 0; i < nb.vectors.size(); ++i)
            for (std::size_t j = 0; j < nb.anchors.size(); ++j)
                CHECK(nb.vectors[i].at(nb.anchors[j]) == (i == j ? -1 : 0));
    }
}

TEST_CASE("lift and restrict") {
    Graph p3 = ndtest::path_graph(3);
    Graph p5 = ndtest::path_graph(5);

    SUBCASE("lift of p3 kernel vector into p5") {
        RationalVector v(p3.vertices());
        v.set(1, 1);
        v.set(3, -1);
        RationalVector lifted = lift_to(v, p5);
        CHECK(lifted.labels() == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(lifted.at(1) == 1);
        CHECK(lifted.at(4) == 0);
        CHECK(lifted.at(5) == 0);
    }
    SUBCASE("label mismatch errors") {
        RationalVector v(p5.vertices());
        CHECK_THROWS_AS(lift_to(v, p3), std::out_of_range);
        RationalVector small(p3.vertices());
        CHECK_THROWS_AS(restrict_to(small, p5), std::out_of_range);
    }
    SUBCASE("lifting the H-component vector lands in Null(G1)") {
        Graph g1 = ndtest::load_fixture("g1.el");
        Graph h = induced_subgraph(g1, {4, 5, 6, 7, 8, 9, 10});
        Matching mh = Matching::from_edges(h, {{4, 8}, {5, 9}, {6, 10}});
        RationalVector y = null_vector_for(h, mh, 7);
        RationalVector z = lift_to(y, g1);
        RationalMatrix a = adjacency_matrix(g1, g1.vertices());
        CHECK(multiply(a, z).is_zero());
    }
    SUBCASE("known vector restricts into Null(C_S) and to zero on C_N") {
        Graph g1 = ndtest::load_fixture("g1.el");
        RationalVector x1 = known_null_vector(g1);
        CHECK(multiply(adjacency_matrix(g1, g1.vertices()), x1).is_zero());
        NullDecomposition d = null_decomposition(g1, canonical(g1));
        RationalVector down_s = restrict_to(x1, d.c_s);
        CHECK(multiply(adjacency_matrix(d.c_s, d.c_s.vertices()), down_s).is_zero());
        RationalVector down_n = restrict_to(x1, d.c_n);
        CHECK(down_n.is_zero());
    }
}

TEST_CASE("constructed basis spans the algebraic kernel on random instances") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        GenSpec spec{13, 2, Family::c4kfree, seed};
        Graph g = random_c4kfree(spec);
        Matching m = canonical(g);
        NullBasis nb = null_basis(g, m);
        auto algebraic = nullspace_basis(adjacency_matrix(g, g.vertices()));
        REQUIRE(nb.vectors.size() == algebraic.size());
        for (const auto& z : nb.vectors) CHECK(in_span(algebraic, z));
        for (const auto& v : algebraic) CHECK(in_span(nb.vectors, v));
    }
}
