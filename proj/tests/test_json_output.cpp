#include <doctest.h>

#include "nulldecomp/decomposition.hpp"
#include "nulldecomp/json_io.hpp"
#include "nulldecomp/null_basis.hpp"
#include "nulldecomp/validate.hpp"
#include "test_util.hpp"

using namespace nulldecomp;

TEST_CASE("report json is schema-stable and byte-deterministic") {
    Graph g1 = ndtest::load_fixture("g1.el");
    std::string once = report_to_json(analysis_report(g1)).dump(2);
    std::string twice = report_to_json(analysis_report(g1)).dump(2);
    CHECK(once == twice);

    auto j = nlohmann::json::parse(once);
    for (const char* key : {"nu", "rank", "nullity", "alpha", "inertia", "m_count",
                            "a_count", "supp", "core", "npart", "s_components",
                            "n_components", "audit"})
        CHECK(j.contains(key));
    CHECK(j["nu"] == 25);
    CHECK(j["m_count"] == 2880);
    CHECK(j["inertia"] == nlohmann::json::array({25, 6, 25}));
    CHECK(j["supp"].size() == 17);
    CHECK(j["n_components"].size() == 5);
    for (const auto& entry : j["audit"]) CHECK(entry["pass"] == true);
}

TEST_CASE("null basis json uses anchor plus sparse p/q entries") {
    Graph p3 = ndtest::path_graph(3);
    Matching m = maximum_matching(p3, std::get<Bipartition>(bipartition(p3)));
    auto j = basis_to_json(null_basis(p3, m));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["anchor"] == 3);
    CHECK(j[0]["entries"]["3"] == "-1");
    CHECK(j[0]["entries"]["1"] == "1");
    CHECK_FALSE(j[0]["entries"].contains("2"));
}
