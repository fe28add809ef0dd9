#include <doctest.h>

#include "fixtures.hpp"
#include "mesh_fixtures.hpp"
#include "semideco/dot_export.hpp"
#include "semideco/errors.hpp"
#include "semideco/json_io.hpp"
#include "semideco/suite.hpp"

using namespace semideco;

TEST_SUITE_BEGIN("io_and_suite");

TEST_CASE("space json round-trip") {
    const FiniteSpace arc = fixtures::arc_space();
    const FiniteSpace back = space_from_json(space_to_json(arc));
    CHECK(back.point_names() == arc.point_names());
    for (int a = 0; a < arc.size(); ++a)
        for (int b = 0; b < arc.size(); ++b) CHECK(back.le(a, b) == arc.le(a, b));
}

TEST_CASE("semidec json round-trip and input validation") {
    const SemiDecomposition f = fixtures::semiarc();
    const SemiDecomposition back = semidec_from_json(semidec_to_json(f));
    for (int x = 0; x < f.space().size(); ++x) CHECK(back.element(x) == f.element(x));

    SUBCASE("preorder input closes generators") {
        Json j;
        j["space"] = space_to_json(fixtures::chain_space());
        j["preorder"] = Json::array({{"c", "p"}, {"p", "r"}});
        const SemiDecomposition g = semidec_from_json(j);
        const int c = g.space().require_index("c"), r = g.space().require_index("r");
        CHECK(g.element(r).contains(c));
    }
    SUBCASE("mutually exclusive keys") {
        Json j = semidec_to_json(f);
        j["preorder"] = Json::array();
        CHECK_THROWS_AS(semidec_from_json(j), input_error);
        j.erase("preorder");
        j.erase("elements");
        CHECK_THROWS_AS(semidec_from_json(j), input_error);
    }
    SUBCASE("unknown points are named in the diagnostic") {
        Json j = semidec_to_json(f);
        j["elements"]["o"] = Json::array({"o", "nope"});
        CHECK_THROWS_AS(semidec_from_json(j), input_error);
    }
    SUBCASE("missing element entry") {
        Json j = semidec_to_json(f);
        j["elements"].erase("t");
        CHECK_THROWS_AS(semidec_from_json(j), input_error);
    }
}

TEST_CASE("geometry adapters parse their documented formats") {
    SUBCASE("simplicial maximal faces") {
        const Json j = Json::parse(R"({"simplices": [[0,1,2],[1,2,3]]})");
        const SimplicialComplex k = simplicial_from_json(j);
        CHECK(k.simplices().size() == 4 + 5 + 2);
    }
    SUBCASE("digraph with parallel edges") {
        const Json j =
            Json::parse(R"({"vertices": ["a","b"], "edges": [["a","b"],["a","b"]]})");
        const Digraph g = digraph_from_json(j);
        CHECK(g.edges.size() == 2);
        CHECK(g.edges[0] == g.edges[1]);
    }
    SUBCASE("mesh with ids and values") {
        Json j;
        j["vertices"] = Json::array();
        const TriSurfaceFn octa = mesh::octahedron();
        for (int v = 0; v < octa.vertex_count(); ++v)
            j["vertices"].push_back({{"id", v}, {"f", octa.value(v)}});
        j["triangles"] = Json::array();
        for (const auto& tri : octa.triangles())
            j["triangles"].push_back({tri[0], tri[1], tri[2]});
        const TriSurfaceFn back = surface_from_json(j);
        CHECK(back.vertex_count() == octa.vertex_count());
        CHECK(back.genus() == 0);
    }
    SUBCASE("malformed input") {
        CHECK_THROWS_AS(simplicial_from_json(Json::parse(R"({"simplices": [[]]})")),
                        input_error);
        CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"vertices": [0]})")),
                        input_error);
        CHECK_THROWS_AS(surface_from_json(Json::parse(R"({"vertices": []})")),
                        input_error);
    }
}

TEST_CASE("reports carry the headline values") {
    SUBCASE("analyze on the arc fixture") {
        const Json j = analyze_report(fixtures::arc_singletons());
        CHECK(j["morse"]["ok"] == Json(true));
        CHECK(j["morse"]["vertices"].size() == 2);
        CHECK(j["morse"]["edges"] == Json::array({Json::array({0, 1})}));
        CHECK(j["quotient_relation_ok"] == Json(true));
    }
    SUBCASE("analyze surfaces a failed Morse construction as data") {
        const Json j = analyze_report(fixtures::uncoverable_fixture());
        CHECK(j["morse"]["ok"] == Json(false));
        CHECK(j["morse"]["failures"].size() == 1);
        CHECK(j["morse"]["failures"][0]["point"] == Json("x"));
        CHECK(j["invariance"]["overall"] == Json(false));
    }
    SUBCASE("torus reeb report") {
        const Json j = reeb_report(mesh::csaszar_torus());
        CHECK(j["comparison"]["weak_cells"] == Json(7));
        CHECK(j["comparison"]["reeb_cells"] == Json(8));
        CHECK(j["comparison"]["isomorphic_as_multigraphs"] == Json(false));
        CHECK(j["merge_tree"]["joins"] == Json(0));
    }
}

TEST_CASE("dot exports") {
    SUBCASE("semiarc half-edge is doubly bordered") {
        const SemiDecomposition f = fixtures::semiarc();
        const MorseOutcome m = morse_hypergraph(f);
        REQUIRE(m.ok());
        const std::string dot = morse_dot(f.space(), *m.assignment);
        CHECK(dot.find("peripheries=2") != std::string::npos);
        CHECK(dot.find("graph morse") != std::string::npos);
    }
    SUBCASE("arc hyper-edge expands through a square node") {
        const SemiDecomposition f = fixtures::arc_singletons();
        const MorseOutcome m = morse_hypergraph(f);
        const std::string dot = morse_dot(f.space(), *m.assignment);
        CHECK(dot.find("shape=square") != std::string::npos);
        CHECK(dot.find("peripheries=2") == std::string::npos);
        CHECK(dot.find("v0 -- h0") != std::string::npos);
        CHECK(dot.find("v1 -- h0") != std::string::npos);
    }
    SUBCASE("orbit space renders edge classes as arrows") {
        Digraph g = Digraph::make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
        const std::string dot = orbit_space_dot(g, orbit_space(g));
        CHECK(dot.find("->") != std::string::npos);
        CHECK(dot.find("digraph orbit_space") != std::string::npos);
    }
    SUBCASE("reeb export holds both clusters") {
        const TriSurfaceFn s = mesh::octahedron();
        const std::string dot =
            reeb_dot(s, weak_element_space(s), reeb_graph(s));
        CHECK(dot.find("cluster_weak") != std::string::npos);
        CHECK(dot.find("cluster_reeb") != std::string::npos);
    }
}

TEST_CASE("suite determinism and replayability") {
    SuiteConfig config;
    config.seed = 99;
    config.count = 150;
    config.max_points = 8;
    const SuiteReport a = run_suite(config);
    const SuiteReport b = run_suite(config);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.ok());

    // every persisted finding replays: the instance parses and the monitored
    // statement still fails on it
    for (const SuiteFinding& finding : a.findings) {
        const SemiDecomposition f = semidec_from_json(finding.instance);
        if (finding.property == "morse_exists_general") {
            CHECK_FALSE(morse_hypergraph(f).ok());
        } else if (finding.property == "q_invariant_general") {
            CHECK_FALSE(is_invariant_set(f, quasi_recurrent(f)));
        } else if (finding.property == "raw_relation_transitive") {
            CHECK((!abstract_elements(f).raw_relation_transitive ||
                   !abstract_weak_elements(f).raw_relation_transitive));
        } else if (finding.property == "decomposition_conditions_2_3") {
            const Classification cls = classify_points(f);
            bool holds = is_invariant_set(f, cls.cl) && is_invariant_set(f, cls.p) &&
                         is_invariant_set(f, cls.r);
            for (int x : cls.p.items())
                if (!is_invariant_set(f, f.derived_set(x))) holds = false;
            CHECK_FALSE(holds);
        }
    }
}

TEST_CASE("suite generator mix reaches every instance family") {
    std::mt19937_64 rng(3);
    int decompositions = 0, invariant = 0, total = 200;
    for (int i = 0; i < total; ++i) {
        const SemiDecomposition f = random_semidecomposition(rng, 8);
        if (is_decomposition(f)) ++decompositions;
        if (check_invariance(f).overall) ++invariant;
    }
    CHECK(decompositions > 30);
    CHECK(decompositions < total);
    CHECK(invariant > 30);
}

TEST_SUITE_END();
