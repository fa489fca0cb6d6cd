#include <doctest.h>

#include <sstream>

#include "busfactor/edge_list.hpp"
#include "busfactor/errors.hpp"
#include "busfactor/generator.hpp"
#include "busfactor/graph.hpp"
#include "test_support.hpp"

using namespace busfactor;
using namespace busfactor::testing;

TEST_CASE("degree queries") {
    auto g = make_gstar();
    CHECK(g.degree("p1") == 2);
    CHECK(g.degree("t2") == 2);
    CHECK_THROWS_AS(g.degree("p9"), NotFoundError);

    g.add_task("t9");
    CHECK(g.degree("t9") == 0);
}

TEST_CASE("coverage") {
    auto g = make_gstar();
    CHECK(g.coverage() == 3);

    std::vector<std::string> removed{"p1"};
    CHECK(g.remove_people(removed).coverage() == 2);  // t1 becomes isolated

    BipartiteGraph empty;
    empty.add_person("p1");
    empty.add_task("t1");
    empty.add_task("t2");
    CHECK(empty.coverage() == 0);
}

TEST_CASE("max connected tasks") {
    auto g = make_gstar();
    CHECK(g.max_connected_tasks() == 3);

    std::vector<std::string> removed{"p1"};
    CHECK(g.remove_people(removed).max_connected_tasks() == 2);

    BipartiteGraph isolated;
    for (const char* t : {"t1", "t2", "t3"}) isolated.add_task(t);
    CHECK(isolated.max_connected_tasks() == 1);

    BipartiteGraph no_tasks;
    no_tasks.add_person("p1");
    CHECK(no_tasks.max_connected_tasks() == 0);
}

TEST_CASE("remove_people") {
    auto g = make_gstar();

    CHECK(g.remove_people(std::vector<std::string>{}) == g);

    auto without_p1 = g.remove_people(std::vector<std::string>{"p1"});
    CHECK(without_p1.num_people() == 1);
    CHECK(without_p1.num_tasks() == 3);  // tasks persist
    CHECK(without_p1.num_edges() == 2);

    auto nobody = g.remove_people(std::vector<std::string>{"p1", "p2"});
    CHECK(nobody.num_people() == 0);
    CHECK(nobody.num_tasks() == 3);
    CHECK(nobody.num_edges() == 0);

    CHECK_THROWS_AS(g.remove_people(std::vector<std::string>{"t1"}), DomainError);
}

TEST_CASE("duplicate edges and namespace clashes rejected") {
    auto g = make_gstar();
    CHECK_THROWS_AS(g.add_edge("p1", "t1"), DomainError);
    CHECK_THROWS_AS(g.add_person("t1"), DomainError);
    CHECK_THROWS_AS(g.add_task("p1"), DomainError);
}

TEST_CASE("structural features") {
    auto g = make_gstar();
    auto f = g.structural_features();
    CHECK(f.n_edges == 4);
    CHECK(f.density == doctest::Approx(4.0 / 6.0));
    CHECK(f.leaf_people == 0);
    CHECK(f.leaf_tasks == 2);  // t1, t3
    // Person-endpoint degrees are all 2: constant sequence, flagged.
    CHECK_FALSE(f.assortativity_defined);

    SUBCASE("star") {
        BipartiteGraph star;
        star.add_person("p1");
        for (int j = 1; j <= 5; ++j) star.add_task("t" + std::to_string(j));
        for (int j = 0; j < 5; ++j) star.add_edge(0, j);
        auto sf = star.structural_features();
        CHECK(sf.density == doctest::Approx(1.0));
        CHECK(sf.leaf_people == 0);
        CHECK(sf.leaf_tasks == 5);
    }

    SUBCASE("2-regular cycle") {
        BipartiteGraph cyc;
        cyc.add_person("p1");
        cyc.add_person("p2");
        cyc.add_task("t1");
        cyc.add_task("t2");
        cyc.add_edge(0, 0);
        cyc.add_edge(0, 1);
        cyc.add_edge(1, 0);
        cyc.add_edge(1, 1);
        CHECK_FALSE(cyc.structural_features().assortativity_defined);
    }

    SUBCASE("edgeless") {
        BipartiteGraph e;
        e.add_person("p1");
        e.add_task("t1");
        auto ef = e.structural_features();
        CHECK(ef.density == 0.0);
        CHECK_FALSE(ef.assortativity_defined);
    }
}

TEST_CASE("edge list parsing") {
    std::istringstream in("p1 t1\np1 t2\np2 t2\np2 t3\n");
    auto g = read_edge_list(in);
    CHECK(g == make_gstar());

    SUBCASE("empty with header") {
        std::istringstream empty("# people: 0 tasks: 0\n");
        auto e = read_edge_list(empty);
        CHECK(e.num_people() == 0);
        CHECK(e.num_tasks() == 0);
    }

    SUBCASE("task token first") {
        std::istringstream bad("t1 p1\n");
        CHECK_THROWS_AS(read_edge_list(bad), ParseError);
    }

    SUBCASE("duplicate edge carries line number") {
        std::istringstream bad("p1 t1\np1 t1\n");
        try {
            read_edge_list(bad);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }

    SUBCASE("malformed line") {
        std::istringstream bad("p1 t1 extra\n");
        CHECK_THROWS_AS(read_edge_list(bad), ParseError);
    }

    SUBCASE("isolated node declarations") {
        std::istringstream in2("# node: p9\n# node: t9\np1 t1\n");
        auto g2 = read_edge_list(in2);
        CHECK(g2.num_people() == 2);
        CHECK(g2.num_tasks() == 2);
        CHECK(g2.degree("p9") == 0);
        CHECK(g2.degree("t9") == 0);
    }

    SUBCASE("bad node declaration") {
        std::istringstream bad("# node: x9\n");
        CHECK_THROWS_AS(read_edge_list(bad), ParseError);
    }
}

TEST_CASE("edge list round trip on random graphs") {
    Rng rng(20240901);
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph(rng, 15, 15);
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        auto back = read_edge_list(in);
        CHECK(back == g);
    }
}

TEST_CASE("degree sums match edge count") {
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        auto g = random_graph(rng, 12, 12);
        std::size_t sum_p = 0, sum_t = 0;
        for (const auto& id : g.people()) sum_p += g.degree(id);
        for (const auto& id : g.tasks()) sum_t += g.degree(id);
        CHECK(sum_p == g.num_edges());
        CHECK(sum_t == g.num_edges());
    }
}

TEST_CASE("metrics are monotone under people removal") {
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        auto g = random_graph(rng, 10, 10);
        // random person subset
        std::vector<std::string> subset;
        for (const auto& id : g.people()) {
            if (uniform01(rng) < 0.4) subset.push_back(id);
        }
        auto h = g.remove_people(subset);
        CHECK(h.coverage() <= g.coverage());
        CHECK(h.max_connected_tasks() <= g.max_connected_tasks());
        CHECK(g.max_connected_tasks() <= g.num_tasks());
        CHECK(g.coverage() <= g.num_tasks());
    }
}
