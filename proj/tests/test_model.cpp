#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ep/counterexample.hpp"
#include "ep/model.hpp"

using namespace ep;

TEST_CASE("model validation catches defects") {
    Graph g = Graph::grid(2, 3);
    Graph h = *pattern_preset("K2");
    ModelFunction m;
    m.branch_sets[0] = {0};
    m.branch_sets[1] = {1, 2};
    m.branch_edges[0] = {0, 1};
    CHECK(validate_model_function(g, h, m).ok);

    auto bad = m;
    bad.branch_sets[1] = {1, 5};  // disconnected in the host
    CHECK(!validate_model_function(g, h, bad).ok);

    bad = m;
    bad.branch_sets[1] = {0, 1};  // overlaps branch set of 0
    CHECK(!validate_model_function(g, h, bad).ok);

    bad = m;
    bad.branch_edges[0] = {0, 4};  // not an edge between the two branch sets
    CHECK(!validate_model_function(g, h, bad).ok);

    bad = m;
    bad.branch_edges.clear();  // pattern edge unrealized
    CHECK(!validate_model_function(g, h, bad).ok);
}

TEST_CASE("pattern presets") {
    CHECK(pattern_preset("K1")->num_vertices() == 1);
    CHECK(pattern_preset("K2")->num_edges() == 1);
    CHECK(pattern_preset("P3")->num_vertices() == 3);
    CHECK(pattern_preset("C4")->num_edges() == 4);
    CHECK(pattern_preset("2K1")->num_vertices() == 2);
    CHECK(pattern_preset("3K1")->num_vertices() == 3);
    CHECK(pattern_preset("2K2")->num_edges() == 2);
    CHECK(!pattern_preset("K7").has_value());
}

TEST_CASE("single-vertex pattern needs one connected triple-hitter") {
    // 3x3 grid, Z members are the mid-edge vertices of three sides
    auto rg = figure1_instance(3);
    CHECK(rg.z == ZFamily{{3}, {1}, {5}});
    Budget b;
    auto m = find_hzl_model(rg, *pattern_preset("K1"), 3, b);
    REQUIRE(m.has_value());
    CHECK(validate_model_function(rg.graph, *pattern_preset("K1"), *m).ok);
    CHECK(hits_count(m->image_vertices(), rg.z) == 3);
    // no model confined to the bottom row
    CHECK(!has_hzl_model(rg, *pattern_preset("K1"), 3, b, {6, 7, 8}));
}

TEST_CASE("cycle pattern in a grid") {
    RootedGraph rg;
    rg.graph = Graph::grid(3, 3);
    rg.z = {{0}, {8}};
    Budget b;
    auto m = find_hzl_model(rg, *pattern_preset("C4"), 2, b);
    REQUIRE(m.has_value());
    CHECK(validate_model_function(rg.graph, *pattern_preset("C4"), *m).ok);
    CHECK(hits_count(m->image_vertices(), rg.z) >= 2);
    // C4 needs a cycle; a tree host has none
    RootedGraph tree;
    tree.graph = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    tree.z = {{0}, {4}};
    CHECK(!has_hzl_model(tree, *pattern_preset("C4"), 0, b));
}

TEST_CASE("pure witness validation") {
    RootedGraph rg;
    rg.graph = Graph(6, {{0, 1}, {3, 4}});
    rg.z = {{0}, {4}};
    Graph h = *pattern_preset("2K2");
    Budget b;
    auto w = find_pure_model(rg, h, 2, b);
    REQUIRE(w.has_value());
    CHECK(validate_pure_witness(rg, h, 2, *w).ok);

    // tampering: alpha claiming a position the component misses
    auto bad = *w;
    for (auto& [c, ps] : bad.alpha) ps = {0, 1};
    CHECK(!validate_pure_witness(rg, h, 2, bad).ok);
}

TEST_CASE("pure component subsets and assignments") {
    RootedGraph rg;
    rg.graph = Graph(4, {{0, 1}, {2, 3}});
    rg.z = {{0}, {1}};
    Graph h = *pattern_preset("2K1");
    Budget b;
    auto w = find_pure_model(rg, h, 2, b);
    REQUIRE(w.has_value());
    CHECK(validate_pure_witness(rg, h, 2, *w).ok);

    // duplicate singleton member: a single chosen component whose branch set
    // contains the shared vertex can carry both positions
    RootedGraph rg2;
    rg2.graph = Graph(4, {{2, 3}});
    rg2.z = {{0}, {0}};
    auto w2 = find_pure_model(rg2, h, 2, b);
    REQUIRE(w2.has_value());
    CHECK(validate_pure_witness(rg2, h, 2, *w2).ok);
    std::vector<int> claimed;
    for (const auto& [c, ps] : w2->alpha)
        claimed.insert(claimed.end(), ps.begin(), ps.end());
    CHECK(sorted_unique(claimed) == VertexSet{0, 1});
    // disjoint members served by two disjoint components
    RootedGraph rg3 = rg2;
    rg3.z = {{0}, {2}};
    auto w3 = find_pure_model(rg3, h, 2, b);
    REQUIRE(w3.has_value());
    CHECK(validate_pure_witness(rg3, h, 2, *w3).ok);
    CHECK(w3->component_indices.size() >= 1);
}

TEST_CASE("saturate keeps validity and covers the region") {
    Graph g = Graph::grid(3, 3);
    ModelFunction m;
    m.branch_sets[0] = {0};
    auto region = VertexSet{0, 1, 2, 3, 6};
    auto s = saturate_model(g, m, region);
    CHECK(s.image_vertices() == region);
    CHECK(validate_model_function(g, *pattern_preset("K1"), s).ok);
}

TEST_CASE("budget exhaustion raises") {
    RootedGraph rg;
    rg.graph = Graph::grid(3, 3);
    rg.z = {{0}, {8}};
    Budget tiny{3};
    CHECK_THROWS_AS(find_hzl_model(rg, *pattern_preset("C4"), 2, tiny), BudgetExceeded);
}
