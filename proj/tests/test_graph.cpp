#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ep/graph.hpp"

using namespace ep;

TEST_CASE("set helpers") {
    CHECK(sorted_unique({3, 1, 3, 2}) == VertexSet{1, 2, 3});
    CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    CHECK(set_intersect({1, 3, 5}, {3, 4, 5}) == VertexSet{3, 5});
    CHECK(set_minus({1, 2, 3}, {2}) == VertexSet{1, 3});
    CHECK(set_contains({1, 4, 9}, 4));
    CHECK(!set_contains({1, 4, 9}, 5));
    CHECK(make_edge(5, 2) == Edge{2, 5});
    CHECK_THROWS_AS(make_edge(3, 3), std::invalid_argument);
}

TEST_CASE("grid construction") {
    auto g = Graph::grid(4, 3);
    CHECK(g.num_vertices() == 12);
    CHECK(g.num_edges() == 4 * 2 + 3 * 3);  // rows*(cols-1) + (rows-1)*cols
    CHECK(g.grid_id(1, 1) == 0);
    CHECK(g.grid_id(4, 3) == 11);
    CHECK(g.grid_coord(7) == std::pair<int, int>{3, 2});
    CHECK(g.grid_row(2) == VertexSet{3, 4, 5});
    CHECK(g.grid_column(3) == VertexSet{2, 5, 8, 11});
    CHECK_THROWS_AS(g.grid_id(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}}).grid_dims(), std::logic_error);
}

TEST_CASE("multiset Z operations") {
    ZFamily z = {{0, 1}, {2}, {0, 1}, {}};
    CHECK(multiset_size(z) == 3);  // empty member not counted
    auto r = restrict_multiset(z, {1, 2});
    CHECK(r == ZFamily{{1}, {2}, {1}, {}});
    auto s = subtract_multiset(z, {0, 2});
    CHECK(s == ZFamily{{1}, {}, {1}, {}});
    CHECK(hits_count({1}, z) == 2);  // positions 0 and 2, duplicates count twice
    CHECK(hit_positions({2}, z) == std::vector<int>{1});
    CHECK(hit_positions({5}, z).empty());
}

TEST_CASE("validate rooted instance") {
    RootedGraph rg;
    rg.graph = Graph(3, {{0, 1}});
    rg.z = {{0}, {2}};
    CHECK_NOTHROW(validate_rooted(rg));
    rg.z.push_back({7});
    CHECK_THROWS_AS(validate_rooted(rg), std::invalid_argument);
}

TEST_CASE("separation validation") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    Separation s;
    s.a_vertices = {0, 1};
    s.b_vertices = {1, 2, 3};
    s.a_edges = {{0, 1}};
    s.b_edges = {{1, 2}, {2, 3}};
    auto chk = validate_separation(g, s);
    CHECK(chk.ok);
    CHECK(chk.order == 1);
    CHECK(s.separator() == VertexSet{1});

    // crossing edge 0-1 with 0 only in A and 1 only in B
    Separation bad;
    bad.a_vertices = {0};
    bad.b_vertices = {1, 2, 3};
    bad.b_edges = {{1, 2}, {2, 3}};
    CHECK(!validate_separation(g, bad).ok);
}

TEST_CASE("disjoint union offsets") {
    auto du = disjoint_union({Graph(2, {{0, 1}}), Graph(3, {{0, 2}})});
    CHECK(du.graph.num_vertices() == 5);
    CHECK(du.component_offsets == std::vector<int>{0, 2});
    CHECK(du.graph.has_edge(0, 1));
    CHECK(du.graph.has_edge(2, 4));
    CHECK(!du.graph.has_edge(1, 2));
}

TEST_CASE("components and induced subgraphs") {
    Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
    auto cc = connected_components(g);
    REQUIRE(cc.size() == 3);
    CHECK(cc[0] == VertexSet{0, 1, 2});
    CHECK(cc[2] == VertexSet{5});
    CHECK(connected_components_within(g, {0, 2, 3, 4}).size() == 3);
    CHECK(is_connected_subset(g, {0, 1, 2}));
    CHECK(!is_connected_subset(g, {0, 2}));

    auto ind = induced_subgraph(g, {1, 2, 4});
    CHECK(ind.graph.num_vertices() == 3);
    CHECK(ind.graph.has_edge(0, 1));  // old 1-2
    CHECK(ind.to_orig == std::vector<int>{1, 2, 4});
    CHECK(ind.from_orig[4] == 2);
    CHECK(ind.from_orig[0] == -1);
}

TEST_CASE("bfs and shortest paths") {
    Graph g = Graph::grid(3, 3);
    auto d = bfs_distances(g, {0});
    CHECK(d[0] == 0);
    CHECK(d[8] == 4);
    auto d2 = bfs_distances(g, {0}, {1, 3});  // cut off the corner
    CHECK(d2[8] == -1);
    auto p = shortest_path_to(g, 0, {8});
    REQUIRE(p.size() == 5);
    CHECK(p.front() == 0);
    CHECK(p.back() == 8);
    CHECK(shortest_path_to(g, 0, {8}, {1, 3}).empty());
}
