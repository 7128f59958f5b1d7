#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ep/counterexample.hpp"

using namespace ep;

TEST_CASE("single component family shape") {
    auto inst = negative_family(*pattern_preset("K1"), 3, 2);
    CHECK(inst.t == 1);
    CHECK(inst.component_orders == std::vector<int>{8});  // (3-1+2)*2
    CHECK(inst.rg.graph.num_vertices() == 64);
    REQUIRE(inst.rg.z.size() == 3);
    // width-2 consecutive first-row slices
    CHECK(inst.rg.z[0] == VertexSet{0, 1});
    CHECK(inst.rg.z[1] == VertexSet{2, 3});
    CHECK(inst.rg.z[2] == VertexSet{4, 5});
}

TEST_CASE("two component family shape") {
    auto inst = negative_family(*pattern_preset("2K1"), 4, 2);
    CHECK(inst.t == 2);
    CHECK(inst.component_orders == std::vector<int>{8, 2});
    CHECK(inst.rg.graph.num_vertices() == 64 + 4);
    REQUIRE(inst.rg.z.size() == 4);
    CHECK(inst.rg.z[2] == VertexSet{4, 5});
    // last member: full first row of the small companion grid
    CHECK(inst.rg.z[3] == VertexSet{64, 65});
    CHECK(connected_components(inst.rg.graph).size() == 2);
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS_AS(negative_family(*pattern_preset("K1"), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(negative_family(*pattern_preset("2K1"), 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(negative_family(*pattern_preset("K1"), 3, 0), std::invalid_argument);
}

TEST_CASE("threshold formula frozen") {
    CHECK(negative_threshold(1, 0) == 16);
    CHECK(negative_threshold(1, 1) == 34);
    CHECK(negative_threshold(2, 3) == 132);
}

TEST_CASE("small instance verified with the exact packing oracle") {
    // n=1: 4x4 grid, 16 vertices, inside the exact-packing range
    auto inst = negative_family(*pattern_preset("K1"), 3, 1);
    Budget b{50'000'000};
    auto rep = verify_negative(inst, *pattern_preset("K1"), 3, 0, b);
    CHECK(rep.status == Status::ok);
    CHECK(rep.has_model);
    CHECK(rep.packing_is_one);
    CHECK(rep.robust);
    CHECK(rep.note.empty());  // exact path, no structural certification needed
}

TEST_CASE("deleting everything defeats robustness") {
    auto inst = negative_family(*pattern_preset("K1"), 3, 1);
    Budget b{50'000'000};
    auto rep = verify_negative(inst, *pattern_preset("K1"), 3, 16, b);
    CHECK(rep.status == Status::violation);
    CHECK(!rep.robust);
    REQUIRE(rep.failing_s.has_value());
    CHECK(rep.failing_s->size() == 16);
}

TEST_CASE("witness images honor the per-component structure") {
    auto inst = negative_family(*pattern_preset("K1"), 3, 1);
    Budget b{50'000'000};
    auto m = find_hzl_model(inst.rg, *pattern_preset("K1"), 3, b);
    REQUIRE(m.has_value());
    // K1's single branch set is connected, so it lives inside one grid
    auto img = m->image_vertices();
    int used = 0;
    auto cc = connected_components(inst.rg.graph);
    for (const auto& c : cc)
        if (!set_intersect(c, img).empty()) ++used;
    CHECK(used == 1);
}

TEST_CASE("bordered grid generator shape") {
    auto rg = figure1_instance(4);
    CHECK(rg.graph.num_vertices() == 16);
    REQUIRE(rg.z.size() == 3);
    CHECK(rg.z[0] == VertexSet{4, 8});    // first column minus corners
    CHECK(rg.z[1] == VertexSet{1, 2});    // first row minus corners
    CHECK(rg.z[2] == VertexSet{7, 11});   // last column minus corners
    CHECK_THROWS_AS(figure1_instance(1), std::invalid_argument);
}
