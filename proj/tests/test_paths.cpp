#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povp/enumerate.hpp"
#include "povp/paths.hpp"

using namespace povp;

namespace {

Overpartition op(std::initializer_list<std::pair<int, bool>> es) {
    std::vector<OverpartEntry> v;
    for (auto [val, o] : es) v.push_back({val, o});
    return Overpartition(std::move(v));
}

}  // namespace

TEST_CASE("single part paths") {
    LatticePath p = overpartition_to_path(op({{1, false}}), 1, 1);
    CHECK(p.steps == std::vector<Step>{Step::E, Step::N});
    CHECK(p.weight_q() == 1);
    CHECK(p.weight_a() == 0);

    LatticePath q = overpartition_to_path(op({{1, true}}), 1, 1);
    CHECK(q.steps == std::vector<Step>{Step::NE});
    CHECK(q.weight_q() == 1);
    CHECK(q.weight_a() == 1);
}

TEST_CASE("longer overpartition weight") {
    Overpartition o = op({{6, false}, {6, true}, {4, false}, {4, false}, {3, true}});
    LatticePath p = overpartition_to_path(o, 5, 8);
    CHECK(p.end_x() == 8);
    CHECK(p.end_y() == 5);
    CHECK(p.weight_q() == 23);
    CHECK(p.weight_a() == 2);
    CHECK(path_to_overpartition(p) == o);
}

TEST_CASE("round trip and weights for all small overpartitions") {
    enum_row_overpartitions(4, 8, 8, [&](const Overpartition& o) {
        LatticePath p = overpartition_to_path(o, 4, 8);
        CHECK(p.end_x() == 8);
        CHECK(p.end_y() == 4);
        CHECK(p.weight_q() == o.weight());
        CHECK(p.weight_a() == o.overline_count());
        CHECK(path_to_overpartition(p) == o);
    });
}

TEST_CASE("pinned nonintersecting family") {
    // 7 4 3~ 2 2~ / 3 3 3~ 2~ / 3~ 2 1~ / 2
    PlaneOverpartition pop({{{7, false}, {4, false}, {3, true}, {2, false}, {2, true}},
                            {{3, false}, {3, false}, {3, true}, {2, true}},
                            {{3, true}, {2, false}, {1, true}},
                            {{2, false}}});
    REQUIRE(pop.validate().ok());
    auto paths = pop_to_paths(pop, pop.shape(), 8);
    REQUIRE(paths.size() == 4);
    // endpoints per the construction
    Partition lam = pop.shape();
    for (int i = 1; i <= 4; ++i) {
        CHECK(paths[static_cast<size_t>(i - 1)].start_x == 0);
        CHECK(paths[static_cast<size_t>(i - 1)].start_y == lam.part(1) - lam.part(i) + i - 1);
        CHECK(paths[static_cast<size_t>(i - 1)].end_x() == 8);
        CHECK(paths[static_cast<size_t>(i - 1)].end_y() == lam.part(1) + i - 1);
    }
    int wq = 0, wa = 0;
    for (const auto& p : paths) {
        wq += p.weight_q();
        wa += p.weight_a();
    }
    CHECK(wq == pop.weight());
    CHECK(wa == pop.overline_count());
    CHECK(paths_to_pop(paths) == pop);
}

TEST_CASE("round trip across every small plane overpartition") {
    enum_pops(Constraint::all(), 6, [&](const PlaneOverpartition& pop) {
        auto paths = pop_to_paths(pop, pop.shape(), 7);
        int wq = 0, wa = 0;
        for (const auto& p : paths) {
            wq += p.weight_q();
            wa += p.weight_a();
        }
        CHECK(wq == pop.weight());
        CHECK(wa == pop.overline_count());
        CHECK(paths_to_pop(paths) == pop);
    });
}

TEST_CASE("bounded families use zero parts") {
    // rows bounded by (2,1): row 1 may have 1 or 2 parts
    PlaneOverpartition pop({{{3, false}}});
    auto paths = pop_to_paths(pop, Partition({2, 1}), 4);
    REQUIRE(paths.size() == 2);
    CHECK(paths_to_pop(paths) == pop);
    CHECK(paths[1].weight_q() == 0);
}

TEST_CASE("part exceeding the extent is rejected") {
    CHECK_THROWS_AS((void)overpartition_to_path(op({{9, false}}), 1, 8), std::invalid_argument);
}

TEST_CASE("intersecting families are rejected") {
    LatticePath a = overpartition_to_path(op({{2, false}}), 1, 3, 0);
    LatticePath b = overpartition_to_path(op({{2, false}}), 1, 3, 0);
    CHECK(!paths_nonintersecting({a, b}));
    CHECK_THROWS_AS((void)paths_to_pop({a, b}), std::invalid_argument);
}
