#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povp/enumerate.hpp"
#include "povp/objects.hpp"
#include "povp/partition.hpp"

using namespace povp;

namespace {

PlaneOverpartition pop_from(std::initializer_list<std::initializer_list<std::pair<int, bool>>> rows) {
    std::vector<std::vector<Cell>> out;
    for (const auto& r : rows) {
        std::vector<Cell> row;
        for (const auto& [v, o] : r) row.push_back({v, o});
        out.push_back(row);
    }
    return PlaneOverpartition(std::move(out));
}

// the shape (4,4,2) example: 4 4 4~ 3~ / 4~ 3 3 3~ / 4~ 3~
PlaneOverpartition example_442() {
    return pop_from({{{4, false}, {4, false}, {4, true}, {3, true}},
                     {{4, true}, {3, false}, {3, false}, {3, true}},
                     {{4, true}, {3, true}}});
}

}  // namespace

TEST_CASE("partition basics") {
    Partition l({4, 4, 2});
    CHECK(l.weight() == 10);
    CHECK(l.conjugate() == Partition({3, 3, 2, 2}));
    CHECK(l.conjugate().conjugate() == l);
    CHECK(l.hook(1, 1) == 6);
    CHECK(l.content(1, 1) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("conjugate is an involution on everything small") {
    for_each_partition_up_to(9, 0, 0, [&](const Partition& p) {
        CHECK(p.conjugate().conjugate() == p);
        int cells = 0;
        for (int i = 1; i <= p.length(); ++i) cells += p.part(i);
        CHECK(cells == p.weight());
    });
}

TEST_CASE("hooks and contents") {
    auto hc1 = hooks_and_contents(Partition({1}));
    CHECK(hc1[0][0].hook == 1);
    CHECK(hc1[0][0].content == 0);

    auto hc21 = hooks_and_contents(Partition({2, 1}));
    std::multiset<int> hooks, contents;
    for (const auto& row : hc21)
        for (const auto& hc : row) {
            hooks.insert(hc.hook);
            contents.insert(hc.content);
        }
    CHECK(hooks == std::multiset<int>{1, 1, 3});
    CHECK(contents == std::multiset<int>{-1, 0, 1});
}

TEST_CASE("validation accepts the pinned example") {
    PlaneOverpartition p = example_442();
    CHECK(p.validate().ok());
    CHECK(p.weight() == 35);
    CHECK(p.overline_count() == 6);
    CHECK(p.shape() == Partition({4, 4, 2}));
}

TEST_CASE("empty grid is valid") {
    PlaneOverpartition p;
    CHECK(p.validate().ok());
    CHECK(p.weight() == 0);
}

TEST_CASE("overline must sit on the last occurrence in a row") {
    PlaneOverpartition p = pop_from({{{1, true}, {1, false}}});
    auto v = p.validate();
    REQUIRE(!v.ok());
    bool found = false;
    for (const auto& msg : v.violations)
        found = found || msg.find("overlined entry not last occurrence in row") != std::string::npos;
    CHECK(found);
}

TEST_CASE("column repeats must be overlined") {
    PlaneOverpartition bad = pop_from({{{1, false}}, {{1, false}}});
    CHECK(!bad.validate().ok());
    PlaneOverpartition good = pop_from({{{1, false}}, {{1, true}}});
    CHECK(good.validate().ok());
}

TEST_CASE("validation lists every violation") {
    PlaneOverpartition p = pop_from({{{1, true}, {1, false}}, {{1, false}}});
    auto v = p.validate();
    CHECK(v.violations.size() >= 2);
}

TEST_CASE("reverse plane overpartition rules") {
    // 0 0 3 4 4 4~ / 0 0 4 4~ / 1 3~ / 3 3~
    std::vector<std::vector<Cell>> cells = {
        {{0, false}, {0, false}, {3, false}, {4, false}, {4, false}, {4, true}},
        {{0, false}, {0, false}, {4, false}, {4, true}},
        {{1, false}, {3, true}},
        {{3, false}, {3, true}}};
    ReversePlaneOverpartition r(Partition({6, 4, 2, 2}), cells);
    CHECK(r.validate().ok());
    CHECK(r.weight() == 0 + 3 + 4 + 4 + 4 + 4 + 4 + 1 + 3 + 3 + 3);

    auto bad_cells = cells;
    bad_cells[0][0].overlined = true;  // overlined zero
    CHECK(!ReversePlaneOverpartition(Partition({6, 4, 2, 2}), bad_cells).validate().ok());
}

TEST_CASE("overline expansions count components") {
    // column of two equal entries: one component, forced lower overline
    PlanePartition col({{1}, {1}});
    auto ex = overline_expansions(col);
    CHECK(ex.size() == 2);
    for (const auto& p : ex) {
        CHECK(p.validate().ok());
        CHECK(p.cell(2, 1).overlined);
    }
    // dropping overlines from any valid pop gives back a strict plane partition
    PlaneOverpartition p = example_442();
    PlanePartition u = p.underlying();
    CHECK(u.validate().ok());
    CHECK(u.diagonally_strict());
    auto all = overline_expansions(u);
    CHECK(static_cast<int>(all.size()) == (1 << component_count(u.rows())));
    bool found = false;
    for (const auto& q : all) found = found || q == p;
    CHECK(found);
}

TEST_CASE("every expansion is valid and expansions are exactly the valid markings") {
    enum_pops(Constraint::all(), 6, [&](const PlaneOverpartition& p) {
        CHECK(p.validate().ok());
    });
    // cross-check the census of weight <= 4 by brute force over all markings
    std::set<std::vector<std::vector<std::pair<int, bool>>>> via_expansion;
    enum_pops(Constraint::all(), 4, [&](const PlaneOverpartition& p) {
        std::vector<std::vector<std::pair<int, bool>>> key;
        for (const auto& r : p.rows()) {
            std::vector<std::pair<int, bool>> row;
            for (const auto& c : r) row.push_back({c.value, c.overlined});
            key.push_back(row);
        }
        CHECK(via_expansion.insert(key).second);  // duplicate-free
    });
    int brute = 0;
    enum_plane_partitions(4, 4, 4, [&](const PlanePartition& pp) {
        if (!pp.diagonally_strict()) return;
        int cells = 0;
        for (const auto& r : pp.rows()) cells += static_cast<int>(r.size());
        for (unsigned mask = 0; mask < (1u << cells); ++mask) {
            std::vector<std::vector<Cell>> rows(pp.rows().size());
            int k = 0;
            for (size_t i = 0; i < pp.rows().size(); ++i)
                for (size_t j = 0; j < pp.rows()[i].size(); ++j)
                    rows[i].push_back({pp.rows()[i][j], ((mask >> k++) & 1u) != 0});
            PlaneOverpartition cand(rows);
            if (cand.validate().ok()) ++brute;
        }
    });
    CHECK(brute == static_cast<int>(via_expansion.size()));
}
