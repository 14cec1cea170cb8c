#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povp/enumerate.hpp"
#include "povp/tilings.hpp"

using namespace povp;

namespace {

std::vector<Cell> row(std::initializer_list<std::pair<int, bool>> es) {
    std::vector<Cell> v;
    for (auto [val, o] : es) v.push_back({val, o});
    return v;
}

PlaneOverpartition staircase_instance() {
    return PlaneOverpartition({row({{7, false}, {4, false}, {3, true}, {2, false}, {2, true}}),
                               row({{3, false}, {3, false}, {3, true}, {2, true}}),
                               row({{3, true}, {2, false}, {1, true}}),
                               row({{2, false}})});
}

}  // namespace

TEST_CASE("chessboard geometry") {
    CHECK(is_center(1, 3));
    CHECK(is_white(1, 3));
    CHECK(is_center(3, 1));
    CHECK(!is_white(3, 1));
    CHECK(!is_center(1, 1));
    CHECK(!is_center(2, 2));
    // adjacent centers alternate color
    CHECK(is_white(1, 3) != is_white(3, 5));
    CHECK(is_white(1, 3) != is_white(-1, 5));
}

TEST_CASE("empty overpartition tiles with columns and fill") {
    PlaneOverpartition empty;
    Window w{-2, 2, -1, 2};
    DominoTiling t = pop_to_tiling(empty, w);
    for (const Domino& d : t.dominoes())
        CHECK((d.type == DominoType::MM || d.type == DominoType::MP));
    CHECK(tiling_to_pop(t) == empty);
    // columns t <= 0 vertical, t > 0 fill
    CHECK(boundary_violations(t, Partition(), 0).empty());
}

TEST_CASE("round trip over all small overpartitions") {
    enum_pops(Constraint::all(), 6, [&](const PlaneOverpartition& pop) {
        int maxe = 0;
        for (const auto& r : pop.rows())
            for (const Cell& c : r) maxe = std::max(maxe, c.value);
        Window w = Window::standard(pop.shape(), maxe);
        DominoTiling t = pop_to_tiling(pop, w);
        CHECK(tiling_to_pop(t) == pop);
    });
}

TEST_CASE("window too small is rejected") {
    PlaneOverpartition pop({row({{2, false}})});
    Window w{0, 1, 0, 1};
    CHECK_THROWS_AS((void)pop_to_tiling(pop, w), std::invalid_argument);
}

TEST_CASE("staircase instance boundary") {
    PlaneOverpartition pop = staircase_instance();
    Partition shape = pop.shape();
    CHECK(shape == Partition({5, 4, 3, 1}));
    Window w = Window::standard(shape, 7);
    DominoTiling t = pop_to_tiling(pop, w);
    CHECK(boundary_violations(t, shape, 7).empty());
    CHECK(tiling_to_pop(t) == pop);
    // four domino classes appear
    std::set<DominoType> kinds;
    for (const Domino& d : t.dominoes()) kinds.insert(d.type);
    CHECK(kinds.size() == 4);
}

TEST_CASE("renders are deterministic and carry all classes") {
    PlaneOverpartition pop = staircase_instance();
    Window w = Window::standard(pop.shape(), 7);
    DominoTiling t = pop_to_tiling(pop, w);
    std::string a1 = render_ascii(t), a2 = render_ascii(t);
    CHECK(a1 == a2);
    CHECK(a1.find('h') != std::string::npos);
    CHECK(a1.find('v') != std::string::npos);
    CHECK(a1.find('d') != std::string::npos);
    CHECK(a1.find('.') != std::string::npos);
    std::string s1 = render_svg(t), s2 = render_svg(t);
    CHECK(s1 == s2);
    CHECK(s1.find("class=\"pp\"") != std::string::npos);
    CHECK(s1.find("</svg>") != std::string::npos);
    // empty window
    DominoTiling none;
    none.window = {0, 0, 0, 0};
    CHECK(render_ascii(none).empty());
}

TEST_CASE("moves are inverse pairs") {
    // single box 1: add overline then remove
    PlaneOverpartition one({row({{1, false}})});
    LocalMove add{MoveKind::AddOverline, 0, 1};
    PlaneOverpartition barred = apply_move_to_pop(one, add);
    CHECK(barred.cell(1, 1).overlined);
    LocalMove rem{MoveKind::RemoveOverline, 0, 1};
    CHECK(apply_move_to_pop(barred, rem) == one);

    // overlined 2 loses a box and becomes plain 1
    PlaneOverpartition two({row({{2, true}})});
    LocalMove shrink{MoveKind::RemoveBox, 0, 2};
    PlaneOverpartition smaller = apply_move_to_pop(two, shrink);
    CHECK(smaller == one);
    LocalMove grow{MoveKind::AddBox, 0, 1};
    CHECK(apply_move_to_pop(one, grow) == two);

    // removal at value one would change the shape: rejected
    PlaneOverpartition onebar({row({{1, true}})});
    CHECK_THROWS_AS((void)apply_move_to_pop(onebar, LocalMove{MoveKind::RemoveBox, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("overline moves exist exactly at free cells") {
    PlaneOverpartition pop({row({{2, false}, {1, false}})});
    auto moves = legal_moves(pop);
    int overlines = 0;
    for (const auto& m : moves) overlines += m.kind == MoveKind::AddOverline;
    CHECK(overlines == 2);  // both entries are corners of their components

    // column 1 over 1bar: the lower overline is forced, the upper toggles
    PlaneOverpartition col({row({{1, false}}), row({{1, true}})});
    int removable = 0;
    for (const auto& m : legal_moves(col)) removable += m.kind == MoveKind::RemoveOverline;
    CHECK(removable == 0);  // removing the forced overline is illegal
}

TEST_CASE("corrupted tilings are rejected") {
    PlaneOverpartition pop({row({{2, false}, {1, true}})});
    Window w = Window::standard(pop.shape(), 2);
    DominoTiling t = pop_to_tiling(pop, w);

    // drop one covered square
    DominoTiling holey = t;
    holey.cover.erase(holey.cover.begin());
    CHECK_THROWS_AS((void)tiling_to_pop(holey), std::invalid_argument);

    // retype a filler as a horizontal domino
    DominoTiling wrong = t;
    for (auto& [c, d] : wrong.cover)
        if (d.type == DominoType::MP) {
            d.type = DominoType::PP;
            break;
        }
    CHECK_THROWS_AS((void)tiling_to_pop(wrong), std::invalid_argument);
}

TEST_CASE("local moves at the tiling level") {
    enum_pops(Constraint::all(), 4, [&](const PlaneOverpartition& pop) {
        int maxe = 1;
        for (const auto& r : pop.rows())
            for (const Cell& c : r) maxe = std::max(maxe, c.value);
        Window w = Window::standard(pop.shape(), maxe + 1);
        DominoTiling t = pop_to_tiling(pop, w);
        for (const LocalMove& mv : legal_moves(pop)) {
            DominoTiling direct = apply_move_to_tiling(t, pop, mv);
            DominoTiling rebuilt = pop_to_tiling(apply_move_to_pop(pop, mv), w);
            CHECK(direct == rebuilt);
        }
    });
}
