#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povp/rsk.hpp"

using namespace povp;

namespace {

std::vector<Cell> row(std::initializer_list<std::pair<int, bool>> es) {
    std::vector<Cell> v;
    for (auto [val, o] : es) v.push_back({val, o});
    return v;
}

BlockMatrix pinned_example() {
    BlockMatrix m = BlockMatrix::zero(2);
    m.a = {{0, 2}, {2, 0}};
    m.b = {{1, 0}, {1, 0}};
    m.c = {{1, 1}, {0, 0}};
    m.d = {{0, 1}, {1, 1}};
    return m;
}

}  // namespace

TEST_CASE("two line array of the pinned example") {
    TwoLineArray L = encode_matrix(pinned_example());
    std::vector<BarredInt> top = {{2, false}, {2, false}, {2, false}, {2, true}, {2, true},
                                  {1, false}, {1, false}, {1, false}, {1, true}, {1, true},
                                  {1, true}};
    std::vector<BarredInt> bottom = {{1, false}, {1, false}, {1, true}, {1, true}, {2, true},
                                     {2, false}, {2, false}, {1, true}, {1, false}, {2, true},
                                     {2, false}};
    CHECK(L.top == top);
    CHECK(L.bottom == bottom);
}

TEST_CASE("single row insertions follow the pinned cases") {
    // base row 4 3 3 3~ 2
    auto base = row({{4, false}, {3, false}, {3, false}, {3, true}, {2, false}});

    auto r1 = base;
    auto res1 = insert_into_row(r1, {5, false});
    CHECK(res1.bumped);
    CHECK(res1.bumped_value == BarredInt{4, false});
    CHECK(r1 == row({{5, false}, {3, false}, {3, false}, {3, true}, {2, false}}));

    auto r2 = base;
    auto res2 = insert_into_row(r2, {3, false});
    CHECK(res2.bumped);
    CHECK(res2.bumped_value == BarredInt{3, true});
    CHECK(r2 == row({{4, false}, {3, false}, {3, false}, {3, false}, {2, false}}));

    auto r3 = base;
    auto res3 = insert_into_row(r3, {3, true});
    CHECK(res3.bumped);
    CHECK(res3.bumped_value == BarredInt{3, true});
    CHECK(r3 == base);

    auto r4 = base;
    auto res4 = insert_into_row(r4, {1, false});
    CHECK(!res4.bumped);
    CHECK(r4 == row({{4, false}, {3, false}, {3, false}, {3, true}, {2, false}, {1, false}}));
}

TEST_CASE("pinned example insertion result") {
    RskPair pq = rsk_forward(pinned_example());
    std::vector<std::vector<Cell>> want = {row({{2, false}, {2, false}, {2, false}}),
                                           row({{2, true}, {1, false}, {1, false}}),
                                           row({{2, true}, {1, true}}),
                                           row({{1, false}}),
                                           row({{1, true}}),
                                           row({{1, true}})};
    CHECK(pq.p == PlaneOverpartition(want));
    CHECK(pq.q == pq.p);
    CHECK(rsk_inverse(pq, 2) == pinned_example());
}

TEST_CASE("zero matrix") {
    RskPair pq = rsk_forward(BlockMatrix::zero(2));
    CHECK(pq.p.row_count() == 0);
    CHECK(pq.q.row_count() == 0);
    CHECK(rsk_inverse(pq, 2) == BlockMatrix::zero(2));
}

TEST_CASE("insertions into plane overpartitions stay valid") {
    BlockMatrix m = BlockMatrix::zero(3);
    m.a = {{1, 0, 2}, {0, 1, 0}, {2, 0, 0}};
    m.b = {{0, 1, 0}, {1, 0, 1}, {0, 0, 1}};
    m.c = {{1, 0, 0}, {0, 1, 1}, {1, 0, 0}};
    m.d = {{2, 0, 0}, {0, 0, 1}, {1, 1, 0}};
    RskPair pq = rsk_forward(m);
    CHECK(pq.p.validate().ok());
    CHECK(pq.q.validate().ok());
    CHECK(pq.p.shape() == pq.q.shape());
    CHECK(rsk_inverse(pq, 3) == m);

    RskPair qp = rsk_forward(m.transposed());
    CHECK(qp.p == pq.q);
    CHECK(qp.q == pq.p);
}

TEST_CASE("random larger matrices round trip") {
    unsigned long state = 987654321;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<unsigned>(state >> 33);
    };
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4;
        BlockMatrix m = BlockMatrix::zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(next() % 3);
                m.d[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(next() % 3);
                m.b[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(next() % 2);
                m.c[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(next() % 2);
            }
        RskPair pq = rsk_forward(m);
        REQUIRE(pq.p.validate().ok());
        REQUIRE(pq.q.validate().ok());
        REQUIRE(rsk_inverse(pq, n) == m);
    }
}

TEST_CASE("inverse rejects mismatched shapes") {
    RskPair pq;
    pq.p = PlaneOverpartition({row({{1, false}})});
    pq.q = PlaneOverpartition({row({{1, false}, {1, true}})});
    CHECK_THROWS_AS((void)rsk_inverse(pq, 1), std::invalid_argument);
}
