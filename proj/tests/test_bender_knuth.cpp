#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povp/bender_knuth.hpp"
#include "povp/hall_littlewood.hpp"
#include "povp/interlacing.hpp"

using namespace povp;

TEST_CASE("slice shapes") {
    PlanePartition p({{4, 4, 3, 3}, {3, 3, 2, 2}, {1, 1, 1}});
    CHECK(slice_shape(p, 1) == Partition({4, 4, 3}));
    CHECK(slice_shape(p, 2) == Partition({4, 4}));
    CHECK(slice_shape(p, 3) == Partition({4, 2}));
    CHECK(slice_shape(p, 4) == Partition({2}));
    CHECK(slice_shape(p, 5) == Partition());
}

TEST_CASE("pinned merge instance") {
    PlanePartition sigma({{4, 4, 4, 4}, {2, 2, 2, 1}, {1, 1, 1}});
    PlanePartition lambda({{4, 4, 3, 3}, {3, 3, 2, 2}, {1, 1, 1}});
    REQUIRE(column_strict(sigma));
    REQUIRE(column_strict(lambda));
    PlanePartition pi = bk_merge(sigma, lambda);
    CHECK(pi == PlanePartition({{4, 4, 4, 4}, {4, 4, 3}, {4, 4, 3}, {2, 2}}));
    CHECK(pi.weight() == 26 + 27 - 11);
    auto [s2, l2] = bk_split(pi);
    CHECK(s2 == sigma);
    CHECK(l2 == lambda);

    // phi weights of the pinned instance
    HLPoly phis = bk_phi(sigma);
    HLPoly phil = bk_phi(lambda);
    HLPoly expect_s = HLPoly::one_minus_t_pow(1) * HLPoly::one_minus_t_pow(1) *
                      HLPoly::one_minus_t_pow(2);
    HLPoly expect_l = HLPoly::one_minus_t_pow(1) * HLPoly::one_minus_t_pow(1) *
                      HLPoly::one_minus_t_pow(1) * HLPoly::one_minus_t_pow(2);
    CHECK(phis == expect_s);
    CHECK(phil == expect_l);
    HLPoly b = b_poly(Partition({4, 4, 3}));
    CHECK(b == expect_s);
    CHECK(a_weight(pi) * b == phis * phil);
}

TEST_CASE("empty pair") {
    PlanePartition empty;
    CHECK(bk_merge(empty, empty) == empty);
    auto [s, l] = bk_split(empty);
    CHECK(s == empty);
    CHECK(l == empty);
}

TEST_CASE("exhaustive round trip on small shapes") {
    for_each_partition_up_to(3, 0, 0, [&](const Partition& shape) {
        if (shape.empty()) return;
        std::vector<PlanePartition> cs;
        for_each_column_strict(shape, 3, [&](const PlanePartition& p) {
            CHECK(column_strict(p));
            cs.push_back(p);
        });
        for (const auto& sigma : cs)
            for (const auto& lambda : cs) {
                PlanePartition pi = bk_merge(sigma, lambda);
                CHECK(pi.validate().ok());
                auto [s2, l2] = bk_split(pi);
                CHECK(s2 == sigma);
                CHECK(l2 == lambda);
            }
    });
}

TEST_CASE("mismatched shapes are rejected") {
    PlanePartition a(std::vector<std::vector<int>>{{1}});
    PlanePartition b({{2, 1}});
    CHECK_THROWS_AS((void)bk_merge(a, b), std::invalid_argument);
    PlanePartition not_strict({{1}, {1}});
    CHECK_THROWS_AS((void)bk_merge(not_strict, not_strict), std::invalid_argument);
}
