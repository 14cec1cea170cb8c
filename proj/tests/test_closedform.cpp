#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povp/closedform.hpp"
#include "povp/enumerate.hpp"

using namespace povp;

namespace {

TruncSeries geometric(int e, int trunc) {  // 1/(1-q^e)
    TruncSeries d = TruncSeries::one(trunc);
    d.add_term(e, CoeffPoly::constant(-1));
    return d.invert();
}

}  // namespace

TEST_CASE("overpartition generating functions") {
    CHECK(gf_overpartitions(0, false, 6) == TruncSeries::one(6));
    CHECK(gf_overpartitions(0, true, 6) == TruncSeries::one(6));

    // k=1 at most: (1+aq)/(1-q): coefficients 1, (1+a), (1+a), ...
    TruncSeries s = gf_overpartitions(1, false, 5);
    CHECK(s.coefficient_at(0).str() == "1");
    for (int i = 1; i <= 5; ++i) CHECK(s.coefficient_at(i).str() == "1+a");

    // k=1 exact: q(1+a)/(1-q)
    TruncSeries e = gf_overpartitions(1, true, 5);
    CHECK(e.coefficient_at(0).is_zero());
    for (int i = 1; i <= 5; ++i) CHECK(e.coefficient_at(i).str() == "1+a");

    // exact sums over k telescope to the at-most function
    TruncSeries total(6);
    for (int k = 0; k <= 3; ++k) total = total + gf_overpartitions(k, true, 6);
    CHECK(total == gf_overpartitions(3, false, 6));
}

TEST_CASE("box product with t") {
    TruncSeries s = gf_box_t(1, 1, 5);
    CHECK(s.coefficient_at(0).str() == "1");
    for (int i = 1; i <= 5; ++i) CHECK(s.coefficient_at(i).str() == "1-t");

    // r=1,c=2 against the explicit two-factor quotient
    TruncSeries num = TruncSeries::one(8);
    num.add_term(1, CoeffPoly::monomial(-1, 0, 1));
    TruncSeries num2 = TruncSeries::one(8);
    num2.add_term(2, CoeffPoly::monomial(-1, 0, 1));
    TruncSeries expect = num * num2 * geometric(1, 8) * geometric(2, 8);
    CHECK(gf_box_t(1, 2, 8) == expect);

    // q coefficient of the 2x2 box at t = -1
    CHECK(gf_box_t(2, 2, 5).substitute(false, 0, true, -1).coefficient_at(1).str() == "2");
}

TEST_CASE("determinant entries and the 2x2 case") {
    // 1x1: (1+a)/(1-q)
    TruncSeries d1 = det_overpartition_matrix(Partition({1}), false, 6);
    TruncSeries want = pochhammer(-1, 1, 0, 0, 1, 6) * geometric(1, 6);
    CHECK(d1 == want);

    // shifted 1x1: (1+aq)/(1-q)
    TruncSeries d1s = det_overpartition_matrix(Partition({1}), true, 6);
    CHECK(d1s == pochhammer(-1, 1, 0, 1, 1, 6) * geometric(1, 6));

    // lambda=(1,1): (1+a)(a+q)/((1-q)(1-q^2))
    TruncSeries d2 = det_overpartition_matrix(Partition({1, 1}), false, 8);
    TruncSeries onea = TruncSeries::one(8);
    onea.add_term(0, CoeffPoly::monomial(1, 1, 0));
    TruncSeries aq(8);
    aq.add_term(0, CoeffPoly::monomial(1, 1, 0));
    aq.add_term(1, CoeffPoly::constant(1));
    CHECK(d2 == onea * aq * geometric(1, 8) * geometric(2, 8));
}

TEST_CASE("hook content products") {
    // (1): shape variant q(1+a)/(1-q)
    TruncSeries s1 = gf_hook_content(Partition({1}), false, 6);
    TruncSeries onea = TruncSeries::one(6);
    onea.add_term(0, CoeffPoly::monomial(1, 1, 0));
    CHECK(s1 == (onea * geometric(1, 6)).shift_q(1).retruncate(6));

    // (1): bounded variant (1+aq)/(1-q)
    CHECK(gf_hook_content(Partition({1}), true, 6) ==
          pochhammer(-1, 1, 0, 1, 1, 6) * geometric(1, 6));

    // identity for (1,1): shape product equals q^2 det
    CHECK(gf_hook_content(Partition({1, 1}), false, 10) ==
          det_overpartition_matrix(Partition({1, 1}), false, 10).shift_q(2));
}

TEST_CASE("shape (4,4,2) carries a^6 q^35") {
    TruncSeries s = gf_hook_content(Partition({4, 4, 2}), false, 35);
    CHECK(s.coefficient_at(35).coeff(6, 0) > 0);
    CHECK(s.min_exponent() >= 0);
}

TEST_CASE("free start path sums") {
    CHECK(path_sum_free_starts({0}, 6) == TruncSeries::one(6));
    // W(1) = (1+q)/(1-q)
    TruncSeries w1 = path_sum_free_starts({1}, 6);
    TruncSeries num = TruncSeries::one(6);
    num.add_term(1, CoeffPoly::constant(1));
    CHECK(w1 == num * geometric(1, 6));
    // W(2,1) agrees with the hook product for the staircase: lambda = (1,1)
    CHECK(path_sum_free_starts({2, 1}, 8) == gf_reverse_hook(Partition({1, 1}), 8));
    // pfaffian route for four arguments
    CHECK(path_sum_free_starts({5, 3, 2, 0}, 8) ==
          gf_reverse_hook(Partition({2, 1, 1}), 8));
    CHECK_THROWS_AS((void)path_sum_free_starts({1, 1}, 4), std::invalid_argument);
}

TEST_CASE("reverse hook product") {
    TruncSeries s = gf_reverse_hook(Partition({1}), 6);
    TruncSeries num = TruncSeries::one(6);
    num.add_term(1, CoeffPoly::constant(1));
    CHECK(s == num * geometric(1, 6));
    CHECK(gf_reverse_hook(Partition({2, 1}), 6).coefficient_at(1).str() == "4");
    // rectangle equals the box product at t=-1
    CHECK(gf_reverse_hook(Partition({3, 3}), 9) ==
          gf_box_t(2, 3, 9).substitute(false, 0, true, -1));
}

TEST_CASE("weighted product of everything") {
    TruncSeries s = gf_all_weighted(6);
    CHECK(s.coefficient_at(0).str() == "1");
    CHECK(s.coefficient_at(1).str() == "1+a");
    CHECK(s.coefficient_at(2).str() == "2+3a+a^2");
    // a=1 gives the doubled product
    CHECK(s.substitute(true, 1, false, 0) == gf_shifted_macmahon(6));
    // q^2 coefficient of the doubled product counts six objects
    CHECK(gf_shifted_macmahon(12).coefficient_at(2).str() == "6");
}

TEST_CASE("bounded entry product") {
    CHECK(gf_max_entry(0, 5) == TruncSeries::one(5));
    TruncSeries o1 = gf_max_entry(1, 6);
    // (1+aq)(1+aq^2)/((1-q)(1-a^2 q^2))
    TruncSeries expect = pochhammer(-1, 1, 0, 1, 2, 6) * geometric(1, 6);
    TruncSeries d = TruncSeries::one(6);
    d.add_term(2, CoeffPoly::monomial(-1, 2, 0));
    expect = expect * d.invert();
    CHECK(o1 == expect);
    CHECK(o1.coefficient_at(2).str() == "1+2a+a^2");
}

TEST_CASE("parts in a set") {
    TruncSeries s = gf_parts_in_set({1}, 6);
    CHECK(s.coefficient_at(1).str() == "1+a");
    // the full set reproduces the weighted product
    std::set<int> all;
    for (int i = 1; i <= 8; ++i) all.insert(i);
    CHECK(gf_parts_in_set(all, 8) == gf_all_weighted(8));
    // odd parts in both the set form and the factored form
    std::set<int> odds{1, 3, 5, 7, 9, 11};
    CHECK(gf_parts_in_set(odds, 12) == gf_odd_parts(12));
    CHECK_THROWS_AS((void)gf_parts_in_set({}, 4), std::invalid_argument);
}

TEST_CASE("single row with bounded parts and entries") {
    TruncSeries s = gf_row_bounded(1, 1, 5);
    CHECK(s.coefficient_at(0).str() == "1");
    CHECK(s.coefficient_at(1).str() == "1+a");
    CHECK(s.coefficient_at(2).is_zero());
    CHECK(gf_row_bounded(0, 3, 5) == TruncSeries::one(5));
    CHECK(gf_row_bounded(3, 0, 5) == TruncSeries::one(5));
}

TEST_CASE("skew profile products") {
    Profile p{{0, 1}};
    TruncSeries s = gf_skew(p, 6);
    TruncSeries num = TruncSeries::one(6);
    num.add_term(1, CoeffPoly::monomial(-1, 0, 1));
    CHECK(s == num * geometric(1, 6));
    // profile of a shape gives the hook quotient product
    Partition lam({2, 1});
    TruncSeries viaprofile = gf_skew(shape_to_profile(lam), 8);
    TruncSeries hooks = TruncSeries::one(8);
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            TruncSeries n2 = TruncSeries::one(8);
            n2.add_term(lam.hook(i, j), CoeffPoly::monomial(-1, 0, 1));
            hooks = hooks * n2 * geometric(lam.hook(i, j), 8);
        }
    CHECK(viaprofile == hooks);
    CHECK_THROWS_AS((void)gf_skew(Profile{{1, 0}}, 4), std::invalid_argument);
}

TEST_CASE("cylindric product at period one is the partition series") {
    TruncSeries expect = TruncSeries::one(8);
    for (int e = 1; e <= 8; ++e) expect = expect * geometric(e, 8);
    CHECK(gf_cylindric(Profile{{1}}, 8) == expect);
    CHECK(gf_cylindric(Profile{{0}}, 8) == expect);
}

TEST_CASE("rectangle profiles reduce skew products to box products") {
    // profile of the c^r rectangle at t=-1 vs the box product at t=-1
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) {
            std::vector<int> parts(static_cast<size_t>(r), c);
            Profile p = shape_to_profile(Partition(parts));
            CHECK(gf_skew(p, 8).substitute(false, 0, true, -1) ==
                  gf_box_t(r, c, 8).substitute(false, 0, true, -1));
        }
}

TEST_CASE("determinant sums for small boxes") {
    // one row: sum over k <= c of det over (k) with shifted argument
    TruncSeries s = gf_box_det_sum(1, 2, 8);
    TruncSeries expect = pops_gf_aq(Constraint::box(1, 2), 8);
    CHECK(s == expect);
}
