#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "povp/series.hpp"

using namespace povp;

namespace {

TruncSeries simple(int trunc, std::initializer_list<std::tuple<int, int, int, long>> terms) {
    TruncSeries s(trunc);
    for (auto [q, a, t, c] : terms) s.add_term(q, CoeffPoly::monomial(c, a, t));
    return s;
}

unsigned long rng_state = 12345;
int rnd(int lo, int hi) {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<int>((rng_state >> 33) % static_cast<unsigned>(hi - lo + 1));
}

TruncSeries random_series(int trunc) {
    TruncSeries s(trunc);
    int terms = rnd(0, 5);
    for (int i = 0; i < terms; ++i)
        s.add_term(rnd(0, trunc), CoeffPoly::monomial(rnd(-3, 3), rnd(0, 2), rnd(0, 2)));
    return s;
}

}  // namespace

TEST_CASE("product expansion") {
    // (1+aq)(1-q) = 1 + (a-1)q - a q^2
    TruncSeries x = simple(5, {{0, 0, 0, 1}, {1, 1, 0, 1}});
    TruncSeries y = simple(5, {{0, 0, 0, 1}, {1, 0, 0, -1}});
    TruncSeries p = x * y;
    CHECK(p.coefficient_at(0).str() == "1");
    CHECK(p.coefficient_at(1).str() == "-1+a");
    CHECK(p.coefficient_at(2).str() == "-a");
    CHECK(p.coefficient_at(3).is_zero());
}

TEST_CASE("additive inverse") {
    for (int i = 0; i < 20; ++i) {
        TruncSeries x = random_series(8);
        CHECK((x + (-x)).is_zero());
    }
}

TEST_CASE("ring laws on random operands") {
    for (int i = 0; i < 30; ++i) {
        TruncSeries x = random_series(7), y = random_series(7), z = random_series(7);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("truncation commutes with multiplication") {
    for (int i = 0; i < 20; ++i) {
        TruncSeries x = random_series(10), y = random_series(10);
        TruncSeries full = (x * y).retruncate(6);
        TruncSeries cut = x.retruncate(6) * y.retruncate(6);
        CHECK(full == cut);
    }
}

TEST_CASE("geometric inverses") {
    TruncSeries x = simple(3, {{0, 0, 0, 1}, {1, 0, 0, -1}});  // 1-q
    TruncSeries inv = x.invert();
    CHECK(inv == simple(3, {{0, 0, 0, 1}, {1, 0, 0, 1}, {2, 0, 0, 1}, {3, 0, 0, 1}}));

    TruncSeries y = simple(3, {{0, 0, 0, 1}, {1, 0, 0, 1}});  // 1+q
    CHECK(y.invert() ==
          simple(3, {{0, 0, 0, 1}, {1, 0, 0, -1}, {2, 0, 0, 1}, {3, 0, 0, -1}}));

    for (int i = 0; i < 20; ++i) {
        TruncSeries u = random_series(8);
        CoeffPoly c0 = u.coefficient_at(0);
        if (!c0.is_constant() || (c0.constant_term() != 1 && c0.constant_term() != -1)) continue;
        bool laurent = u.min_exponent() < 0;
        if (laurent) continue;
        CHECK(u.invert() * u == TruncSeries::one(8));
    }
}

TEST_CASE("coefficient of (1-tq)/(1-q)") {
    TruncSeries num = simple(6, {{0, 0, 0, 1}, {1, 0, 1, -1}});
    TruncSeries den = simple(6, {{0, 0, 0, 1}, {1, 0, 0, -1}});
    TruncSeries s = num * den.invert();
    CHECK(s.coefficient_at(1).str() == "1-t");
}

TEST_CASE("pochhammer products") {
    CHECK(pochhammer_q(1, 5) == simple(5, {{0, 0, 0, 1}, {1, 0, 0, -1}}));
    // (-q;q)_2 = (1+q)(1+q^2)
    TruncSeries p = pochhammer(-1, 0, 0, 1, 2, 5);
    CHECK(p == simple(5, {{0, 0, 0, 1}, {1, 0, 0, 1}, {2, 0, 0, 1}, {3, 0, 0, 1}}));
    // (-aq;q)_2/(q)_2 at q^1 -> 1+a
    TruncSeries r = pochhammer(-1, 1, 0, 1, 2, 5) * pochhammer_q(2, 5).invert();
    CHECK(r.coefficient_at(1).str() == "1+a");
}

TEST_CASE("coefficient_at above truncation order throws") {
    TruncSeries s = TruncSeries::one(4);
    CHECK_THROWS_AS((void)s.coefficient_at(5), std::out_of_range);
}

TEST_CASE("invert requires a unit constant term") {
    TruncSeries s = simple(4, {{0, 1, 0, 1}, {1, 0, 0, 1}});  // a + q
    CHECK_THROWS_AS((void)s.invert(), std::domain_error);
    TruncSeries two = simple(4, {{0, 0, 0, 2}});
    CHECK_THROWS_AS((void)two.invert(), std::domain_error);
}

TEST_CASE("canonical rendering") {
    TruncSeries s(4);
    s.add_term(0, CoeffPoly::constant(1));
    s.add_term(1, CoeffPoly::constant(1) + CoeffPoly::monomial(1, 1, 0));
    s.add_term(2, CoeffPoly::constant(2) + CoeffPoly::monomial(3, 1, 0) +
                      CoeffPoly::monomial(1, 2, 0));
    CHECK(s.str() == "1 + (1+a)q + (2+3a+a^2)q^2");
}

TEST_CASE("hl poly arithmetic and exact division") {
    HLPoly a = HLPoly::one_minus_t_pow(1);
    HLPoly b = HLPoly::one_minus_t_pow(2);
    HLPoly p = a * b;
    CHECK(p.divide_exact(a) == b);
    CHECK(p.divide_exact(b) == a);
    CHECK_THROWS_AS((void)b.divide_exact(a * a), std::domain_error);
    CHECK(a.eval(-1) == 2);
    CHECK(b.eval(-1) == 0);
}
