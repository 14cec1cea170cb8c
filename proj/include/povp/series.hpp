#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace povp {

using Int = boost::multiprecision::cpp_int;

/* Polynomial in the auxiliary variables a and t with exact integer
 * coefficients.  Exponents are nonnegative; zero coefficients are never
 * stored. */
class CoeffPoly {
public:
    using Key = std::pair<int, int>;  // (a exponent, t exponent)

    CoeffPoly() = default;
    static CoeffPoly constant(Int c);
    static CoeffPoly monomial(Int c, int a_exp, int t_exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of a^0 t^0.
    Int constant_term() const;
    Int coeff(int a_exp, int t_exp) const;

    void add_term(int a_exp, int t_exp, const Int& c);

    CoeffPoly operator+(const CoeffPoly& o) const;
    CoeffPoly operator-(const CoeffPoly& o) const;
    CoeffPoly operator*(const CoeffPoly& o) const;
    CoeffPoly operator-() const;
    bool operator==(const CoeffPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CoeffPoly& o) const { return !(*this == o); }

    // Substitute integer values for a and/or t (value_set flags).
    CoeffPoly substitute(bool set_a, long a_val, bool set_t, long t_val) const;

    const std::map<Key, Int>& terms() const { return terms_; }

    std::string str() const;

private:
    std::map<Key, Int> terms_;
};

/* Formal power series in q truncated above a fixed order.  Coefficients are
 * CoeffPoly values.  Negative q-exponents are tolerated so that hook-content
 * products can be assembled exactly as written; they must cancel before a
 * series is reported (check with min_exponent()). */
class TruncSeries {
public:
    explicit TruncSeries(int trunc) : trunc_(trunc) {}
    TruncSeries() : trunc_(0) {}

    static TruncSeries zero(int trunc) { return TruncSeries(trunc); }
    static TruncSeries one(int trunc);
    static TruncSeries constant(const CoeffPoly& c, int trunc);
    // c * a^a_exp * t^t_exp * q^q_exp
    static TruncSeries monomial(Int c, int a_exp, int t_exp, int q_exp, int trunc);

    int trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const;  // 0 for the zero series

    void add_term(int q_exp, const CoeffPoly& c);
    const CoeffPoly& coefficient_at(int q_exp) const;  // throws above trunc
    const std::map<int, CoeffPoly>& terms() const { return terms_; }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator-() const;
    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    // Multiplicative inverse; requires q^0 coefficient == +-1 and no
    // negative exponents.
    TruncSeries invert() const;

    TruncSeries shift_q(int k) const;  // multiply by q^k
    TruncSeries retruncate(int new_trunc) const;

    TruncSeries substitute(bool set_a, long a_val, bool set_t, long t_val) const;

    std::string str() const;

private:
    int trunc_;
    std::map<int, CoeffPoly> terms_;
};

/* (arg; q)_n with arg = c a^a_exp t^t_exp q^q_exp: the product of
 * (1 - arg q^i) over i = 0..n-1.  n < 0 means "infinite": factors are
 * included while q_exp + i <= trunc. */
TruncSeries pochhammer(Int c, int a_exp, int t_exp, int q_exp, int n, int trunc);

// (q; q)_n
TruncSeries pochhammer_q(int n, int trunc);

/* Polynomial in t alone with exact integer coefficients, dense layout.
 * coeffs()[k] is the coefficient of t^k; trailing zeros are stripped. */
class HLPoly {
public:
    HLPoly() = default;
    explicit HLPoly(std::vector<Int> c) : c_(std::move(c)) { strip(); }
    static HLPoly one() { return HLPoly({Int(1)}); }
    static HLPoly zero() { return HLPoly(); }
    // 1 - t^k  (k >= 1)
    static HLPoly one_minus_t_pow(int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const;

    HLPoly operator+(const HLPoly& o) const;
    HLPoly operator-(const HLPoly& o) const;
    HLPoly operator*(const HLPoly& o) const;
    bool operator==(const HLPoly& o) const { return c_ == o.c_; }
    bool operator!=(const HLPoly& o) const { return !(*this == o); }

    // Exact division; throws if the remainder is nonzero.
    HLPoly divide_exact(const HLPoly& d) const;

    Int eval(long t) const;
    CoeffPoly to_coeff_poly() const;  // as polynomial in t (a-degree 0)

    std::string str() const;

private:
    void strip();
    std::vector<Int> c_;
};

}  // namespace povp
