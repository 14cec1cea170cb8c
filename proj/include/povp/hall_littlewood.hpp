#pragma once

#include <map>
#include <vector>

#include "povp/interlacing.hpp"
#include "povp/partition.hpp"
#include "povp/series.hpp"

namespace povp {

// phi_r(t) = (1-t)(1-t^2)...(1-t^r)
HLPoly phi_r(int r);

// b_lambda(t) = prod_i phi_{m_i(lambda)}(t)
HLPoly b_poly(const Partition& lambda);

/* Strip polynomials of a horizontal strip lambda/mu.
 * phi runs over columns where the strip ends going right, with multiplicities
 * taken in lambda; psi over columns where it begins, with multiplicities in
 * mu.  Non-strips give zero polynomials. */
struct StripPolys {
    HLPoly phi;
    HLPoly psi;
};
StripPolys hl_strip_polys(const Partition& lambda, const Partition& mu);

/* Phi of an interlacing sequence: product over consecutive pairs, phi for
 * 0-bits and psi for 1-bits. */
HLPoly phi_sequence(const InterlacingSequence& seq);

// Truncation chain (empty, lambda^1..lambda^L) of a partition.
InterlacingSequence truncation_chain(const Partition& lambda);

/* Sparse polynomial in several x-variables with HLPoly (t-polynomial)
 * coefficients; used by the combinatorial Hall-Littlewood sums. */
class MultiPoly {
public:
    using Key = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly one(int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Key& k, const HLPoly& c);
    const std::map<Key, HLPoly>& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    MultiPoly truncate_total_degree(int d) const;
    // scale every coefficient by exact division
    MultiPoly divide_exact(const HLPoly& d) const;

private:
    int nvars_ = 0;
    std::map<Key, HLPoly> terms_;
};

/* Q_lambda(x_1..x_m; t) as the strip-weighted sum over column-strict plane
 * partitions of shape lambda with entries <= m. */
MultiPoly hl_q_bruteforce(const Partition& lambda, int nvars);

/* Both sides of the bilinear sum identity: sum over |lambda| <= degree of
 * Q_lambda(x;t) Q_lambda(y;t)/b_lambda against the double product
 * prod (1-t x_i y_j)/(1-x_i y_j), truncated at the given total degree in the
 * x and y variables together. */
MultiPoly cauchy_sum_side(int xvars, int yvars, int degree);
MultiPoly cauchy_product_side(int xvars, int yvars, int degree);

}  // namespace povp
