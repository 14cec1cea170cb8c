#pragma once

#include <set>
#include <vector>

#include "povp/interlacing.hpp"
#include "povp/partition.hpp"
#include "povp/series.hpp"

namespace povp {

/* Generating function for overpartitions with at most (exact = false) or
 * exactly (exact = true) k parts, weighted a^(overlines) q^(weight). */
TruncSeries gf_overpartitions(int k, bool exact, int trunc);

/* Double product over an r x c box with t-weights:
 * prod (1 - t q^{i+j-1}) / (1 - q^{i+j-1}). */
TruncSeries gf_box_t(int r, int c, int trunc);

/* Determinant of the overpartition path matrix: entry (i,j) is
 * (-arg)_{m}/(q)_{m} with m = lambda_j + i - j, arg = aq when shifted,
 * a otherwise.  Division-free evaluation. */
TruncSeries det_overpartition_matrix(const Partition& lambda, bool shifted, int trunc);

/* Hook-content products.  variant_shape:
 *   q^{sum i lambda_i}   prod (1 + a q^{c_ij})   / (1 - q^{h_ij})
 * bounded:
 *   q^{sum (i-1) lambda_i} prod (1 + a q^{c_ij+1}) / (1 - q^{h_ij})
 * Assembled with Laurent intermediates; the result is checked to be free of
 * negative q-exponents. */
TruncSeries gf_hook_content(const Partition& lambda, bool bounded, int trunc);

/* Free-start nonintersecting path sums W(r_1 > ... > r_l >= 0).  Lengths
 * <= 2 use the closed forms; longer tuples go through the Pfaffian of the
 * pairwise matrix (odd lengths padded with the single-argument column). */
TruncSeries path_sum_free_starts(const std::vector<int>& rs, int trunc);

// Pfaffian of a skew-symmetric series matrix by the perfect-matchings sum.
TruncSeries pfaffian(const std::vector<std::vector<TruncSeries>>& m, int trunc);

/* Hook product for reverse plane overpartitions of a shape:
 * prod (1 + q^{h_ij}) / (1 - q^{h_ij}). */
TruncSeries gf_reverse_hook(const Partition& lambda, int trunc);

/* Weighted series over all plane overpartitions:
 * prod_i (1 + a q^i)^i / ((1 - q^i)^{ceil(i/2)} (1 - a^2 q^i)^{floor(i/2)}). */
TruncSeries gf_all_weighted(int trunc);

// prod over n >= 1 of ((1 + q^n)/(1 - q^n))^n
TruncSeries gf_shifted_macmahon(int trunc);

/* Largest entry at most n:
 * prod_{j=1..n} prod_{i=0..n} (1 + a q^{i+j}) /
 *               [prod_{i=1..j} (1 - q^{i+j-1})(1 - a^2 q^{i+j})]. */
TruncSeries gf_max_entry(int n, int trunc);

/* Parts restricted to a set S:
 * prod_{i in S} [ prod_{j in S} (1 + a q^{i+j}) / ((1-q^i)(1-a q^i))
 *                 prod_{j in S, j < i} 1 / ((1-q^{i+j})(1-a^2 q^{i+j})) ]. */
TruncSeries gf_parts_in_set(const std::set<int>& s, int trunc);

/* Odd-parts product in the factored form
 * prod_i (1 + a q^{2i})^i / [(1-q^{2i-1})(1-a q^{2i-1})
 *                            (1-q^{2i})^{floor(i/2)} (1-a^2 q^{2i})^{floor(i/2)}]. */
TruncSeries gf_odd_parts(int trunc);

/* Single row, at most c parts, entries at most n:
 * sum_k a^k q^{k(k+1)/2} (q)_{n-k+c} / ((q)_{n-k} (q)_k (q)_{c-k}). */
TruncSeries gf_row_bounded(int n, int c, int trunc);

/* Profile product for skew shapes: pairs of positions i < j with bit_i = 0,
 * bit_j = 1 contribute (1 - t q^{j-i})/(1 - q^{j-i}). */
TruncSeries gf_skew(const Profile& profile, int trunc);

/* Cylindric product of period T = profile length:
 * prod_n 1/(1-q^{nT}) prod_{bit_i=0, bit_j=1} over residues of j-i mod T. */
TruncSeries gf_cylindric(const Profile& profile, int trunc);

// sums of det_overpartition_matrix over doubled tuples; at most r rows, c columns
TruncSeries gf_box_det_sum(int r, int c, int trunc);

}  // namespace povp
