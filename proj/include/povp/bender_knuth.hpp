#pragma once

#include "povp/objects.hpp"
#include "povp/partition.hpp"
#include "povp/series.hpp"

namespace povp {

/* Column-strict plane partition: positive entries, rows weakly decreasing,
 * columns strictly decreasing. */
bool column_strict(const PlanePartition& pp);

// shape of entries >= m ("the m-th slice"); m >= 1
Partition slice_shape(const PlanePartition& pp, int m);

/* Pairing of column-strict plane partitions of equal shape with arbitrary
 * plane partitions: diagonal x of the output carries the (x+1)-st slice of
 * sigma for x >= 0 and the (1-x)-th slice of lambda for x < 0. */
PlanePartition bk_merge(const PlanePartition& sigma, const PlanePartition& lambda);
std::pair<PlanePartition, PlanePartition> bk_split(const PlanePartition& pi);

/* phi weight of a column-strict plane partition: product of the strip
 * polynomials of consecutive slices. */
HLPoly bk_phi(const PlanePartition& cspp);

// all column-strict plane partitions of the given shape with entries <= maxe
void for_each_column_strict(const Partition& shape, int maxe,
                            const std::function<void(const PlanePartition&)>& f);

}  // namespace povp
