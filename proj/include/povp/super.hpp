#pragma once

#include <functional>

#include "povp/objects.hpp"
#include "povp/partition.hpp"

namespace povp {

/* Super tableau of a shape: nonoverlined entries form a column-strict
 * reverse plane partition on an inner shape nu, overlined entries a
 * row-strict reverse plane partition on the complement. */
struct SuperTableau {
    Partition shape;
    std::vector<std::vector<Cell>> cells;

    Partition inner_shape() const;  // region of nonoverlined entries
    ValidationResult validate(int max_plain, int max_overlined) const;
    int weight() const;
    int overline_count() const;
};

/* Relabel (a -> k+1-a, abar -> (l+1-a)bar) and run the exchange sweep:
 * repeatedly take the smallest active nonoverlined entry (rightmost among
 * ties) and swap it with the larger of its east and south neighbors (east on
 * ties) until it dominates both.  Result is a plane overpartition. */
PlaneOverpartition super_to_pop(const SuperTableau& t, int k, int l);

// all super tableaux of a shape with plain entries <= k, overlined <= l
void for_each_super_tableau(const Partition& shape, int k, int l,
                            const std::function<void(const SuperTableau&)>& f);

/* Overline toggle on the uppermost-then-rightmost entry exceeding n of a
 * reverse plane overpartition; identity when no entry exceeds n. */
ReversePlaneOverpartition toggle_large_entry(const ReversePlaneOverpartition& r, int n);

}  // namespace povp
