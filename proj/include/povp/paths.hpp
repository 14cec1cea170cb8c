#pragma once

#include <vector>

#include "povp/objects.hpp"
#include "povp/partition.hpp"

namespace povp {

/* Lattice path built from East, North and North-East steps.  North steps on
 * the vertical line x = i weigh q^i; a North-East step crossing from line i
 * to i+1 weighs a q^{i+1}; East steps weigh 1. */
enum class Step { E, N, NE };

struct LatticePath {
    int start_x = 0;
    int start_y = 0;
    std::vector<Step> steps;

    int end_x() const;
    int end_y() const;
    int weight_q() const;  // sum of q-exponents
    int weight_a() const;  // number of NE steps
    bool operator==(const LatticePath& o) const {
        return start_x == o.start_x && start_y == o.start_y && steps == o.steps;
    }
};

/* Overpartition with at most k parts, largest part at most x, as a path from
 * (0, y0) to (x, y0 + k).  Parts are read bottom-up; an overlined part
 * becomes the North-East corner step of its run. */
LatticePath overpartition_to_path(const Overpartition& op, int k, int x, int y0 = 0);
Overpartition path_to_overpartition(const LatticePath& p);

/* Nonintersecting encoding of a plane overpartition with row bounds
 * lambda_{i+1} <= parts(row i) <= lambda_i; path i runs from
 * (0, lambda_1 - lambda_i + i - 1) to (x, lambda_1 + i - 1). */
std::vector<LatticePath> pop_to_paths(const PlaneOverpartition& pop, const Partition& lambda,
                                      int x);
PlaneOverpartition paths_to_pop(const std::vector<LatticePath>& paths);

bool paths_nonintersecting(const std::vector<LatticePath>& paths);

}  // namespace povp
