#pragma once

#include <functional>
#include <set>
#include <vector>

#include "povp/interlacing.hpp"
#include "povp/objects.hpp"
#include "povp/series.hpp"

namespace povp {

/* Enumeration constraints for plane overpartitions. */
struct Constraint {
    enum Kind { All, Shape, BoundedShape, Box, MaxEntry, PartsIn, Reverse } kind = All;
    Partition lambda;        // Shape / BoundedShape / Reverse
    int rows = 0, cols = 0;  // Box
    int max_entry = 0;       // MaxEntry
    std::set<int> parts_in;  // PartsIn

    static Constraint all() { return {}; }
    static Constraint shape(Partition l) { return {Shape, std::move(l), 0, 0, 0, {}}; }
    static Constraint bounded_shape(Partition l) { return {BoundedShape, std::move(l), 0, 0, 0, {}}; }
    static Constraint box(int r, int c) { return {Box, {}, r, c, 0, {}}; }
    static Constraint entry_bound(int n) { return {MaxEntry, {}, 0, 0, n, {}}; }
    static Constraint parts_in_set(std::set<int> s) { return {PartsIn, {}, 0, 0, 0, std::move(s)}; }
    static Constraint reverse(Partition l) { return {Reverse, std::move(l), 0, 0, 0, {}}; }
};

enum class WeightSpec { AQ, TQ, CylTQ };

/* Plane overpartitions of weight <= max_weight under the constraint, in
 * canonical (weight, grid) order.  Generation goes through the underlying
 * diagonally strict plane partitions, expanded by all valid overline
 * assignments.  Not used for Reverse (see enum_reverse_pops). */
void enum_pops(const Constraint& c, int max_weight,
               const std::function<void(const PlaneOverpartition&)>& f);
std::vector<PlaneOverpartition> enum_pops_vec(const Constraint& c, int max_weight);

/* Reverse plane overpartitions of the given shape, weight <= max_weight
 * (includes the all-zero filling). */
void enum_reverse_pops(const Partition& shape, int max_weight,
                       const std::function<void(const ReversePlaneOverpartition&)>& f);
std::vector<ReversePlaneOverpartition> enum_reverse_pops_vec(const Partition& shape,
                                                             int max_weight);

/* Plane partitions fitting in rows x cols with weight <= max_weight. */
void enum_plane_partitions(int rows, int cols, int max_weight,
                           const std::function<void(const PlanePartition&)>& f);

/* Interlacing sequences.  Skew: profile carries the full word (first bit 0,
 * last bit 1); emitted sequences have empty first and last partitions and
 * one inner partition per gap.  Cylindric: profile length T; emitted
 * sequences are (p0,...,pT) with pT = p0. */
void enum_interlacing(const Profile& profile, Topology topology, int max_weight,
                      const std::function<void(const InterlacingSequence&)>& f);

// Single-row overpartitions with at most max_parts parts, each <= max_entry.
void enum_row_overpartitions(int max_parts, int max_entry, int max_weight,
                             const std::function<void(const Overpartition&)>& f);

/* Weighted generating functions of enumerated families. */
TruncSeries pops_gf_aq(const Constraint& c, int trunc);                 // sum a^o q^|.|
TruncSeries reverse_pops_gf(const Partition& shape, int trunc);         // sum q^|.|
TruncSeries plane_partitions_gf_tq(int rows, int cols, int trunc);      // sum A(t) q^|.|
TruncSeries interlacing_gf_tq(const Profile& profile, Topology topology, int trunc);
TruncSeries row_overpartitions_gf_aq(int max_parts, int max_entry, int trunc);

}  // namespace povp
