#pragma once

#include <string>
#include <vector>

#include "povp/objects.hpp"
#include "povp/partition.hpp"
#include "povp/series.hpp"

namespace povp {

enum class Topology { Planar, Cylindric };

/* 0/1 profile word.  Bit i sits between partitions i and i+1 of a sequence;
 * bit 0 means the later partition contains the earlier one (quotient a
 * horizontal strip), bit 1 the reverse. */
struct Profile {
    std::vector<int> bits;
    int size() const { return static_cast<int>(bits.size()); }
    bool valid_bits() const {
        for (int b : bits)
            if (b != 0 && b != 1) return false;
        return true;
    }
    // skew convention: first bit 0, last bit 1
    bool valid_skew_endpoints() const {
        return !bits.empty() && bits.front() == 0 && bits.back() == 1;
    }
    bool operator==(const Profile& o) const { return bits == o.bits; }
    std::string str() const;
};

/* Shape encoded by a profile word: each 0-bit contributes a row whose length
 * is the number of 1-bits to its right. */
Partition profile_to_shape(const Profile& p);
Profile shape_to_profile(const Partition& lambda);

struct InterlacingSequence {
    std::vector<Partition> partitions;
    Profile profile;  // length = partitions.size() - 1
    Topology topology = Topology::Planar;

    int size() const { return static_cast<int>(partitions.size()); }
    // total weight; for cylindric sequences the identified end partition is
    // counted once (indices 1..T)
    int weight() const;
    ValidationResult validate() const;
};

// Plane partition as the interlacing sequence of its diagonals.
InterlacingSequence diagonals_of(const PlanePartition& pp);

/* Border decomposition.  Levels follow the diagonal distance to the rim of
 * each equal-value connected component; border components are the rookwise
 * connected pieces of constant level.  On cylinders a border component whose
 * cells chain around the full circumference carries no finite level and is
 * flagged as wrapping. */
struct BorderComponent {
    int connected_id = 0;
    int level = 0;
    bool wraps = false;
    int cell_count = 0;
};

struct BorderDecomposition {
    std::vector<BorderComponent> components;
    int connected_count = 0;
    // census[i] = number of non-wrapping border components of level i (index 0 unused)
    std::vector<int> level_census() const;
};

BorderDecomposition border_decomposition(const PlanePartition& pp);
BorderDecomposition border_decomposition(const InterlacingSequence& seq);

// prod over levels (1 - t^i)^{n_i}; wrapping components contribute 1.
HLPoly a_poly(const BorderDecomposition& d);

HLPoly a_weight(const PlanePartition& pp);
HLPoly a_weight(const InterlacingSequence& seq);  // planar or cylindric

}  // namespace povp
