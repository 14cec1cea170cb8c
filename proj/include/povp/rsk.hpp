#pragma once

#include <vector>

#include "povp/objects.hpp"
#include "povp/partition.hpp"

namespace povp {

/* 2n x 2n block matrix: A, D nonnegative integers; B, C in {0,1}. */
struct BlockMatrix {
    int n = 0;
    std::vector<std::vector<int>> a, b, c, d;  // each n x n

    static BlockMatrix zero(int n);
    ValidationResult validate() const;
    BlockMatrix transposed() const;
    bool symmetric() const { return *this == transposed(); }
    bool operator==(const BlockMatrix& o) const {
        return n == o.n && a == o.a && b == o.b && c == o.c && d == o.d;
    }
    // weight of the image pair under the insertion correspondence
    int pair_weight() const;
};

/* Entry of the two-line array; values ordered 1bar < 1 < 2bar < 2 < ... */
struct BarredInt {
    int value = 0;
    bool overlined = false;
    int key() const { return 2 * value - (overlined ? 1 : 0); }
    bool operator==(const BarredInt& o) const {
        return value == o.value && overlined == o.overlined;
    }
};

struct TwoLineArray {
    std::vector<BarredInt> top, bottom;
    bool operator==(const TwoLineArray& o) const { return top == o.top && bottom == o.bottom; }
};

/* Encode a block matrix into its sorted two-line array: top line
 * nonincreasing; among equal overlined (plain) tops, bottoms weakly
 * increasing (decreasing). */
TwoLineArray encode_matrix(const BlockMatrix& m);

/* Insert a barred value into one overpartition row: append if the row stays
 * valid, otherwise replace the smallest part whose replacement keeps the row
 * valid (rightmost among order-equal candidates) and bump it. */
struct RowInsertResult {
    bool bumped = false;
    BarredInt bumped_value;
    int column = 0;  // 1-based position written
};
RowInsertResult insert_into_row(std::vector<Cell>& row, BarredInt v);

struct RskPair {
    PlaneOverpartition p, q;
};

RskPair rsk_forward(const BlockMatrix& m);
// n fixes the block size of the result; entries of P and Q must be <= n.
BlockMatrix rsk_inverse(const RskPair& pq, int n);

// occurrence counts of value (plain/overlined) in a plane overpartition
int count_occurrences(const PlaneOverpartition& p, int value, bool overlined);

}  // namespace povp
