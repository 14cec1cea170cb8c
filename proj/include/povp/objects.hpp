#pragma once

#include <string>
#include <vector>

#include "povp/partition.hpp"
#include "povp/series.hpp"

namespace povp {

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/* Plane partition: grid of positive integers, rows and columns weakly
 * decreasing, row lengths weakly decreasing. */
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int row_length(int i) const;            // 1-based
    int entry(int i, int j) const;           // 1-based, 0 outside
    int weight() const;
    Partition shape() const;
    bool diagonally_strict() const;

    ValidationResult validate() const;
    bool operator==(const PlanePartition& o) const { return rows_ == o.rows_; }
    bool operator<(const PlanePartition& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

struct Cell {
    int value = 0;
    bool overlined = false;
    bool operator==(const Cell& o) const {
        return value == o.value && overlined == o.overlined;
    }
    bool operator<(const Cell& o) const {
        if (value != o.value) return value < o.value;
        return overlined < o.overlined;
    }
};

/* Plane overpartition: plane partition where in each row the last occurrence
 * of a value may be overlined, and in each column all occurrences of a value
 * after the first are overlined. */
class PlaneOverpartition {
public:
    PlaneOverpartition() = default;
    explicit PlaneOverpartition(std::vector<std::vector<Cell>> rows) : rows_(std::move(rows)) {}

    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int row_length(int i) const;
    Cell cell(int i, int j) const;  // 1-based; {0,false} outside
    int weight() const;
    int overline_count() const;
    Partition shape() const;
    PlanePartition underlying() const;
    Overpartition row(int i) const;  // 1-based

    ValidationResult validate() const;
    bool operator==(const PlaneOverpartition& o) const { return rows_ == o.rows_; }
    bool operator<(const PlaneOverpartition& o) const { return rows_ < o.rows_; }
    std::string str() const;

private:
    std::vector<std::vector<Cell>> rows_;
};

/* Reverse plane overpartition on a fixed shape: nonnegative entries weakly
 * increasing along rows and columns; only positive entries carry overlines;
 * row rule on last occurrences, column rule on first occurrences. */
class ReversePlaneOverpartition {
public:
    ReversePlaneOverpartition() = default;
    ReversePlaneOverpartition(Partition shape, std::vector<std::vector<Cell>> cells)
        : shape_(std::move(shape)), cells_(std::move(cells)) {}

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<Cell>>& cells() const { return cells_; }
    Cell cell(int i, int j) const;  // 1-based; {0,false} outside
    int weight() const;
    int overline_count() const;

    ValidationResult validate() const;
    bool operator==(const ReversePlaneOverpartition& o) const {
        return shape_ == o.shape_ && cells_ == o.cells_;
    }
    bool operator<(const ReversePlaneOverpartition& o) const {
        if (shape_ != o.shape_) return shape_ < o.shape_;
        return cells_ < o.cells_;
    }
    std::string str() const;

private:
    Partition shape_;
    std::vector<std::vector<Cell>> cells_;
};

/* Connected components of an equal-filled grid (rookwise).  Used both for
 * overline expansion of diagonally strict plane partitions and for border
 * component analysis. */
struct GridComponents {
    // component id per cell, -1 outside shape
    std::vector<std::vector<int>> comp;
    int count = 0;
    // for each component the unique cell with no equal neighbor above or to
    // the right (the free cell for overline choices)
    std::vector<std::pair<int, int>> free_cell;  // 0-based (row, col)
};

GridComponents grid_components(const std::vector<std::vector<int>>& rows);

/* All valid overline assignments of a diagonally strict plane partition:
 * one free choice per connected component; cells with an equal value above
 * are forced overlined, cells with an equal value to the right stay plain. */
std::vector<PlaneOverpartition> overline_expansions(const PlanePartition& pp);

/* Same expansion for reverse plane partitions of a fixed shape (entries
 * nonnegative, positive diagonals strict). */
std::vector<ReversePlaneOverpartition> reverse_overline_expansions(
    const Partition& shape, const std::vector<std::vector<int>>& grid);

// Number of connected components of the positive part of a grid.
int component_count(const std::vector<std::vector<int>>& rows);

// hooks/contents per cell of a partition diagram
struct HookContent {
    int hook;
    int content;
};
std::vector<std::vector<HookContent>> hooks_and_contents(const Partition& lambda);

}  // namespace povp
