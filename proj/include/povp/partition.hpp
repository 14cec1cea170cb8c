#pragma once

#include <functional>
#include <string>
#include <vector>

namespace povp {

/* Integer partition: weakly decreasing positive parts.  Trailing zeros are
 * stripped on construction. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition from_unchecked(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int part(int i) const;  // 1-based, 0 outside
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    int multiplicity(int value) const;  // m_i
    bool contains(const Partition& mu) const;
    // lambda/mu has at most one cell per column
    static bool horizontal_strip(const Partition& lambda, const Partition& mu);

    int hook(int i, int j) const;     // 1-based cell
    int content(int i, int j) const;  // j - i

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

// All partitions of weight exactly n (max_part/max_len <= 0 means unbounded).
void for_each_partition_of(int n, int max_part, int max_len,
                           const std::function<void(const Partition&)>& f);

// All partitions of weight <= n.
void for_each_partition_up_to(int n, int max_part, int max_len,
                              const std::function<void(const Partition&)>& f);

/* All mu >= lambda with mu/lambda a horizontal strip and |mu| <= weight_cap:
 * mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...; mu_1 <= lambda_1 + max_grow. */
void for_each_hstrip_above(const Partition& lambda, int weight_cap, int max_grow,
                           const std::function<void(const Partition&)>& f);

// All mu <= lambda with lambda/mu a horizontal strip.
void for_each_hstrip_below(const Partition& lambda,
                           const std::function<void(const Partition&)>& f);

/* Overpartition: weakly decreasing positive parts where the last occurrence
 * of a value may be overlined. */
struct OverpartEntry {
    int value = 0;
    bool overlined = false;
    bool operator==(const OverpartEntry& o) const {
        return value == o.value && overlined == o.overlined;
    }
    bool operator<(const OverpartEntry& o) const {
        if (value != o.value) return value < o.value;
        return overlined < o.overlined;
    }
};

/* Total order 1bar < 1 < 2bar < 2 < ...; 0 sorts below everything. */
inline int order_key(const OverpartEntry& e) {
    if (e.value == 0) return 0;
    return 2 * e.value - (e.overlined ? 1 : 0);
}

class Overpartition {
public:
    Overpartition() = default;
    explicit Overpartition(std::vector<OverpartEntry> entries)
        : entries_(std::move(entries)) {}

    int length() const { return static_cast<int>(entries_.size()); }
    int weight() const;
    int overline_count() const;
    const std::vector<OverpartEntry>& entries() const { return entries_; }
    Partition underlying() const;

    // Row rules: weakly decreasing values; an overlined value has no later
    // occurrence of the same value.
    std::vector<std::string> violations() const;
    bool valid() const { return violations().empty(); }

    bool operator==(const Overpartition& o) const { return entries_ == o.entries_; }
    std::string str() const;

private:
    std::vector<OverpartEntry> entries_;
};

// Validity of a row prefix/full row as an overpartition sequence.
bool valid_overpartition_row(const std::vector<OverpartEntry>& row);

}  // namespace povp
