#include "povp/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace povp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
    }
}

Partition Partition::from_unchecked(std::vector<int> parts) {
    Partition p;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    p.parts_ = std::move(parts);
    return p;
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[static_cast<size_t>(j)]++;
    return Partition(std::move(c));
}

int Partition::multiplicity(int value) const {
    int m = 0;
    for (int p : parts_) m += (p == value);
    return m;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

bool Partition::horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return false;
    // at most one cell per column <=> lambda_{i+1} <= mu_i
    for (int i = 1; i <= lambda.length() - 1; ++i)
        if (lambda.part(i + 1) > mu.part(i)) return false;
    return true;
}

int Partition::hook(int i, int j) const {
    Partition c = conjugate();
    return part(i) + c.part(j) - i - j + 1;
}

int Partition::content(int i, int j) const { return j - i; }

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

namespace {

void partition_rec(int remaining, int max_part, int max_len, std::vector<int>& acc,
                   const std::function<void(const Partition&)>& f) {
    if (remaining == 0) {
        f(Partition::from_unchecked(acc));
        return;
    }
    if (max_len == 0) return;
    int hi = remaining;
    if (max_part > 0) hi = std::min(hi, max_part);
    if (!acc.empty()) hi = std::min(hi, acc.back());
    for (int p = hi; p >= 1; --p) {
        acc.push_back(p);
        partition_rec(remaining - p, max_part, max_len > 0 ? max_len - 1 : -1, acc, f);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition_of(int n, int max_part, int max_len,
                           const std::function<void(const Partition&)>& f) {
    if (n < 0) return;
    std::vector<int> acc;
    partition_rec(n, max_part, max_len == 0 ? -1 : max_len, acc, f);
}

void for_each_partition_up_to(int n, int max_part, int max_len,
                              const std::function<void(const Partition&)>& f) {
    for (int w = 0; w <= n; ++w) for_each_partition_of(w, max_part, max_len, f);
}

void for_each_hstrip_above(const Partition& lambda, int weight_cap, int max_grow,
                           const std::function<void(const Partition&)>& f) {
    // mu_1 in [lambda_1, lambda_1 + max_grow]; interlacing mu_i in
    // [lambda_i, lambda_{i-1}]; recursion with weight budget.
    int budget = weight_cap - lambda.weight();
    if (budget < 0) return;
    int max_first = lambda.part(1) + std::min(budget, max_grow < 0 ? budget : max_grow);

    // Iterative DFS over rows 1..length+1.
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx > lambda.length() + 1) {
            f(Partition::from_unchecked(acc));
            return;
        }
        int lo = lambda.part(idx);
        int hi = idx == 1 ? max_first : std::min(lambda.part(idx - 1), lo + rem);
        hi = std::min(hi, lo + rem);
        for (int v = hi; v >= lo; --v) {
            acc.push_back(v);
            if (v == 0) {
                f(Partition::from_unchecked(acc));
            } else {
                rec(idx + 1, rem - (v - lo));
            }
            acc.pop_back();
            if (v == 0) break;
        }
    };
    rec(1, budget);
}

void for_each_hstrip_below(const Partition& lambda,
                           const std::function<void(const Partition&)>& f) {
    // mu with lambda/mu horizontal strip: lambda_i >= mu_i >= lambda_{i+1}
    std::vector<int> acc;
    std::function<void(int)> rec = [&](int idx) {
        if (idx > lambda.length()) {
            f(Partition::from_unchecked(acc));
            return;
        }
        int lo = lambda.part(idx + 1);
        int hi = lambda.part(idx);
        for (int v = hi; v >= lo; --v) {
            acc.push_back(v);
            if (v == 0)
                f(Partition::from_unchecked(acc));
            else
                rec(idx + 1);
            acc.pop_back();
            if (v == 0) break;
        }
    };
    rec(1);
}

int Overpartition::weight() const {
    int w = 0;
    for (const auto& e : entries_) w += e.value;
    return w;
}

int Overpartition::overline_count() const {
    int c = 0;
    for (const auto& e : entries_) c += e.overlined;
    return c;
}

Partition Overpartition::underlying() const {
    std::vector<int> p;
    p.reserve(entries_.size());
    for (const auto& e : entries_) p.push_back(e.value);
    return Partition(std::move(p));
}

std::vector<std::string> Overpartition::violations() const {
    std::vector<std::string> v;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].value <= 0)
            v.push_back("nonpositive part at index " + std::to_string(i + 1));
        if (i + 1 < entries_.size()) {
            if (entries_[i].value < entries_[i + 1].value)
                v.push_back("parts not weakly decreasing at index " + std::to_string(i + 1));
            if (entries_[i].overlined && entries_[i].value == entries_[i + 1].value)
                v.push_back("overlined entry not last occurrence at index " +
                            std::to_string(i + 1));
        }
    }
    return v;
}

std::string Overpartition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << entries_[i].value;
        if (entries_[i].overlined) os << "~";
    }
    os << ")";
    return os.str();
}

bool valid_overpartition_row(const std::vector<OverpartEntry>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i].value <= 0) return false;
        if (i + 1 < row.size()) {
            if (row[i].value < row[i + 1].value) return false;
            if (row[i].overlined && row[i].value == row[i + 1].value) return false;
        }
    }
    return true;
}

}  // namespace povp
