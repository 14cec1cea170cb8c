#include "povp/bender_knuth.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "povp/hall_littlewood.hpp"

namespace povp {

bool column_strict(const PlanePartition& pp) {
    if (!pp.validate().ok()) return false;
    for (int i = 2; i <= pp.row_count(); ++i)
        for (int j = 1; j <= pp.row_length(i); ++j)
            if (pp.entry(i, j) >= pp.entry(i - 1, j)) return false;
    return true;
}

Partition slice_shape(const PlanePartition& pp, int m) {
    std::vector<int> rows;
    for (int i = 1; i <= pp.row_count(); ++i) {
        int len = 0;
        while (pp.entry(i, len + 1) >= m) ++len;
        if (len > 0) rows.push_back(len);
    }
    return Partition(std::move(rows));
}

PlanePartition bk_merge(const PlanePartition& sigma, const PlanePartition& lambda) {
    if (!(sigma.shape() == lambda.shape()))
        throw std::invalid_argument("bk_merge: shapes differ");
    if (!column_strict(sigma) || !column_strict(lambda))
        throw std::invalid_argument("bk_merge: inputs must be column strict");
    int maxv = 0;
    for (const auto& r : sigma.rows())
        for (int v : r) maxv = std::max(maxv, v);
    for (const auto& r : lambda.rows())
        for (int v : r) maxv = std::max(maxv, v);

    // entries of diagonal x as a partition
    auto diag = [&](int x) -> Partition {
        const PlanePartition& src = x >= 0 ? sigma : lambda;
        int m = x >= 0 ? x + 1 : 1 - x;
        return slice_shape(src, m);
    };

    // rows of the output: entry (i,j) = number of m with diagonal (j-i)
    // slice having at least min(i,j) parts
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= maxv + lambda.row_length(1) + 8; ++i) {
        std::vector<int> row;
        for (int j = 1;; ++j) {
            int x = j - i;
            Partition d = diag(x);
            int k = std::min(i, j);
            int v = d.part(k);
            if (v == 0) break;
            row.push_back(v);
        }
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    PlanePartition out(std::move(rows));
    ValidationResult vr = out.validate();
    if (!vr.ok()) throw std::logic_error("bk_merge: assembled grid invalid");
    return out;
}

std::pair<PlanePartition, PlanePartition> bk_split(const PlanePartition& pi) {
    if (!pi.validate().ok()) throw std::invalid_argument("bk_split: invalid plane partition");
    // diagonal x of pi as a partition
    auto diag = [&](int x) -> Partition {
        std::vector<int> vals;
        for (int k = 1;; ++k) {
            int i = x >= 0 ? k : k - x;
            int j = x >= 0 ? k + x : k;
            int v = pi.entry(i, j);
            if (v == 0) break;
            vals.push_back(v);
        }
        return Partition::from_unchecked(std::move(vals));
    };
    // rebuild a column-strict plane partition from its slice sequence
    auto rebuild = [&](const std::function<Partition(int)>& slice) -> PlanePartition {
        std::vector<std::vector<int>> rows;
        Partition base = slice(1);
        for (int i = 1; i <= base.length(); ++i) {
            std::vector<int> row;
            for (int j = 1; j <= base.part(i); ++j) {
                int count = 0;
                for (int m = 1;; ++m) {
                    Partition s = slice(m);
                    if (s.part(i) >= j)
                        count = m;
                    else if (s.empty() || s.part(i) < j)
                        break;
                }
                row.push_back(count);
            }
            rows.push_back(std::move(row));
        }
        return PlanePartition(std::move(rows));
    };
    PlanePartition sigma = rebuild([&](int m) { return diag(m - 1); });
    PlanePartition lambda = rebuild([&](int m) { return diag(1 - m); });
    if (!column_strict(sigma) || !column_strict(lambda))
        throw std::logic_error("bk_split: slices do not assemble column strict outputs");
    return {sigma, lambda};
}

HLPoly bk_phi(const PlanePartition& cspp) {
    HLPoly p = HLPoly::one();
    for (int m = 1;; ++m) {
        Partition cur = slice_shape(cspp, m);
        if (cur.empty()) break;
        Partition nxt = slice_shape(cspp, m + 1);
        p = p * hl_strip_polys(cur, nxt).phi;
    }
    return p;
}

void for_each_column_strict(const Partition& shape, int maxe,
                            const std::function<void(const PlanePartition&)>& f) {
    int rows = shape.length();
    std::vector<std::vector<int>> grid(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i + 1)), 0);
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape.part(i + 1); ++j) order.push_back({i, j});
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == order.size()) {
            f(PlanePartition(grid));
            return;
        }
        auto [i, j] = order[k];
        auto val = [&](int r, int c) -> int {
            if (r < 0 || c < 0 || r >= rows || c >= shape.part(r + 1)) return 0;
            return grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
        };
        int hi = maxe;
        if (i > 0) hi = std::min(hi, val(i - 1, j) - 1);
        if (j > 0) hi = std::min(hi, val(i, j - 1));
        // strictly decreasing column: leave room for the cells below
        int below = 0;
        for (int r = i + 1; r < rows; ++r) below += shape.part(r + 1) >= j + 1;
        int lo = 1 + below;
        for (int v = lo; v <= hi; ++v) {
            grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            rec(k + 1);
        }
        grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };
    rec(0);
}

}  // namespace povp
