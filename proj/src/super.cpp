#include "povp/super.hpp"

#include <algorithm>
#include <stdexcept>

namespace povp {

namespace {

// 0 < 1bar < 1 < 2bar < 2 < ...
int key(const Cell& c) {
    if (c.value == 0) return 0;
    return 2 * c.value - (c.overlined ? 1 : 0);
}

}  // namespace

Partition SuperTableau::inner_shape() const {
    std::vector<int> rows;
    for (const auto& row : cells) {
        int len = 0;
        while (len < static_cast<int>(row.size()) && !row[static_cast<size_t>(len)].overlined)
            ++len;
        if (len > 0) rows.push_back(len);
    }
    return Partition::from_unchecked(std::move(rows));
}

ValidationResult SuperTableau::validate(int max_plain, int max_overlined) const {
    ValidationResult res;
    if (static_cast<int>(cells.size()) != shape.length()) {
        res.violations.push_back("cell grid does not match shape");
        return res;
    }
    for (int i = 1; i <= shape.length(); ++i)
        if (static_cast<int>(cells[static_cast<size_t>(i - 1)].size()) != shape.part(i)) {
            res.violations.push_back("row " + std::to_string(i) + " length differs from shape");
            return res;
        }
    auto at = [&](int i, int j) -> Cell {
        if (i < 1 || i > shape.length() || j < 1 || j > shape.part(i)) return {};
        return cells[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    };
    // inner region must be left justified per row
    Partition nu = inner_shape();
    for (int i = 1; i <= shape.length(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            Cell c = at(i, j);
            if (c.value <= 0) {
                res.violations.push_back("empty cell");
                continue;
            }
            bool inner = j <= nu.part(i);
            if (inner == c.overlined)
                res.violations.push_back("overline region not a skew complement");
            if (!c.overlined) {
                if (c.value > max_plain)
                    res.violations.push_back("plain entry above bound");
                if (at(i, j + 1).value > 0 && !at(i, j + 1).overlined &&
                    at(i, j + 1).value < c.value)
                    res.violations.push_back("plain rows must weakly increase");
                if (at(i + 1, j).value > 0 && !at(i + 1, j).overlined &&
                    at(i + 1, j).value <= c.value)
                    res.violations.push_back("plain columns must strictly increase");
            } else {
                if (c.value > max_overlined)
                    res.violations.push_back("overlined entry above bound");
                if (at(i, j + 1).overlined && at(i, j + 1).value <= c.value)
                    res.violations.push_back("overlined rows must strictly increase");
                if (at(i + 1, j).overlined && at(i + 1, j).value < c.value)
                    res.violations.push_back("overlined columns must weakly increase");
            }
        }
    }
    // nu must be a partition contained in shape
    if (!shape.contains(nu)) res.violations.push_back("inner shape not contained");
    return res;
}

int SuperTableau::weight() const {
    int w = 0;
    for (const auto& row : cells)
        for (const Cell& c : row) w += c.value;
    return w;
}

int SuperTableau::overline_count() const {
    int n = 0;
    for (const auto& row : cells)
        for (const Cell& c : row) n += c.overlined;
    return n;
}

PlaneOverpartition super_to_pop(const SuperTableau& t, int k, int l) {
    ValidationResult tv = t.validate(k, l);
    if (!tv.ok()) throw std::invalid_argument("super_to_pop: invalid tableau");
    std::vector<std::vector<Cell>> g = t.cells;
    std::vector<std::vector<bool>> active(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        active[i].assign(g[i].size(), false);
        for (size_t j = 0; j < g[i].size(); ++j) {
            Cell& c = g[i][j];
            if (c.overlined)
                c.value = l + 1 - c.value;
            else {
                c.value = k + 1 - c.value;
                active[i][j] = true;
            }
        }
    }
    auto at = [&](int i, int j) -> Cell {
        if (i < 0 || i >= static_cast<int>(g.size())) return {};
        if (j < 0 || j >= static_cast<int>(g[static_cast<size_t>(i)].size())) return {};
        return g[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };
    for (;;) {
        // smallest active entry, rightmost among ties
        int bi = -1, bj = -1, bkey = 0;
        for (int i = 0; i < static_cast<int>(g.size()); ++i)
            for (int j = 0; j < static_cast<int>(g[static_cast<size_t>(i)].size()); ++j) {
                if (!active[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
                int kk = key(g[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (bi == -1 || kk < bkey || (kk == bkey && j > bj)) {
                    bi = i;
                    bj = j;
                    bkey = kk;
                }
            }
        if (bi == -1) break;
        int i = bi, j = bj;
        for (;;) {
            Cell cur = at(i, j);
            Cell east = at(i, j + 1);
            Cell south = at(i + 1, j);
            if (key(cur) >= key(east) && key(cur) >= key(south)) break;
            bool go_east = key(east) >= key(south);
            int ni = go_east ? i : i + 1;
            int nj = go_east ? j + 1 : j;
            std::swap(g[static_cast<size_t>(i)][static_cast<size_t>(j)],
                      g[static_cast<size_t>(ni)][static_cast<size_t>(nj)]);
            // the active flag travels with the moving entry
            std::swap(active[static_cast<size_t>(i)][static_cast<size_t>(j)],
                      active[static_cast<size_t>(ni)][static_cast<size_t>(nj)]);
            i = ni;
            j = nj;
        }
        active[static_cast<size_t>(i)][static_cast<size_t>(j)] = false;
    }
    PlaneOverpartition pop(std::move(g));
    ValidationResult pv = pop.validate();
    if (!pv.ok())
        throw std::logic_error("super_to_pop: sweep did not produce a plane overpartition");
    return pop;
}

void for_each_super_tableau(const Partition& shape, int k, int l,
                            const std::function<void(const SuperTableau&)>& f) {
    // choose the inner shape nu, fill plain part column-strict increasing,
    // overlined part row-strict increasing
    std::vector<Partition> nus;
    std::function<void(std::vector<int>&, int)> shapes = [&](std::vector<int>& acc, int idx) {
        if (idx > shape.length()) {
            nus.push_back(Partition::from_unchecked(acc));
            return;
        }
        int hi = std::min(shape.part(idx), idx == 1 ? shape.part(1) : acc[static_cast<size_t>(idx - 2)]);
        for (int v = hi; v >= 0; --v) {
            acc.push_back(v);
            shapes(acc, idx + 1);
            acc.pop_back();
        }
    };
    std::vector<int> acc;
    shapes(acc, 1);

    for (const Partition& nu : nus) {
        if (!shape.contains(nu)) continue;
        std::vector<std::pair<int, int>> cells;  // 0-based
        for (int i = 1; i <= shape.length(); ++i)
            for (int j = 1; j <= shape.part(i); ++j) cells.push_back({i - 1, j - 1});
        std::vector<std::vector<Cell>> g(static_cast<size_t>(shape.length()));
        for (int i = 1; i <= shape.length(); ++i)
            g[static_cast<size_t>(i - 1)].assign(static_cast<size_t>(shape.part(i)), Cell{});
        std::function<void(size_t)> rec = [&](size_t idx) {
            if (idx == cells.size()) {
                SuperTableau t{shape, g};
                if (t.validate(k, l).ok()) f(t);
                return;
            }
            auto [i, j] = cells[idx];
            bool inner = j + 1 <= nu.part(i + 1);
            int lo = 1, hi = inner ? k : l;
            for (int v = lo; v <= hi; ++v) {
                g[static_cast<size_t>(i)][static_cast<size_t>(j)] = {v, !inner};
                rec(idx + 1);
            }
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] = {};
        };
        rec(0);
    }
}

ReversePlaneOverpartition toggle_large_entry(const ReversePlaneOverpartition& r, int n) {
    ValidationResult rv = r.validate();
    if (!rv.ok()) throw std::invalid_argument("toggle_large_entry: invalid input");
    int bi = -1, bj = -1;
    for (int i = 1; i <= r.shape().length() && bi == -1; ++i)
        for (int j = r.shape().part(i); j >= 1; --j)
            if (r.cell(i, j).value > n) {
                bi = i;
                bj = j;
                break;
            }
    if (bi == -1) return r;  // fixed point
    auto cells = r.cells();
    Cell& c = cells[static_cast<size_t>(bi - 1)][static_cast<size_t>(bj - 1)];
    c.overlined = !c.overlined;
    ReversePlaneOverpartition out(r.shape(), std::move(cells));
    ValidationResult ov = out.validate();
    if (!ov.ok()) throw std::logic_error("toggle_large_entry: toggle broke validity");
    return out;
}

}  // namespace povp
