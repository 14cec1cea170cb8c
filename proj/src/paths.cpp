#include "povp/paths.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace povp {

int LatticePath::end_x() const {
    int x = start_x;
    for (Step s : steps) x += (s == Step::E || s == Step::NE) ? 1 : 0;
    return x;
}

int LatticePath::end_y() const {
    int y = start_y;
    for (Step s : steps) y += (s == Step::N || s == Step::NE) ? 1 : 0;
    return y;
}

int LatticePath::weight_q() const {
    int x = start_x, w = 0;
    for (Step s : steps) {
        if (s == Step::E) {
            ++x;
        } else if (s == Step::N) {
            w += x;
        } else {
            ++x;
            w += x;
        }
    }
    return w;
}

int LatticePath::weight_a() const {
    int c = 0;
    for (Step s : steps) c += s == Step::NE;
    return c;
}

LatticePath overpartition_to_path(const Overpartition& op, int k, int x, int y0) {
    if (op.length() > k)
        throw std::invalid_argument("overpartition_to_path: too many parts");
    if (op.length() > 0 && op.entries().front().value > x)
        throw std::invalid_argument("overpartition_to_path: part exceeds horizontal extent");
    LatticePath p;
    p.start_x = 0;
    p.start_y = y0;
    int cur = 0;
    // zero parts first (parts read bottom-up = reversed entry order)
    for (int i = 0; i < k - op.length(); ++i) p.steps.push_back(Step::N);
    for (int i = op.length(); i >= 1; --i) {
        OverpartEntry e = op.entries()[static_cast<size_t>(i - 1)];
        if (e.overlined) {
            while (cur < e.value - 1) {
                p.steps.push_back(Step::E);
                ++cur;
            }
            p.steps.push_back(Step::NE);
            ++cur;
        } else {
            while (cur < e.value) {
                p.steps.push_back(Step::E);
                ++cur;
            }
            p.steps.push_back(Step::N);
        }
    }
    while (cur < x) {
        p.steps.push_back(Step::E);
        ++cur;
    }
    return p;
}

Overpartition path_to_overpartition(const LatticePath& p) {
    std::vector<OverpartEntry> parts;  // bottom-up
    int x = p.start_x;
    for (Step s : p.steps) {
        if (s == Step::E) {
            ++x;
        } else if (s == Step::N) {
            if (x > 0) parts.push_back({x, false});
        } else {
            ++x;
            parts.push_back({x, true});
        }
    }
    std::reverse(parts.begin(), parts.end());
    Overpartition op(std::move(parts));
    if (!op.valid()) throw std::invalid_argument("path_to_overpartition: invalid path");
    return op;
}

std::vector<LatticePath> pop_to_paths(const PlaneOverpartition& pop, const Partition& lambda,
                                      int x) {
    int l = lambda.length();
    if (pop.row_count() > l)
        throw std::invalid_argument("pop_to_paths: more rows than the bounding shape");
    std::vector<LatticePath> paths;
    for (int i = 1; i <= l; ++i) {
        Overpartition row = pop.row(i);
        if (row.length() > lambda.part(i) ||
            row.length() < (i < l ? lambda.part(i + 1) : 0))
            throw std::invalid_argument("pop_to_paths: row length out of bounds");
        LatticePath p = overpartition_to_path(row, lambda.part(i), x,
                                              lambda.part(1) - lambda.part(i) + i - 1);
        paths.push_back(p);
    }
    if (!paths_nonintersecting(paths))
        throw std::logic_error("pop_to_paths: produced intersecting paths");
    return paths;
}

PlaneOverpartition paths_to_pop(const std::vector<LatticePath>& paths) {
    if (!paths_nonintersecting(paths))
        throw std::invalid_argument("paths_to_pop: intersecting family");
    std::vector<std::vector<Cell>> rows;
    for (const LatticePath& p : paths) {
        Overpartition op = path_to_overpartition(p);
        std::vector<Cell> row;
        for (const auto& e : op.entries()) row.push_back({e.value, e.overlined});
        rows.push_back(std::move(row));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    PlaneOverpartition pop(std::move(rows));
    ValidationResult v = pop.validate();
    if (!v.ok()) throw std::invalid_argument("paths_to_pop: rows do not assemble: " +
                                             v.violations.front());
    return pop;
}

bool paths_nonintersecting(const std::vector<LatticePath>& paths) {
    /* Paths share no lattice point.  Diagonal steps cannot cross each other
     * or axis steps without sharing an endpoint on this lattice, so vertex
     * disjointness is the right test. */
    std::set<std::pair<int, int>> seen;
    for (const LatticePath& p : paths) {
        int x = p.start_x, y = p.start_y;
        if (!seen.insert({x, y}).second) return false;
        for (Step s : p.steps) {
            if (s == Step::E) {
                ++x;
            } else if (s == Step::N) {
                ++y;
            } else {
                ++x;
                ++y;
            }
            if (!seen.insert({x, y}).second) return false;
        }
    }
    return true;
}

}  // namespace povp
