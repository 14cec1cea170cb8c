#include "povp/objects.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace povp {

namespace {

std::string cell_ref(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

int PlanePartition::row_length(int i) const {
    if (i < 1 || i > row_count()) return 0;
    return static_cast<int>(rows_[static_cast<size_t>(i - 1)].size());
}

int PlanePartition::entry(int i, int j) const {
    if (i < 1 || i > row_count()) return 0;
    const auto& r = rows_[static_cast<size_t>(i - 1)];
    if (j < 1 || j > static_cast<int>(r.size())) return 0;
    return r[static_cast<size_t>(j - 1)];
}

int PlanePartition::weight() const {
    int w = 0;
    for (const auto& r : rows_)
        for (int v : r) w += v;
    return w;
}

Partition PlanePartition::shape() const {
    std::vector<int> s;
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return Partition(std::move(s));
}

bool PlanePartition::diagonally_strict() const {
    for (int i = 1; i <= row_count(); ++i)
        for (int j = 1; j <= row_length(i); ++j)
            if (entry(i + 1, j + 1) > 0 && entry(i, j) <= entry(i + 1, j + 1)) return false;
    return true;
}

ValidationResult PlanePartition::validate() const {
    ValidationResult res;
    for (int i = 1; i <= row_count(); ++i) {
        if (row_length(i) == 0)
            res.violations.push_back("empty row " + std::to_string(i));
        if (i > 1 && row_length(i) > row_length(i - 1))
            res.violations.push_back("row lengths increase at row " + std::to_string(i));
        for (int j = 1; j <= row_length(i); ++j) {
            if (entry(i, j) <= 0)
                res.violations.push_back("nonpositive entry at " + cell_ref(i, j));
            if (j > 1 && entry(i, j) > entry(i, j - 1))
                res.violations.push_back("row increases at " + cell_ref(i, j));
            if (i > 1 && j <= row_length(i - 1) && entry(i, j) > entry(i - 1, j))
                res.violations.push_back("column increases at " + cell_ref(i, j));
        }
    }
    return res;
}

int PlaneOverpartition::row_length(int i) const {
    if (i < 1 || i > row_count()) return 0;
    return static_cast<int>(rows_[static_cast<size_t>(i - 1)].size());
}

Cell PlaneOverpartition::cell(int i, int j) const {
    if (i < 1 || i > row_count()) return {};
    const auto& r = rows_[static_cast<size_t>(i - 1)];
    if (j < 1 || j > static_cast<int>(r.size())) return {};
    return r[static_cast<size_t>(j - 1)];
}

int PlaneOverpartition::weight() const {
    int w = 0;
    for (const auto& r : rows_)
        for (const auto& c : r) w += c.value;
    return w;
}

int PlaneOverpartition::overline_count() const {
    int c = 0;
    for (const auto& r : rows_)
        for (const auto& e : r) c += e.overlined;
    return c;
}

Partition PlaneOverpartition::shape() const {
    std::vector<int> s;
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return Partition(std::move(s));
}

PlanePartition PlaneOverpartition::underlying() const {
    std::vector<std::vector<int>> rows;
    for (const auto& r : rows_) {
        std::vector<int> row;
        row.reserve(r.size());
        for (const auto& c : r) row.push_back(c.value);
        rows.push_back(std::move(row));
    }
    return PlanePartition(std::move(rows));
}

Overpartition PlaneOverpartition::row(int i) const {
    std::vector<OverpartEntry> es;
    if (i >= 1 && i <= row_count())
        for (const auto& c : rows_[static_cast<size_t>(i - 1)])
            es.push_back({c.value, c.overlined});
    return Overpartition(std::move(es));
}

ValidationResult PlaneOverpartition::validate() const {
    ValidationResult res;
    for (int i = 1; i <= row_count(); ++i) {
        if (row_length(i) == 0) res.violations.push_back("empty row " + std::to_string(i));
        if (i > 1 && row_length(i) > row_length(i - 1))
            res.violations.push_back("row lengths increase at row " + std::to_string(i));
        for (int j = 1; j <= row_length(i); ++j) {
            Cell c = cell(i, j);
            if (c.value <= 0)
                res.violations.push_back("nonpositive entry at " + cell_ref(i, j));
            if (j > 1 && c.value > cell(i, j - 1).value)
                res.violations.push_back("row increases at " + cell_ref(i, j));
            if (i > 1 && j <= row_length(i - 1) && c.value > cell(i - 1, j).value)
                res.violations.push_back("column increases at " + cell_ref(i, j));
            // row rule: overlined entry is the last occurrence in its row
            if (c.overlined && cell(i, j + 1).value == c.value && j < row_length(i))
                res.violations.push_back("overlined entry not last occurrence in row at " +
                                         cell_ref(i, j));
            // column rule: later occurrences in a column are overlined
            if (i > 1 && cell(i - 1, j).value == c.value && !c.overlined)
                res.violations.push_back(
                    "non-overlined repeat of value in column at " + cell_ref(i, j));
            // diagonal strictness (consequence of the rules)
            if (cell(i + 1, j + 1).value > 0 && cell(i + 1, j + 1).value >= c.value)
                res.violations.push_back("diagonal not strict at " + cell_ref(i, j));
        }
    }
    return res;
}

std::string PlaneOverpartition::str() const {
    std::ostringstream os;
    for (const auto& r : rows_) {
        for (size_t j = 0; j < r.size(); ++j) {
            if (j) os << " ";
            os << r[j].value;
            if (r[j].overlined) os << "~";
        }
        os << "\n";
    }
    return os.str();
}

Cell ReversePlaneOverpartition::cell(int i, int j) const {
    if (i < 1 || i > static_cast<int>(cells_.size())) return {};
    const auto& r = cells_[static_cast<size_t>(i - 1)];
    if (j < 1 || j > static_cast<int>(r.size())) return {};
    return r[static_cast<size_t>(j - 1)];
}

int ReversePlaneOverpartition::weight() const {
    int w = 0;
    for (const auto& r : cells_)
        for (const auto& c : r) w += c.value;
    return w;
}

int ReversePlaneOverpartition::overline_count() const {
    int c = 0;
    for (const auto& r : cells_)
        for (const auto& e : r) c += e.overlined;
    return c;
}

ValidationResult ReversePlaneOverpartition::validate() const {
    ValidationResult res;
    if (static_cast<int>(cells_.size()) != shape_.length()) {
        res.violations.push_back("cell grid does not match shape");
        return res;
    }
    for (int i = 1; i <= shape_.length(); ++i) {
        if (static_cast<int>(cells_[static_cast<size_t>(i - 1)].size()) != shape_.part(i)) {
            res.violations.push_back("row " + std::to_string(i) + " length differs from shape");
            return res;
        }
    }
    for (int i = 1; i <= shape_.length(); ++i) {
        for (int j = 1; j <= shape_.part(i); ++j) {
            Cell c = cell(i, j);
            if (c.value < 0) res.violations.push_back("negative entry at " + cell_ref(i, j));
            if (c.value == 0 && c.overlined)
                res.violations.push_back("overlined zero at " + cell_ref(i, j));
            if (j > 1 && c.value < cell(i, j - 1).value)
                res.violations.push_back("row decreases at " + cell_ref(i, j));
            if (i > 1 && j <= shape_.part(i - 1) && c.value < cell(i - 1, j).value)
                res.violations.push_back("column decreases at " + cell_ref(i, j));
            if (c.overlined && j < shape_.part(i) && cell(i, j + 1).value == c.value)
                res.violations.push_back("overlined entry not last occurrence in row at " +
                                         cell_ref(i, j));
            if (c.value > 0 && i > 1 && j <= shape_.part(i - 1) &&
                cell(i - 1, j).value == c.value && !c.overlined)
                res.violations.push_back(
                    "non-overlined repeat of value in column at " + cell_ref(i, j));
        }
    }
    return res;
}

std::string ReversePlaneOverpartition::str() const {
    std::ostringstream os;
    for (const auto& r : cells_) {
        for (size_t j = 0; j < r.size(); ++j) {
            if (j) os << " ";
            os << r[j].value;
            if (r[j].overlined) os << "~";
        }
        os << "\n";
    }
    return os.str();
}

GridComponents grid_components(const std::vector<std::vector<int>>& rows) {
    GridComponents g;
    g.comp.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) g.comp[i].assign(rows[i].size(), -1);
    auto at = [&](int i, int j) -> int {
        if (i < 0 || i >= static_cast<int>(rows.size())) return 0;
        if (j < 0 || j >= static_cast<int>(rows[static_cast<size_t>(i)].size())) return 0;
        return rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] <= 0 || g.comp[i][j] != -1) continue;
            int id = g.count++;
            int v = rows[i][j];
            std::queue<std::pair<int, int>> bfs;
            bfs.push({static_cast<int>(i), static_cast<int>(j)});
            g.comp[i][j] = id;
            std::pair<int, int> free_cell{-1, -1};
            while (!bfs.empty()) {
                auto [r, c] = bfs.front();
                bfs.pop();
                if (at(r - 1, c) != v && at(r, c + 1) != v) free_cell = {r, c};
                const int dr[4] = {1, -1, 0, 0};
                const int dc[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    int nr = r + dr[d], nc = c + dc[d];
                    if (at(nr, nc) == v &&
                        g.comp[static_cast<size_t>(nr)][static_cast<size_t>(nc)] == -1) {
                        g.comp[static_cast<size_t>(nr)][static_cast<size_t>(nc)] = id;
                        bfs.push({nr, nc});
                    }
                }
            }
            g.free_cell.push_back(free_cell);
        }
    }
    return g;
}

int component_count(const std::vector<std::vector<int>>& rows) {
    return grid_components(rows).count;
}

std::vector<PlaneOverpartition> overline_expansions(const PlanePartition& pp) {
    const auto& rows = pp.rows();
    GridComponents g = grid_components(rows);
    auto at = [&](int i, int j) -> int {
        if (i < 0 || i >= static_cast<int>(rows.size())) return 0;
        if (j < 0 || j >= static_cast<int>(rows[static_cast<size_t>(i)].size())) return 0;
        return rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };
    std::vector<PlaneOverpartition> out;
    for (unsigned mask = 0; mask < (1u << g.count); ++mask) {
        std::vector<std::vector<Cell>> cells(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            cells[i].resize(rows[i].size());
            for (size_t j = 0; j < rows[i].size(); ++j) {
                int v = rows[i][j];
                bool forced = at(static_cast<int>(i) - 1, static_cast<int>(j)) == v;
                bool free_here =
                    g.free_cell[static_cast<size_t>(g.comp[i][j])] ==
                    std::pair<int, int>{static_cast<int>(i), static_cast<int>(j)};
                bool chosen = (mask >> g.comp[i][j]) & 1u;
                cells[i][j] = {v, forced || (free_here && chosen)};
            }
        }
        out.emplace_back(std::move(cells));
    }
    return out;
}

std::vector<ReversePlaneOverpartition> reverse_overline_expansions(
    const Partition& shape, const std::vector<std::vector<int>>& grid) {
    GridComponents g = grid_components(grid);
    auto at = [&](int i, int j) -> int {
        if (i < 0 || i >= static_cast<int>(grid.size())) return 0;
        if (j < 0 || j >= static_cast<int>(grid[static_cast<size_t>(i)].size())) return 0;
        return grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };
    std::vector<ReversePlaneOverpartition> out;
    for (unsigned mask = 0; mask < (1u << g.count); ++mask) {
        std::vector<std::vector<Cell>> cells(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) {
            cells[i].resize(grid[i].size());
            for (size_t j = 0; j < grid[i].size(); ++j) {
                int v = grid[i][j];
                if (v == 0) {
                    cells[i][j] = {0, false};
                    continue;
                }
                bool forced = at(static_cast<int>(i) - 1, static_cast<int>(j)) == v;
                bool free_here =
                    g.free_cell[static_cast<size_t>(g.comp[i][j])] ==
                    std::pair<int, int>{static_cast<int>(i), static_cast<int>(j)};
                bool chosen = (mask >> g.comp[i][j]) & 1u;
                cells[i][j] = {v, forced || (free_here && chosen)};
            }
        }
        out.emplace_back(shape, std::move(cells));
    }
    return out;
}

std::vector<std::vector<HookContent>> hooks_and_contents(const Partition& lambda) {
    std::vector<std::vector<HookContent>> out;
    Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<HookContent> row;
        for (int j = 1; j <= lambda.part(i); ++j)
            row.push_back({lambda.part(i) + conj.part(j) - i - j + 1, j - i});
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace povp
