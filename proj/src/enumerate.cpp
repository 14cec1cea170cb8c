#include "povp/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace povp {

namespace {

struct ShapeCells {
    Partition shape;
    std::vector<std::pair<int, int>> order;   // reading order, 0-based
    std::vector<std::vector<int>> min_value;  // minimal strict-diagonal filling
    std::vector<int> suffix_min;              // minimal weight of cells from position k on
};

ShapeCells prepare_shape(const Partition& shape) {
    ShapeCells sc;
    sc.shape = shape;
    int rows = shape.length();
    sc.min_value.assign(static_cast<size_t>(rows), {});
    for (int i = 0; i < rows; ++i)
        sc.min_value[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i + 1)), 1);
    for (int i = rows - 1; i >= 0; --i) {
        for (int j = shape.part(i + 1) - 1; j >= 0; --j) {
            int m = 1;
            auto get = [&](int r, int c) -> int {
                if (r >= rows || c >= shape.part(r + 1)) return 0;
                return sc.min_value[static_cast<size_t>(r)][static_cast<size_t>(c)];
            };
            m = std::max(m, get(i + 1, j));
            m = std::max(m, get(i, j + 1));
            if (i + 1 < rows && j + 1 < shape.part(i + 2)) m = std::max(m, get(i + 1, j + 1) + 1);
            sc.min_value[static_cast<size_t>(i)][static_cast<size_t>(j)] = m;
        }
    }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape.part(i + 1); ++j) sc.order.push_back({i, j});
    sc.suffix_min.assign(sc.order.size() + 1, 0);
    for (size_t k = sc.order.size(); k-- > 0;) {
        auto [i, j] = sc.order[k];
        sc.suffix_min[k] = sc.suffix_min[k + 1] +
                           sc.min_value[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return sc;
}

/* DFS over diagonally strict fillings of one shape. */
void fill_shape(const ShapeCells& sc, int max_weight, int max_entry,
                const std::set<int>* allowed,
                const std::function<void(const PlanePartition&)>& f) {
    if (sc.suffix_min.empty() || sc.suffix_min[0] > max_weight) return;
    int rows = sc.shape.length();
    std::vector<std::vector<int>> grid(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        grid[static_cast<size_t>(i)].assign(static_cast<size_t>(sc.shape.part(i + 1)), 0);

    std::function<void(size_t, int)> rec = [&](size_t k, int placed) {
        if (k == sc.order.size()) {
            f(PlanePartition(grid));
            return;
        }
        auto [i, j] = sc.order[k];
        auto val = [&](int r, int c) -> int {
            if (r < 0 || c < 0 || r >= rows || c >= sc.shape.part(r + 1)) return 0;
            return grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
        };
        int lo = sc.min_value[static_cast<size_t>(i)][static_cast<size_t>(j)];
        // budget for this cell: total minus already placed minus minimal rest
        int hi = max_weight - placed - sc.suffix_min[k + 1];
        if (max_entry >= 0) hi = std::min(hi, max_entry);
        if (i > 0) hi = std::min(hi, val(i - 1, j));
        if (j > 0) hi = std::min(hi, val(i, j - 1));
        if (i > 0 && j > 0) hi = std::min(hi, val(i - 1, j - 1) - 1);
        if (allowed) {
            for (int v : *allowed) {
                if (v < lo || v > hi) continue;
                grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                rec(k + 1, placed + v);
            }
        } else {
            for (int v = lo; v <= hi; ++v) {
                grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                rec(k + 1, placed + v);
            }
        }
        grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };
    rec(0, 0);
}

void for_each_shape(const Constraint& c, int max_weight,
                    const std::function<void(const Partition&)>& f) {
    switch (c.kind) {
        case Constraint::Shape:
            f(c.lambda);
            break;
        case Constraint::BoundedShape: {
            // mu_i between lambda_{i+1} and lambda_i
            std::vector<int> acc;
            std::function<void(int)> rec = [&](int idx) {
                if (idx > c.lambda.length()) {
                    f(Partition::from_unchecked(acc));
                    return;
                }
                for (int v = c.lambda.part(idx + 1); v <= c.lambda.part(idx); ++v) {
                    acc.push_back(v);
                    rec(idx + 1);
                    acc.pop_back();
                }
            };
            rec(1);
            break;
        }
        case Constraint::Box:
            for_each_partition_up_to(std::min(max_weight, c.rows * c.cols), c.cols, c.rows, f);
            break;
        case Constraint::All:
        case Constraint::MaxEntry:
        case Constraint::PartsIn:
            for_each_partition_up_to(max_weight, 0, 0, f);
            break;
        case Constraint::Reverse:
            throw std::invalid_argument("Reverse constraint: use enum_reverse_pops");
    }
}

}  // namespace

void enum_pops(const Constraint& c, int max_weight,
               const std::function<void(const PlaneOverpartition&)>& f) {
    if (c.kind == Constraint::Reverse)
        throw std::invalid_argument("Reverse constraint: use enum_reverse_pops");
    if (c.kind == Constraint::PartsIn && c.parts_in.empty())
        throw std::invalid_argument("PartsIn constraint needs a nonempty set");
    const std::set<int>* allowed = c.kind == Constraint::PartsIn ? &c.parts_in : nullptr;
    int entry_cap = -1;
    if (c.kind == Constraint::MaxEntry) entry_cap = c.max_entry;

    for_each_shape(c, max_weight, [&](const Partition& shape) {
        if (shape.weight() > max_weight) return;
        ShapeCells sc = prepare_shape(shape);
        fill_shape(sc, max_weight, entry_cap, allowed, [&](const PlanePartition& pp) {
            for (auto& pop : overline_expansions(pp)) f(pop);
        });
    });
}

std::vector<PlaneOverpartition> enum_pops_vec(const Constraint& c, int max_weight) {
    std::vector<PlaneOverpartition> out;
    enum_pops(c, max_weight, [&](const PlaneOverpartition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), [](const PlaneOverpartition& a, const PlaneOverpartition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a < b;
    });
    return out;
}

void enum_reverse_pops(const Partition& shape, int max_weight,
                       const std::function<void(const ReversePlaneOverpartition&)>& f) {
    int rows = shape.length();
    std::vector<std::vector<int>> grid(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i + 1)), 0);
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape.part(i + 1); ++j) order.push_back({i, j});

    std::function<void(size_t, int)> rec = [&](size_t k, int placed) {
        if (k == order.size()) {
            for (auto& rp : reverse_overline_expansions(shape, grid)) f(rp);
            return;
        }
        auto [i, j] = order[k];
        auto val = [&](int r, int c) -> int {
            if (r < 0 || c < 0 || r >= rows || c >= shape.part(r + 1)) return 0;
            return grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
        };
        int lo = 0;
        if (i > 0) lo = std::max(lo, val(i - 1, j));
        if (j > 0) lo = std::max(lo, val(i, j - 1));
        if (i > 0 && j > 0 && val(i - 1, j - 1) > 0) lo = std::max(lo, val(i - 1, j - 1) + 1);
        for (int v = lo; placed + v <= max_weight; ++v) {
            grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            rec(k + 1, placed + v);
        }
        grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };
    rec(0, 0);
}

std::vector<ReversePlaneOverpartition> enum_reverse_pops_vec(const Partition& shape,
                                                             int max_weight) {
    std::vector<ReversePlaneOverpartition> out;
    enum_reverse_pops(shape, max_weight, [&](const ReversePlaneOverpartition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), [](const ReversePlaneOverpartition& a,
                                         const ReversePlaneOverpartition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a < b;
    });
    return out;
}

void enum_plane_partitions(int rows, int cols, int max_weight,
                           const std::function<void(const PlanePartition&)>& f) {
    for_each_partition_up_to(std::min(max_weight, rows * cols), cols, rows,
                             [&](const Partition& shape) {
        int n = shape.length();
        std::vector<std::vector<int>> grid(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i + 1)), 0);
        std::vector<std::pair<int, int>> order;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < shape.part(i + 1); ++j) order.push_back({i, j});
        int cells = static_cast<int>(order.size());
        std::function<void(size_t, int)> rec = [&](size_t k, int placed) {
            if (k == order.size()) {
                f(PlanePartition(grid));
                return;
            }
            auto [i, j] = order[k];
            auto val = [&](int r, int c) -> int {
                if (r < 0 || c < 0 || r >= n || c >= shape.part(r + 1)) return 0;
                return grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
            };
            int remaining_cells = cells - static_cast<int>(k) - 1;
            int hi = max_weight - placed - remaining_cells;
            if (i > 0) hi = std::min(hi, val(i - 1, j));
            if (j > 0) hi = std::min(hi, val(i, j - 1));
            for (int v = 1; v <= hi; ++v) {
                grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                rec(k + 1, placed + v);
            }
            grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
        };
        rec(0, 0);
    });
}

void enum_interlacing(const Profile& profile, Topology topology, int max_weight,
                      const std::function<void(const InterlacingSequence&)>& f) {
    if (!profile.valid_bits()) throw std::invalid_argument("enum_interlacing: malformed profile");
    if (topology == Topology::Planar) {
        if (!profile.valid_skew_endpoints())
            throw std::invalid_argument("enum_interlacing: skew profile needs endpoints 0...1");
        int T = profile.size();  // partitions: T+1 entries, ends empty
        std::vector<Partition> seq(static_cast<size_t>(T) + 1);
        std::function<void(int, int)> rec = [&](int idx, int used) {
            if (idx == T) {
                if (!seq[static_cast<size_t>(T)].empty()) return;
                InterlacingSequence s;
                s.partitions = seq;
                s.profile = profile;
                s.topology = Topology::Planar;
                f(s);
                return;
            }
            int bit = profile.bits[static_cast<size_t>(idx)];
            const Partition& prev = seq[static_cast<size_t>(idx)];
            if (bit == 0) {
                for_each_hstrip_above(prev, prev.weight() + (max_weight - used), -1,
                                      [&](const Partition& mu) {
                    seq[static_cast<size_t>(idx + 1)] = mu;
                    rec(idx + 1, used + mu.weight());
                });
            } else {
                for_each_hstrip_below(prev, [&](const Partition& mu) {
                    if (used + mu.weight() > max_weight) return;
                    seq[static_cast<size_t>(idx + 1)] = mu;
                    rec(idx + 1, used + mu.weight());
                });
            }
        };
        rec(0, 0);
    } else {
        int T = profile.size();
        if (T <= 0) throw std::invalid_argument("enum_interlacing: cylindric needs period >= 1");
        std::vector<Partition> seq(static_cast<size_t>(T) + 1);
        std::function<void(int, int)> rec = [&](int idx, int used) {
            if (idx == T) {
                if (!(seq[static_cast<size_t>(T)] == seq[0])) return;
                InterlacingSequence s;
                s.partitions = seq;
                s.profile = profile;
                s.topology = Topology::Cylindric;
                f(s);
                return;
            }
            int bit = profile.bits[static_cast<size_t>(idx)];
            const Partition& prev = seq[static_cast<size_t>(idx)];
            if (bit == 0) {
                for_each_hstrip_above(prev, prev.weight() + (max_weight - used), -1,
                                      [&](const Partition& mu) {
                    seq[static_cast<size_t>(idx + 1)] = mu;
                    rec(idx + 1, used + mu.weight());
                });
            } else {
                for_each_hstrip_below(prev, [&](const Partition& mu) {
                    if (used + mu.weight() > max_weight) return;
                    seq[static_cast<size_t>(idx + 1)] = mu;
                    rec(idx + 1, used + mu.weight());
                });
            }
        };
        for_each_partition_up_to(max_weight, 0, 0, [&](const Partition& p0) {
            seq[0] = p0;
            rec(0, 0);
        });
    }
}

void enum_row_overpartitions(int max_parts, int max_entry, int max_weight,
                             const std::function<void(const Overpartition&)>& f) {
    if (max_parts <= 0 || max_entry <= 0) {
        f(Overpartition());
        return;
    }
    for_each_partition_up_to(max_weight, max_entry, max_parts, [&](const Partition& p) {
        // one free overline per distinct value, on its last occurrence
        std::vector<int> last_pos;
        for (int i = 1; i <= p.length(); ++i)
            if (i == p.length() || p.part(i + 1) != p.part(i)) last_pos.push_back(i);
        int k = static_cast<int>(last_pos.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<OverpartEntry> es;
            for (int i = 1; i <= p.length(); ++i) es.push_back({p.part(i), false});
            for (int b = 0; b < k; ++b)
                if ((mask >> b) & 1u) es[static_cast<size_t>(last_pos[static_cast<size_t>(b)] - 1)].overlined = true;
            f(Overpartition(std::move(es)));
        }
    });
}

TruncSeries pops_gf_aq(const Constraint& c, int trunc) {
    TruncSeries s(trunc);
    enum_pops(c, trunc, [&](const PlaneOverpartition& p) {
        s.add_term(p.weight(), CoeffPoly::monomial(1, p.overline_count(), 0));
    });
    return s;
}

TruncSeries reverse_pops_gf(const Partition& shape, int trunc) {
    TruncSeries s(trunc);
    enum_reverse_pops(shape, trunc, [&](const ReversePlaneOverpartition& p) {
        s.add_term(p.weight(), CoeffPoly::constant(1));
    });
    return s;
}

TruncSeries plane_partitions_gf_tq(int rows, int cols, int trunc) {
    TruncSeries s(trunc);
    enum_plane_partitions(rows, cols, trunc, [&](const PlanePartition& pp) {
        s.add_term(pp.weight(), a_weight(pp).to_coeff_poly());
    });
    return s;
}

TruncSeries interlacing_gf_tq(const Profile& profile, Topology topology, int trunc) {
    TruncSeries s(trunc);
    enum_interlacing(profile, topology, trunc, [&](const InterlacingSequence& seq) {
        s.add_term(seq.weight(), a_weight(seq).to_coeff_poly());
    });
    return s;
}

TruncSeries row_overpartitions_gf_aq(int max_parts, int max_entry, int trunc) {
    TruncSeries s(trunc);
    enum_row_overpartitions(max_parts, max_entry, trunc, [&](const Overpartition& o) {
        if (o.weight() <= trunc)
            s.add_term(o.weight(), CoeffPoly::monomial(1, o.overline_count(), 0));
    });
    return s;
}

}  // namespace povp
