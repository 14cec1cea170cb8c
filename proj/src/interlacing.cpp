#include "povp/interlacing.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace povp {

std::string Profile::str() const {
    std::ostringstream os;
    for (int b : bits) os << b;
    return os.str();
}

Partition profile_to_shape(const Profile& p) {
    std::vector<int> rows;
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        if (p.bits[static_cast<size_t>(i)] == 0) {
            int ones = 0;
            for (int j = i + 1; j < n; ++j) ones += p.bits[static_cast<size_t>(j)] == 1;
            if (ones > 0) rows.push_back(ones);
        }
    }
    return Partition(std::move(rows));
}

Profile shape_to_profile(const Partition& lambda) {
    Profile p;
    if (lambda.empty()) {
        p.bits = {0, 1};
        return p;
    }
    for (int i = 1; i <= lambda.length(); ++i) {
        p.bits.push_back(0);
        int ones = lambda.part(i) - lambda.part(i + 1);
        for (int j = 0; j < ones; ++j) p.bits.push_back(1);
    }
    return p;
}

int InterlacingSequence::weight() const {
    int w = 0;
    int start = topology == Topology::Cylindric ? 1 : 0;
    for (int i = start; i < size(); ++i) w += partitions[static_cast<size_t>(i)].weight();
    return w;
}

ValidationResult InterlacingSequence::validate() const {
    ValidationResult res;
    if (profile.size() != size() - 1) {
        res.violations.push_back("profile length differs from partition count - 1");
        return res;
    }
    if (!profile.valid_bits()) res.violations.push_back("profile has non 0/1 entries");
    for (int i = 0; i + 1 < size(); ++i) {
        const Partition& a = partitions[static_cast<size_t>(i)];
        const Partition& b = partitions[static_cast<size_t>(i + 1)];
        int bit = profile.bits[static_cast<size_t>(i)];
        bool ok = bit == 0 ? Partition::horizontal_strip(b, a) : Partition::horizontal_strip(a, b);
        if (!ok)
            res.violations.push_back("no horizontal strip between positions " +
                                     std::to_string(i) + " and " + std::to_string(i + 1));
    }
    if (topology == Topology::Cylindric && size() >= 1 &&
        !(partitions.front() == partitions.back()))
        res.violations.push_back("cylindric sequence must repeat its first partition");
    return res;
}

InterlacingSequence diagonals_of(const PlanePartition& pp) {
    InterlacingSequence seq;
    seq.topology = Topology::Planar;
    int rows = pp.row_count();
    int cols = pp.row_length(1);
    if (rows == 0) {
        seq.partitions.push_back(Partition());
        return seq;
    }
    for (int x = -(rows - 1); x <= cols - 1; ++x) {
        std::vector<int> diag;
        for (int k = 1;; ++k) {
            int i = x >= 0 ? k : k - x;
            int j = x >= 0 ? k + x : k;
            int v = pp.entry(i, j);
            if (v == 0) break;
            diag.push_back(v);
        }
        seq.partitions.push_back(Partition::from_unchecked(std::move(diag)));
        if (x < cols - 1) seq.profile.bits.push_back(x < 0 ? 0 : 1);
    }
    return seq;
}

std::vector<int> BorderDecomposition::level_census() const {
    std::vector<int> census;
    for (const auto& bc : components) {
        if (bc.wraps) continue;
        if (static_cast<int>(census.size()) <= bc.level) census.resize(static_cast<size_t>(bc.level) + 1, 0);
        census[static_cast<size_t>(bc.level)]++;
    }
    return census;
}

HLPoly a_poly(const BorderDecomposition& d) {
    HLPoly r = HLPoly::one();
    std::vector<int> census = d.level_census();
    for (size_t lvl = 1; lvl < census.size(); ++lvl)
        for (int m = 0; m < census[lvl]; ++m)
            r = r * HLPoly::one_minus_t_pow(static_cast<int>(lvl));
    return r;
}

BorderDecomposition border_decomposition(const PlanePartition& pp) {
    BorderDecomposition out;
    const auto& rows = pp.rows();
    GridComponents g = grid_components(rows);
    out.connected_count = g.count;
    auto at = [&](int i, int j) -> int {
        if (i < 0 || i >= static_cast<int>(rows.size())) return -1;
        if (j < 0 || j >= static_cast<int>(rows[static_cast<size_t>(i)].size())) return -1;
        return g.comp[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };
    // level per cell: diagonal steps within the same connected component
    std::vector<std::vector<int>> level(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        level[i].assign(rows[i].size(), 0);
        for (size_t j = 0; j < rows[i].size(); ++j) {
            int id = g.comp[i][j];
            int l = 1;
            while (at(static_cast<int>(i) + l, static_cast<int>(j) + l) == id) ++l;
            level[i][j] = l;
        }
    }
    // border components: rookwise connected, equal component and level
    std::vector<std::vector<int>> seen(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) seen[i].assign(rows[i].size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (seen[i][j]) continue;
            BorderComponent bc;
            bc.connected_id = g.comp[i][j];
            bc.level = level[i][j];
            std::queue<std::pair<int, int>> bfs;
            bfs.push({static_cast<int>(i), static_cast<int>(j)});
            seen[i][j] = 1;
            while (!bfs.empty()) {
                auto [r, c] = bfs.front();
                bfs.pop();
                bc.cell_count++;
                const int dr[4] = {1, -1, 0, 0};
                const int dc[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    int nr = r + dr[d], nc = c + dc[d];
                    if (at(nr, nc) == bc.connected_id &&
                        level[static_cast<size_t>(nr)][static_cast<size_t>(nc)] == bc.level &&
                        !seen[static_cast<size_t>(nr)][static_cast<size_t>(nc)]) {
                        seen[static_cast<size_t>(nr)][static_cast<size_t>(nc)] = 1;
                        bfs.push({nr, nc});
                    }
                }
            }
            out.components.push_back(bc);
        }
    }
    return out;
}

namespace {

/* Ray diagram of an interlacing sequence.  Boxes are (ray, depth) pairs;
 * crossing between consecutive rays is governed by the profile bit.  Each
 * crossing carries the grid displacement used to detect cylindric winding. */
struct RayDiagram {
    int rays = 0;
    bool cylindric = false;
    std::vector<Partition> parts;  // per ray
    std::vector<int> bits;         // bit[r] between ray r and r+1 (mod rays when cylindric)

    int depth(int r) const { return parts[static_cast<size_t>(r)].length(); }
    int value(int r, int k) const { return parts[static_cast<size_t>(r)].part(k); }
    bool has(int r, int k) const { return k >= 1 && k <= depth(r); }

    struct Nbr {
        int r, k;
        int du, dv;
    };

    std::vector<Nbr> neighbors(int r, int k) const {
        std::vector<Nbr> out;
        // forward crossing r -> r+1
        if (r + 1 < rays || cylindric) {
            int rr = (r + 1) % rays;
            int b = bits[static_cast<size_t>(r)];
            if (b == 0) {
                out.push_back({rr, k, -1, 0});
                out.push_back({rr, k + 1, 0, 1});
            } else {
                out.push_back({rr, k, 0, 1});
                out.push_back({rr, k - 1, -1, 0});
            }
        }
        // backward crossing r -> r-1
        if (r - 1 >= 0 || cylindric) {
            int rr = (r - 1 + rays) % rays;
            int b = bits[static_cast<size_t>((r - 1 + rays) % rays)];
            if (b == 0) {
                out.push_back({rr, k, 1, 0});
                out.push_back({rr, k - 1, 0, -1});
            } else {
                out.push_back({rr, k, 0, -1});
                out.push_back({rr, k + 1, 1, 0});
            }
        }
        std::vector<Nbr> filtered;
        for (const auto& n : out)
            if (has(n.r, n.k)) filtered.push_back(n);
        return filtered;
    }
};

RayDiagram build_diagram(const InterlacingSequence& seq) {
    RayDiagram d;
    d.cylindric = seq.topology == Topology::Cylindric;
    if (d.cylindric) {
        d.rays = seq.size() - 1;  // last partition repeats the first
        for (int r = 0; r < d.rays; ++r) d.parts.push_back(seq.partitions[static_cast<size_t>(r)]);
        for (int r = 0; r < d.rays; ++r) d.bits.push_back(seq.profile.bits[static_cast<size_t>(r)]);
    } else {
        d.rays = seq.size();
        d.parts = seq.partitions;
        d.bits = seq.profile.bits;
        d.bits.push_back(-1);  // unused slot for uniform indexing
    }
    return d;
}

}  // namespace

BorderDecomposition border_decomposition(const InterlacingSequence& seq) {
    BorderDecomposition out;
    ValidationResult v = seq.validate();
    if (!v.ok()) throw std::invalid_argument("border_decomposition: invalid sequence");
    RayDiagram d = build_diagram(seq);

    // box index map
    std::vector<int> base(static_cast<size_t>(d.rays) + 1, 0);
    for (int r = 0; r < d.rays; ++r) base[static_cast<size_t>(r) + 1] = base[static_cast<size_t>(r)] + d.depth(r);
    int nbox = base[static_cast<size_t>(d.rays)];
    auto idx = [&](int r, int k) { return base[static_cast<size_t>(r)] + k - 1; };

    // connected components over equal values
    std::vector<int> comp(static_cast<size_t>(nbox), -1);
    int ncomp = 0;
    for (int r0 = 0; r0 < d.rays; ++r0) {
        for (int k0 = 1; k0 <= d.depth(r0); ++k0) {
            if (comp[static_cast<size_t>(idx(r0, k0))] != -1) continue;
            int id = ncomp++;
            int val = d.value(r0, k0);
            std::queue<std::pair<int, int>> bfs;
            bfs.push({r0, k0});
            comp[static_cast<size_t>(idx(r0, k0))] = id;
            while (!bfs.empty()) {
                auto [r, k] = bfs.front();
                bfs.pop();
                for (const auto& n : d.neighbors(r, k)) {
                    if (d.value(n.r, n.k) != val) continue;
                    int& c = comp[static_cast<size_t>(idx(n.r, n.k))];
                    if (c == -1) {
                        c = id;
                        bfs.push({n.r, n.k});
                    }
                }
            }
        }
    }
    out.connected_count = ncomp;

    // levels: diagonal steps stay on the ray, one depth per step
    std::vector<int> level(static_cast<size_t>(nbox), 0);
    for (int r = 0; r < d.rays; ++r) {
        for (int k = 1; k <= d.depth(r); ++k) {
            int id = comp[static_cast<size_t>(idx(r, k))];
            int l = 1;
            while (d.has(r, k + l) && comp[static_cast<size_t>(idx(r, k + l))] == id) ++l;
            level[static_cast<size_t>(idx(r, k))] = l;
        }
    }

    // border components with winding detection
    std::vector<int> seen(static_cast<size_t>(nbox), 0);
    for (int r0 = 0; r0 < d.rays; ++r0) {
        for (int k0 = 1; k0 <= d.depth(r0); ++k0) {
            if (seen[static_cast<size_t>(idx(r0, k0))]) continue;
            BorderComponent bc;
            bc.connected_id = comp[static_cast<size_t>(idx(r0, k0))];
            bc.level = level[static_cast<size_t>(idx(r0, k0))];
            std::map<int, std::pair<long, long>> lift;
            std::queue<std::pair<int, int>> bfs;
            bfs.push({r0, k0});
            seen[static_cast<size_t>(idx(r0, k0))] = 1;
            lift[idx(r0, k0)] = {0, 0};
            while (!bfs.empty()) {
                auto [r, k] = bfs.front();
                bfs.pop();
                bc.cell_count++;
                auto [u, vv] = lift[idx(r, k)];
                for (const auto& n : d.neighbors(r, k)) {
                    int ni = idx(n.r, n.k);
                    if (comp[static_cast<size_t>(ni)] != bc.connected_id ||
                        level[static_cast<size_t>(ni)] != bc.level)
                        continue;
                    std::pair<long, long> nl{u + n.du, vv + n.dv};
                    auto it = lift.find(ni);
                    if (it == lift.end()) {
                        lift[ni] = nl;
                        seen[static_cast<size_t>(ni)] = 1;
                        bfs.push({n.r, n.k});
                    } else if (it->second != nl) {
                        bc.wraps = true;
                    }
                }
            }
            out.components.push_back(bc);
        }
    }
    return out;
}

HLPoly a_weight(const PlanePartition& pp) { return a_poly(border_decomposition(pp)); }

HLPoly a_weight(const InterlacingSequence& seq) { return a_poly(border_decomposition(seq)); }

}  // namespace povp
