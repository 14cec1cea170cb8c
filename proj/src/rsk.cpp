#include "povp/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace povp {

BlockMatrix BlockMatrix::zero(int n) {
    BlockMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    m.b = m.a;
    m.c = m.a;
    m.d = m.a;
    return m;
}

ValidationResult BlockMatrix::validate() const {
    ValidationResult res;
    auto dims_ok = [&](const std::vector<std::vector<int>>& blk) {
        if (static_cast<int>(blk.size()) != n) return false;
        for (const auto& row : blk)
            if (static_cast<int>(row.size()) != n) return false;
        return true;
    };
    if (!dims_ok(a) || !dims_ok(b) || !dims_ok(c) || !dims_ok(d)) {
        res.violations.push_back("block dimensions differ from n");
        return res;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] < 0 ||
                d[static_cast<size_t>(i)][static_cast<size_t>(j)] < 0)
                res.violations.push_back("negative entry in an integer block");
            int bv = b[static_cast<size_t>(i)][static_cast<size_t>(j)];
            int cv = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (bv != 0 && bv != 1) res.violations.push_back("0/1 block entry out of range");
            if (cv != 0 && cv != 1) res.violations.push_back("0/1 block entry out of range");
        }
    return res;
}

BlockMatrix BlockMatrix::transposed() const {
    BlockMatrix m = zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.a[static_cast<size_t>(j)][static_cast<size_t>(i)] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            m.d[static_cast<size_t>(j)][static_cast<size_t>(i)] = d[static_cast<size_t>(i)][static_cast<size_t>(j)];
            // transposing the full 2n x 2n matrix swaps the off blocks
            m.b[static_cast<size_t>(j)][static_cast<size_t>(i)] = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
            m.c[static_cast<size_t>(j)][static_cast<size_t>(i)] = b[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    return m;
}

int BlockMatrix::pair_weight() const {
    int w = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w += (j + 1) * (a[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                            b[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                            c[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                            d[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return w;
}

TwoLineArray encode_matrix(const BlockMatrix& m) {
    std::vector<std::pair<BarredInt, BarredInt>> pairs;
    for (int i = 1; i <= m.n; ++i) {
        for (int j = 1; j <= m.n; ++j) {
            int av = m.a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            for (int r = 0; r < av; ++r) pairs.push_back({{i, false}, {j, false}});
            if (m.b[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)])
                pairs.push_back({{i, false}, {j, true}});
            if (m.c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)])
                pairs.push_back({{i, true}, {j, false}});
            int dv = m.d[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            for (int r = 0; r < dv; ++r) pairs.push_back({{i, true}, {j, true}});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        if (x.first.key() != y.first.key()) return x.first.key() > y.first.key();
        if (x.first.overlined) return x.second.key() < y.second.key();
        return x.second.key() > y.second.key();
    });
    TwoLineArray L;
    for (const auto& [u, v] : pairs) {
        L.top.push_back(u);
        L.bottom.push_back(v);
    }
    return L;
}

namespace {

bool row_valid(const std::vector<Cell>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i].value <= 0) return false;
        if (i + 1 < row.size()) {
            if (row[i].value < row[i + 1].value) return false;
            if (row[i].overlined && row[i].value == row[i + 1].value) return false;
        }
    }
    return true;
}

}  // namespace

RowInsertResult insert_into_row(std::vector<Cell>& row, BarredInt v) {
    Cell nc{v.value, v.overlined};
    row.push_back(nc);
    if (row_valid(row)) return {false, {}, static_cast<int>(row.size())};
    row.pop_back();
    int best = -1;
    int best_key = 0;
    for (int idx = 0; idx < static_cast<int>(row.size()); ++idx) {
        Cell old = row[static_cast<size_t>(idx)];
        row[static_cast<size_t>(idx)] = nc;
        bool ok = row_valid(row);
        row[static_cast<size_t>(idx)] = old;
        if (!ok) continue;
        int key = 2 * old.value - (old.overlined ? 1 : 0);
        if (best == -1 || key < best_key || (key == best_key && idx > best)) {
            best = idx;
            best_key = key;
        }
    }
    if (best == -1) throw std::logic_error("insert_into_row: no valid replacement");
    Cell old = row[static_cast<size_t>(best)];
    row[static_cast<size_t>(best)] = nc;
    return {true, {old.value, old.overlined}, best + 1};
}

RskPair rsk_forward(const BlockMatrix& m) {
    ValidationResult mv = m.validate();
    if (!mv.ok()) throw std::invalid_argument("rsk_forward: invalid matrix");
    TwoLineArray L = encode_matrix(m);
    std::vector<std::vector<Cell>> p, q;
    for (size_t t = 0; t < L.top.size(); ++t) {
        BarredInt cur = L.bottom[t];
        size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            RowInsertResult res = insert_into_row(p[r], cur);
            if (!res.bumped) {
                q[r].push_back({L.top[t].value, L.top[t].overlined});
                break;
            }
            cur = res.bumped_value;
        }
    }
    return {PlaneOverpartition(std::move(p)), PlaneOverpartition(std::move(q))};
}

namespace {

struct InverseState {
    std::vector<std::vector<Cell>> p, q;
    std::vector<std::pair<BarredInt, BarredInt>> emitted;  // reverse insertion order
    // mixed pairs already used; they come from 0/1 blocks and cannot repeat
    std::set<std::pair<int, int>> used_mixed;
};

/* Positions where un-replacing with the carried value is consistent: the
 * restored row must be valid and re-inserting the removed part must bump the
 * carried value back out of the same position. */
std::vector<int> unbump_candidates(std::vector<Cell>& row, Cell carried) {
    /* If re-inserting the removed part bumps the carried value out of the
     * same position, the restored row is exactly the original again, so no
     * further comparison is needed. */
    std::vector<int> out;
    for (int idx = 0; idx < static_cast<int>(row.size()); ++idx) {
        Cell old = row[static_cast<size_t>(idx)];
        row[static_cast<size_t>(idx)] = carried;
        bool ok = row_valid(row);
        if (ok) {
            std::vector<Cell> redo_row = row;
            try {
                RowInsertResult redo = insert_into_row(redo_row, {old.value, old.overlined});
                ok = redo.bumped && redo.column == idx + 1 &&
                     redo.bumped_value == BarredInt{carried.value, carried.overlined};
            } catch (const std::logic_error&) {
                ok = false;
            }
        }
        row[static_cast<size_t>(idx)] = old;
        if (ok) out.push_back(idx);
    }
    return out;
}

bool inverse_rec(InverseState& st);

/* Walk the bump chain upward from row `row`, branching over consistent
 * positions; at the top emit the recovered pair and continue with the next
 * corner. */
bool reverse_chain(InverseState& st, int row, Cell carried, const BarredInt& ub) {
    if (row == 0) {
        BarredInt v{carried.value, carried.overlined};
        if (!st.emitted.empty() && st.emitted.back().first.key() == ub.key()) {
            const BarredInt& pv = st.emitted.back().second;
            if (!ub.overlined && v.key() < pv.key()) return false;
            if (ub.overlined && v.key() > pv.key()) return false;
        }
        bool mixed = ub.overlined != v.overlined;
        std::pair<int, int> mkey{ub.key(), v.key()};
        if (mixed && !st.used_mixed.insert(mkey).second) return false;
        st.emitted.push_back({ub, v});
        if (inverse_rec(st)) return true;
        st.emitted.pop_back();
        if (mixed) st.used_mixed.erase(mkey);
        return false;
    }
    std::vector<Cell>& above = st.p[static_cast<size_t>(row - 1)];
    for (int idx : unbump_candidates(above, carried)) {
        Cell old = above[static_cast<size_t>(idx)];
        above[static_cast<size_t>(idx)] = carried;
        if (reverse_chain(st, row - 1, old, ub)) return true;
        above[static_cast<size_t>(idx)] = old;
    }
    return false;
}

bool inverse_rec(InverseState& st) {
    bool empty = true;
    for (const auto& row : st.p)
        if (!row.empty()) empty = false;
    if (empty) return true;

    // minimal remaining top value
    int min_key = 0;
    bool found = false;
    for (const auto& row : st.q)
        for (const Cell& c : row) {
            int k = 2 * c.value - (c.overlined ? 1 : 0);
            if (!found || k < min_key) {
                min_key = k;
                found = true;
            }
        }
    // candidate corners carrying that value
    std::vector<int> corners;
    for (int r = 0; r < static_cast<int>(st.q.size()); ++r) {
        const auto& row = st.q[static_cast<size_t>(r)];
        if (row.empty()) continue;
        bool corner = r + 1 == static_cast<int>(st.q.size()) ||
                      st.q[static_cast<size_t>(r + 1)].size() < row.size();
        if (!corner) continue;
        const Cell& c = row.back();
        if (2 * c.value - (c.overlined ? 1 : 0) == min_key) corners.push_back(r);
    }
    for (int r : corners) {
        Cell u = st.q[static_cast<size_t>(r)].back();
        Cell z = st.p[static_cast<size_t>(r)].back();
        st.q[static_cast<size_t>(r)].pop_back();
        st.p[static_cast<size_t>(r)].pop_back();
        bool shrink = st.p[static_cast<size_t>(r)].empty();
        if (shrink) {
            st.p.pop_back();
            st.q.pop_back();
        }
        if (reverse_chain(st, r, z, {u.value, u.overlined})) return true;
        if (shrink) {
            st.p.emplace_back();
            st.q.emplace_back();
        }
        st.p[static_cast<size_t>(r)].push_back(z);
        st.q[static_cast<size_t>(r)].push_back(u);
    }
    return false;
}

}  // namespace

BlockMatrix rsk_inverse(const RskPair& pq, int n) {
    if (!(pq.p.shape() == pq.q.shape()))
        throw std::invalid_argument("rsk_inverse: shape mismatch");
    ValidationResult vp = pq.p.validate(), vq = pq.q.validate();
    if (!vp.ok() || !vq.ok()) throw std::invalid_argument("rsk_inverse: invalid pair");
    InverseState st;
    st.p = pq.p.rows();
    st.q = pq.q.rows();
    if (!inverse_rec(st)) throw std::invalid_argument("rsk_inverse: no consistent reversal");
    BlockMatrix m = BlockMatrix::zero(n);
    for (const auto& [u, v] : st.emitted) {
        if (u.value > n || v.value > n)
            throw std::invalid_argument("rsk_inverse: entry exceeds n");
        size_t i = static_cast<size_t>(u.value - 1), j = static_cast<size_t>(v.value - 1);
        if (!u.overlined && !v.overlined) {
            m.a[i][j]++;
        } else if (!u.overlined && v.overlined) {
            if (m.b[i][j]) throw std::invalid_argument("rsk_inverse: repeated 0/1 pair");
            m.b[i][j] = 1;
        } else if (u.overlined && !v.overlined) {
            if (m.c[i][j]) throw std::invalid_argument("rsk_inverse: repeated 0/1 pair");
            m.c[i][j] = 1;
        } else {
            m.d[i][j]++;
        }
    }
    return m;
}

int count_occurrences(const PlaneOverpartition& p, int value, bool overlined) {
    int c = 0;
    for (const auto& row : p.rows())
        for (const Cell& e : row)
            if (e.value == value && e.overlined == overlined) ++c;
    return c;
}

}  // namespace povp
