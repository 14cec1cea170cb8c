#include "povp/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "povp/bender_knuth.hpp"
#include "povp/closedform.hpp"
#include "povp/enumerate.hpp"
#include "povp/hall_littlewood.hpp"
#include "povp/rsk.hpp"
#include "povp/tilings.hpp"

namespace povp {

using nlohmann::json;

namespace {

struct CheckFail {
    Discrepancy d;
};

void expect_series_eq(const TruncSeries& oracle, const TruncSeries& formula,
                      const std::string& where) {
    int n = std::min(oracle.trunc(), formula.trunc());
    for (int q = std::min(oracle.min_exponent(), formula.min_exponent()); q <= n; ++q) {
        if (!(oracle.coefficient_at(q) == formula.coefficient_at(q))) {
            throw CheckFail{{q, oracle.coefficient_at(q).str(), formula.coefficient_at(q).str(),
                             where}};
        }
    }
}

void expect_poly_eq(const HLPoly& oracle, const HLPoly& formula, int q_exp,
                    const std::string& where) {
    if (!(oracle == formula)) throw CheckFail{{q_exp, oracle.str(), formula.str(), where}};
}

void expect_true(bool ok, const std::string& where) {
    if (!ok) throw CheckFail{{0, "property", "violated", where}};
}

Partition partition_param(const json& params, const std::string& key) {
    const json& j = params.at(key);
    if (j.is_number_integer()) {
        int v = j.get<int>();
        return v == 0 ? Partition() : Partition({v});
    }
    return Partition(j.get<std::vector<int>>());
}

TruncSeries box_plus_product(int r, int c, int trunc) {
    // prod (1 + q^{i+j-1})/(1 - q^{i+j-1})
    TruncSeries s = TruncSeries::one(trunc);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j) {
            int e = i + j - 1;
            if (e > trunc) continue;
            TruncSeries num = TruncSeries::one(trunc);
            num.add_term(e, CoeffPoly::constant(1));
            TruncSeries den = TruncSeries::one(trunc);
            den.add_term(e, CoeffPoly::constant(-1));
            s = s * num * den.invert();
        }
    return s;
}

TruncSeries hook_denominator_product(const Partition& lambda, int trunc) {
    TruncSeries s = TruncSeries::one(trunc);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            TruncSeries den = TruncSeries::one(trunc);
            den.add_term(lambda.hook(i, j), CoeffPoly::constant(-1));
            s = s * den.invert();
        }
    return s;
}

void for_each_skew_profile(int word_len, const std::function<void(const Profile&)>& f) {
    // words of this length with first bit 0 and last bit 1
    if (word_len < 2) return;
    int inner = word_len - 2;
    for (unsigned m = 0; m < (1u << inner); ++m) {
        Profile p;
        p.bits.push_back(0);
        for (int i = 0; i < inner; ++i) p.bits.push_back((m >> i) & 1u);
        p.bits.push_back(1);
        f(p);
    }
}

void for_each_planar_sequence(int count, int weight_max,
                              const std::function<void(const InterlacingSequence&)>& f) {
    if (count < 1) return;
    std::vector<int> bits(static_cast<size_t>(count - 1), 0);
    std::function<void(int)> choose_bits = [&](int bi) {
        if (bi == count - 1) {
            std::vector<Partition> seq(static_cast<size_t>(count));
            std::function<void(int, int)> rec = [&](int idx, int used) {
                if (idx == count) {
                    InterlacingSequence s;
                    s.partitions = seq;
                    s.profile.bits = bits;
                    s.topology = Topology::Planar;
                    f(s);
                    return;
                }
                int bit = bits[static_cast<size_t>(idx - 1)];
                const Partition& prev = seq[static_cast<size_t>(idx - 1)];
                if (bit == 0) {
                    for_each_hstrip_above(prev, prev.weight() + (weight_max - used), -1,
                                          [&](const Partition& mu) {
                        seq[static_cast<size_t>(idx)] = mu;
                        rec(idx + 1, used + mu.weight());
                    });
                } else {
                    for_each_hstrip_below(prev, [&](const Partition& mu) {
                        if (used + mu.weight() > weight_max) return;
                        seq[static_cast<size_t>(idx)] = mu;
                        rec(idx + 1, used + mu.weight());
                    });
                }
            };
            for_each_partition_up_to(weight_max, 0, 0, [&](const Partition& p0) {
                seq[0] = p0;
                rec(1, p0.weight());
            });
            return;
        }
        bits[static_cast<size_t>(bi)] = 0;
        choose_bits(bi + 1);
        bits[static_cast<size_t>(bi)] = 1;
        choose_bits(bi + 1);
    };
    choose_bits(0);
}

std::string pop_desc(const PlaneOverpartition& p) {
    std::string s = p.str();
    for (char& c : s)
        if (c == '\n') c = '/';
    return s;
}

// ---------------------------------------------------------------- identities

void check_thm1_box(const json& params, int n) {
    int rmax = params.value("rmax", 3), cmax = params.value("cmax", 3);
    for (int r = 1; r <= rmax; ++r)
        for (int c = 1; c <= cmax; ++c) {
            std::string where = "r=" + std::to_string(r) + " c=" + std::to_string(c);
            TruncSeries prod = box_plus_product(r, c, n);
            TruncSeries from_t = gf_box_t(r, c, n).substitute(false, 0, true, -1);
            TruncSeries oracle = pops_gf_aq(Constraint::box(r, c), n).substitute(true, 1, false, 0);
            expect_series_eq(oracle, prod, where + " oracle vs product");
            expect_series_eq(prod, from_t, where + " product vs t=-1 reduction");
        }
}

void check_thm2_box_t(const json& params, int n) {
    int rmax = params.value("rmax", 3), cmax = params.value("cmax", 3);
    for (int r = 1; r <= rmax; ++r)
        for (int c = 1; c <= cmax; ++c) {
            std::string where = "r=" + std::to_string(r) + " c=" + std::to_string(c);
            expect_series_eq(plane_partitions_gf_tq(r, c, n), gf_box_t(r, c, n), where);
        }
}

void hook_content_case(const Partition& lam, bool bounded, int n) {
    std::string where = std::string(bounded ? "bounded " : "shape ") + lam.str();
    Constraint c = bounded ? Constraint::bounded_shape(lam) : Constraint::shape(lam);
    TruncSeries oracle = pops_gf_aq(c, n);
    TruncSeries formula = gf_hook_content(lam, bounded, n);
    expect_series_eq(oracle, formula, where);
    if (bounded) {
        TruncSeries det = det_overpartition_matrix(lam, true, n);
        expect_series_eq(formula, det, where + " determinant route");
    }
}

void check_thm3_shape(const json& params, int n) {
    if (params.contains("lambda")) {
        hook_content_case(partition_param(params, "lambda"), false, n);
        return;
    }
    int wmax = params.value("weight_max", 5);
    for_each_partition_up_to(wmax, 0, 0,
                             [&](const Partition& lam) { hook_content_case(lam, false, n); });
}

void check_thm4_bounded(const json& params, int n) {
    if (params.contains("lambda")) {
        hook_content_case(partition_param(params, "lambda"), true, n);
        return;
    }
    int wmax = params.value("weight_max", 5);
    for_each_partition_up_to(wmax, 0, 0,
                             [&](const Partition& lam) { hook_content_case(lam, true, n); });
}

void check_thm5_reverse(const json& params, int n) {
    std::vector<Partition> lams;
    if (params.contains("lambdas"))
        for (const auto& v : params.at("lambdas")) lams.emplace_back(v.get<std::vector<int>>());
    else
        lams = {Partition({1}), Partition({2, 1}), Partition({2, 2}), Partition({3, 1}),
                Partition({2, 2, 1})};
    for (const Partition& lam : lams) {
        std::string where = "lambda=" + lam.str();
        TruncSeries oracle = reverse_pops_gf(lam, n);
        TruncSeries hooks = gf_reverse_hook(lam, n);
        expect_series_eq(oracle, hooks, where);
        // free-start path route
        std::vector<int> rs;
        for (int i = 1; i <= lam.length(); ++i) rs.push_back(lam.part(i) + lam.length() - i);
        expect_series_eq(hooks, path_sum_free_starts(rs, n), where + " path-sum route");
        // rectangles recover the box product
        bool rect = true;
        for (int i = 2; i <= lam.length(); ++i) rect = rect && lam.part(i) == lam.part(1);
        if (rect && !lam.empty())
            expect_series_eq(hooks, box_plus_product(lam.length(), lam.part(1), n),
                             where + " rectangle=box");
    }
}

void check_thm7_max_entry(const json& params, int n) {
    int nmax = params.value("nmax", 3);
    for (int m = 0; m <= nmax; ++m) {
        std::string where = "n=" + std::to_string(m);
        TruncSeries oracle = pops_gf_aq(Constraint::entry_bound(m), n);
        expect_series_eq(oracle, gf_max_entry(m, n), where);
    }
    int lim = params.value("limit_q", 10);
    expect_series_eq(gf_all_weighted(lim), gf_max_entry(lim, lim), "stable limit");
}

void check_thm8_skew(const json& params, int n) {
    int len_max = params.value("len_max", 6);
    for (int len = 2; len <= len_max; ++len) {
        for_each_skew_profile(len, [&](const Profile& p) {
            std::string where = "profile=" + p.str();
            TruncSeries oracle = interlacing_gf_tq(p, Topology::Planar, n);
            TruncSeries formula = gf_skew(p, n);
            expect_series_eq(oracle, formula, where);
            Partition shape = profile_to_shape(p);
            expect_series_eq(formula.substitute(false, 0, true, 0),
                             hook_denominator_product(shape, n), where + " t=0 hook product");
            expect_series_eq(formula.substitute(false, 0, true, -1), gf_reverse_hook(shape, n),
                             where + " t=-1 reverse hooks");
        });
    }
}

void check_thm9_cylindric(const json& params, int n) {
    int tmax = params.value("T_max", 3);
    for (int T = 1; T <= tmax; ++T) {
        for (unsigned m = 0; m < (1u << T); ++m) {
            Profile p;
            for (int i = 0; i < T; ++i) p.bits.push_back((m >> i) & 1u);
            std::string where = "T=" + std::to_string(T) + " profile=" + p.str();
            TruncSeries oracle = interlacing_gf_tq(p, Topology::Cylindric, n);
            expect_series_eq(oracle, gf_cylindric(p, n), where);
        }
    }
    // the trivial profile reduces to the partition generating function
    Profile triv;
    triv.bits = {1};
    TruncSeries parts(n);
    for_each_partition_up_to(n, 0, 0,
                             [&](const Partition& p) { parts.add_term(p.weight(), CoeffPoly::constant(1)); });
    expect_series_eq(parts, gf_cylindric(triv, n), "T=1 partition series");
}

void check_prop34_all(const json&, int n) {
    TruncSeries oracle = pops_gf_aq(Constraint::all(), n);
    expect_series_eq(oracle, gf_all_weighted(n), "all overpartitions, a tracked");
    expect_series_eq(oracle.substitute(true, 1, false, 0), gf_shifted_macmahon(n),
                     "a=1 product");
}

void check_eqm_det_hook(const json& params, int n) {
    auto one = [&](const Partition& lam) {
        std::string where = "lambda=" + lam.str();
        TruncSeries det = det_overpartition_matrix(lam, false, n).shift_q(lam.weight());
        expect_series_eq(gf_hook_content(lam, false, n), det, where);
    };
    if (params.contains("lambda")) {
        one(partition_param(params, "lambda"));
        return;
    }
    int wmax = params.value("weight_max", 6);
    for_each_partition_up_to(wmax, 0, 0, one);
}

void check_lemma_w(const json& params, int n) {
    int vmax = params.value("max_val", 5), lmax = params.value("len_max", 4);
    std::vector<std::vector<int>> tuples;
    std::vector<int> acc;
    std::function<void(int)> rec = [&](int next_max) {
        if (!acc.empty() && static_cast<int>(acc.size()) <= lmax) tuples.push_back(acc);
        if (static_cast<int>(acc.size()) == lmax) return;
        for (int v = next_max; v >= 0; --v) {
            acc.push_back(v);
            rec(v - 1);
            acc.pop_back();
        }
    };
    rec(vmax);
    for (const auto& rs : tuples) {
        std::ostringstream os;
        os << "rs=";
        for (int v : rs) os << v << ".";
        int l = static_cast<int>(rs.size());
        std::vector<int> lam_parts;
        for (int i = 0; i < l; ++i) lam_parts.push_back(rs[static_cast<size_t>(i)] - (l - 1 - i));
        Partition lam = Partition::from_unchecked(std::move(lam_parts));
        expect_series_eq(gf_reverse_hook(lam, n), path_sum_free_starts(rs, n),
                         os.str() + " hook product");
        if (rs.back() > 0 && l < lmax) {
            std::vector<int> padded = rs;
            padded.push_back(0);
            std::vector<int> shifted;
            for (int v : rs) shifted.push_back(v - 1);
            expect_series_eq(path_sum_free_starts(shifted, n), path_sum_free_starts(padded, n),
                             os.str() + " recursion");
        }
    }
}

void check_prop33_sum_det(const json& params, int n) {
    int rmax = params.value("rmax", 4), cmax = params.value("cmax", 3);
    for (int r = 1; r <= rmax; ++r)
        for (int c = 1; c <= cmax; ++c) {
            std::string where = "r=" + std::to_string(r) + " c=" + std::to_string(c);
            TruncSeries sums = gf_box_det_sum(r, c, n);
            TruncSeries oracle = pops_gf_aq(Constraint::box(r, c), n);
            expect_series_eq(oracle, sums, where + " a tracked");
            expect_series_eq(sums.substitute(true, 1, false, 0),
                             gf_box_t(r, c, n).substitute(false, 0, true, -1),
                             where + " a=1 vs t=-1 product");
        }
}

void check_sec7_row(const json& params, int n) {
    int nmax = params.value("nmax", 4), cmax = params.value("cmax", 4);
    for (int m = 0; m <= nmax; ++m)
        for (int c = 0; c <= cmax; ++c) {
            std::string where = "n=" + std::to_string(m) + " c=" + std::to_string(c);
            expect_series_eq(row_overpartitions_gf_aq(c, m, n), gf_row_bounded(m, c, n), where);
        }
}

void check_set_s(const json& params, int n) {
    std::vector<std::set<int>> sets;
    if (params.contains("sets"))
        for (const auto& v : params.at("sets")) {
            auto vec = v.get<std::vector<int>>();
            sets.emplace_back(vec.begin(), vec.end());
        }
    else
        sets = {{1}, {2}, {1, 3}, {1, 3, 5, 7, 9}};
    for (const auto& s : sets) {
        std::ostringstream os;
        os << "S={";
        for (int v : s) os << v << ",";
        os << "}";
        expect_series_eq(pops_gf_aq(Constraint::parts_in_set(s), n), gf_parts_in_set(s, n),
                         os.str());
    }
}

void check_odd_parts(const json&, int n) {
    std::set<int> odds;
    for (int v = 1; v <= n; v += 2) odds.insert(v);
    TruncSeries oracle = pops_gf_aq(Constraint::parts_in_set(odds), n);
    expect_series_eq(oracle, gf_parts_in_set(odds, n), "odd set product");
    expect_series_eq(oracle, gf_odd_parts(n), "odd factored product");
}

// -------- RSK grids

void for_each_block_matrix(int n, int emax, const std::function<void(const BlockMatrix&)>& f) {
    BlockMatrix m = BlockMatrix::zero(n);
    std::vector<int*> slots;
    std::vector<int> caps;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            slots.push_back(&m.a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            caps.push_back(emax);
            slots.push_back(&m.d[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            caps.push_back(emax);
            slots.push_back(&m.b[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            caps.push_back(1);
            slots.push_back(&m.c[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            caps.push_back(1);
        }
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == slots.size()) {
            f(m);
            return;
        }
        for (int v = 0; v <= caps[k]; ++v) {
            *slots[k] = v;
            rec(k + 1);
        }
        *slots[k] = 0;
    };
    rec(0);
}

BlockMatrix random_block_matrix(int n, int emax, unsigned long& state) {
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<unsigned>(state >> 33);
    };
    BlockMatrix m = BlockMatrix::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(next() % (emax + 1));
            m.d[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(next() % (emax + 1));
            m.b[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(next() % 2);
            m.c[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(next() % 2);
        }
    return m;
}

std::string matrix_desc(const BlockMatrix& m) {
    std::ostringstream os;
    os << "M[n=" << m.n << "]:";
    auto blk = [&](const char* name, const std::vector<std::vector<int>>& v) {
        os << " " << name << "=";
        for (const auto& row : v)
            for (int x : row) os << x;
    };
    blk("A", m.a);
    blk("B", m.b);
    blk("C", m.c);
    blk("D", m.d);
    return os.str();
}

void rsk_roundtrip_and_stats(const BlockMatrix& m) {
    RskPair pq = rsk_forward(m);
    expect_true(pq.p.validate().ok(), "P invalid for " + matrix_desc(m));
    expect_true(pq.q.validate().ok(), "Q invalid for " + matrix_desc(m));
    expect_true(pq.p.shape() == pq.q.shape(), "shape mismatch for " + matrix_desc(m));
    for (int k = 1; k <= m.n; ++k) {
        /* P carries the bottoms of the pairs (column sums), Q the tops
         * (row sums). */
        int a_col = 0, b_col = 0, c_col = 0, d_col = 0;
        int a_row = 0, b_row = 0, c_row = 0, d_row = 0;
        for (int i = 0; i < m.n; ++i) {
            a_col += m.a[static_cast<size_t>(i)][static_cast<size_t>(k - 1)];
            b_col += m.b[static_cast<size_t>(i)][static_cast<size_t>(k - 1)];
            c_col += m.c[static_cast<size_t>(i)][static_cast<size_t>(k - 1)];
            d_col += m.d[static_cast<size_t>(i)][static_cast<size_t>(k - 1)];
            a_row += m.a[static_cast<size_t>(k - 1)][static_cast<size_t>(i)];
            b_row += m.b[static_cast<size_t>(k - 1)][static_cast<size_t>(i)];
            c_row += m.c[static_cast<size_t>(k - 1)][static_cast<size_t>(i)];
            d_row += m.d[static_cast<size_t>(k - 1)][static_cast<size_t>(i)];
        }
        expect_true(count_occurrences(pq.p, k, false) == a_col + c_col,
                    "plain count in P for " + matrix_desc(m));
        expect_true(count_occurrences(pq.p, k, true) == b_col + d_col,
                    "overlined count in P for " + matrix_desc(m));
        expect_true(count_occurrences(pq.q, k, false) == a_row + b_row,
                    "plain count in Q for " + matrix_desc(m));
        expect_true(count_occurrences(pq.q, k, true) == c_row + d_row,
                    "overlined count in Q for " + matrix_desc(m));
    }
    BlockMatrix back = rsk_inverse(pq, m.n);
    expect_true(back == m, "round trip for " + matrix_desc(m));
}

void check_rsk_stats(const json& params, int) {
    int n = params.value("n", 2), emax = params.value("emax", 2);
    for_each_block_matrix(n, emax, rsk_roundtrip_and_stats);
    int rn = params.value("random_n", 3), rc = params.value("random_count", 1000);
    unsigned long seed = params.value("seed", 20240915ul);
    for (int i = 0; i < rc; ++i) rsk_roundtrip_and_stats(random_block_matrix(rn, 2, seed));
}

void check_rsk_transpose(const json& params, int) {
    int n = params.value("n", 2), emax = params.value("emax", 2);
    auto one = [&](const BlockMatrix& m) {
        RskPair pq = rsk_forward(m);
        RskPair qp = rsk_forward(m.transposed());
        expect_true(qp.p == pq.q && qp.q == pq.p, "transpose swap for " + matrix_desc(m));
    };
    for_each_block_matrix(n, emax, one);
    int rn = params.value("random_n", 3), rc = params.value("random_count", 200);
    unsigned long seed = params.value("seed", 777ul);
    for (int i = 0; i < rc; ++i) one(random_block_matrix(rn, 2, seed));
}

void check_rsk_symmetric(const json& params, int n) {
    int bn = params.value("n", 2), emax = params.value("emax", 2);
    for_each_block_matrix(bn, emax, [&](const BlockMatrix& m) {
        if (!m.symmetric()) return;
        RskPair pq = rsk_forward(m);
        expect_true(pq.p == pq.q, "symmetric matrix must give P=Q: " + matrix_desc(m));
    });
    // non-symmetric inputs must not give P=Q (the correspondence is 1-1)
    for_each_block_matrix(bn, 1, [&](const BlockMatrix& m) {
        if (m.symmetric()) return;
        RskPair pq = rsk_forward(m);
        expect_true(!(pq.p == pq.q), "P=Q from a non-symmetric matrix: " + matrix_desc(m));
    });

    // pinned instance
    BlockMatrix m = BlockMatrix::zero(2);
    m.a = {{0, 2}, {2, 0}};
    m.b = {{1, 0}, {1, 0}};
    m.c = {{1, 1}, {0, 0}};
    m.d = {{0, 1}, {1, 1}};
    RskPair pq = rsk_forward(m);
    std::vector<std::vector<Cell>> want = {{{2, false}, {2, false}, {2, false}},
                                           {{2, true}, {1, false}, {1, false}},
                                           {{2, true}, {1, true}},
                                           {{1, false}},
                                           {{1, true}},
                                           {{1, true}}};
    expect_true(pq.p == PlaneOverpartition(want), "pinned instance P");
    expect_true(pq.q == PlaneOverpartition(want), "pinned instance Q");

    /* summing a^o q^|P| over images of symmetric matrices reproduces the
     * bounded-entry product */
    int wmax = params.value("sym_weight_max", 8);
    wmax = std::min(wmax, n);
    TruncSeries sym_sum(wmax);
    BlockMatrix mm = BlockMatrix::zero(bn);
    int bcount = bn * bn;
    int tri = bn * (bn + 1) / 2;
    int total = bcount + 2 * tri;
    auto set_slot = [&](int slot, int v) {
        if (slot < bcount) {
            int i = slot / bn, j = slot % bn;
            mm.b[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            mm.c[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            return;
        }
        int s = slot - bcount;
        bool is_a = s < tri;
        if (!is_a) s -= tri;
        int i = 0;
        while (s >= bn - i) {
            s -= bn - i;
            ++i;
        }
        int j = i + s;
        auto& blk = is_a ? mm.a : mm.d;
        blk[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        blk[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    };
    std::function<void(int)> rec = [&](int slot) {
        if (slot == total) {
            RskPair pp = rsk_forward(mm);
            sym_sum.add_term(pp.p.weight(), CoeffPoly::monomial(1, pp.p.overline_count(), 0));
            return;
        }
        int cap = slot < bcount ? 1 : wmax;
        for (int v = 0; v <= cap; ++v) {
            set_slot(slot, v);
            if (mm.pair_weight() > wmax) break;  // entries only add weight
            rec(slot + 1);
        }
        set_slot(slot, 0);
    };
    rec(0);
    expect_series_eq(sym_sum, gf_max_entry(bn, wmax), "symmetric sum vs bounded product");
}

void check_bk_weights(const json& params, int) {
    int cells_max = params.value("cells_max", 4), emax = params.value("emax", 3);
    for_each_partition_up_to(cells_max, 0, 0, [&](const Partition& shape) {
        if (shape.empty()) return;
        std::vector<PlanePartition> cs;
        for_each_column_strict(shape, emax, [&](const PlanePartition& p) { cs.push_back(p); });
        for (const PlanePartition& sigma : cs)
            for (const PlanePartition& lambda : cs) {
                PlanePartition pi = bk_merge(sigma, lambda);
                std::string where = "shape=" + shape.str();
                expect_true(pi.weight() == sigma.weight() + lambda.weight() - shape.weight(),
                            where + " weight identity");
                auto [s2, l2] = bk_split(pi);
                expect_true(s2 == sigma && l2 == lambda, where + " round trip");
                HLPoly lhs = a_weight(pi) * b_poly(shape);
                HLPoly rhs = bk_phi(sigma) * bk_phi(lambda);
                expect_poly_eq(lhs, rhs, pi.weight(), where + " weight polynomial");
            }
    });
    // pinned instance
    PlanePartition sigma({{4, 4, 4, 4}, {2, 2, 2, 1}, {1, 1, 1}});
    PlanePartition lambda({{4, 4, 3, 3}, {3, 3, 2, 2}, {1, 1, 1}});
    PlanePartition pi = bk_merge(sigma, lambda);
    PlanePartition want({{4, 4, 4, 4}, {4, 4, 3}, {4, 4, 3}, {2, 2}});
    expect_true(pi == want, "pinned instance output");
    expect_true(pi.weight() == 42, "pinned instance weight");
    HLPoly a = a_weight(pi);
    HLPoly expect = HLPoly::one_minus_t_pow(1) * HLPoly::one_minus_t_pow(1) *
                    HLPoly::one_minus_t_pow(1) * HLPoly::one_minus_t_pow(2);
    expect_poly_eq(a, expect, 42, "pinned instance weight polynomial");
}

void check_tiling_roundtrip(const json& params, int) {
    int wmax = params.value("weight_max", 5);
    enum_pops(Constraint::all(), wmax, [&](const PlaneOverpartition& pop) {
        int maxe = 0;
        for (const auto& r : pop.rows())
            for (const Cell& c : r) maxe = std::max(maxe, c.value);
        // one extra cell of headroom so box additions stay inside
        Window w = Window::standard(pop.shape(), maxe + 1);
        DominoTiling t = pop_to_tiling(pop, w);
        PlaneOverpartition back = tiling_to_pop(t);
        expect_true(back == pop, "round trip for " + pop_desc(pop));
        for (const LocalMove& mv : legal_moves(pop)) {
            PlaneOverpartition moved = apply_move_to_pop(pop, mv);
            DominoTiling swapped = apply_move_to_tiling(t, pop, mv);
            DominoTiling rebuilt = pop_to_tiling(moved, w);
            expect_true(swapped == rebuilt, "local move vs recomputation for " + pop_desc(pop));
            std::vector<Domino> od = t.dominoes(), nd = rebuilt.dominoes();
            int removed = 0, added = 0;
            for (const Domino& d : od)
                if (std::find(nd.begin(), nd.end(), d) == nd.end()) ++removed;
            for (const Domino& d : nd)
                if (std::find(od.begin(), od.end(), d) == od.end()) ++added;
            expect_true(removed == 2 && added == 2,
                        "move must exchange exactly two dominoes for " + pop_desc(pop));
        }
    });
    int cells_max = params.value("shape_cells_max", 5), emax = params.value("entry_max", 4);
    for_each_partition_up_to(cells_max, 0, 0, [&](const Partition& shape) {
        if (shape.empty()) return;
        enum_pops(Constraint::shape(shape), cells_max * emax, [&](const PlaneOverpartition& pop) {
            int maxe = 0;
            for (const auto& r : pop.rows())
                for (const Cell& c : r) maxe = std::max(maxe, c.value);
            if (maxe > emax) return;
            Window w = Window::standard(shape, emax);
            DominoTiling t = pop_to_tiling(pop, w);
            std::string bad = boundary_violations(t, shape, emax);
            expect_true(bad.empty(), "boundary layout for " + pop_desc(pop) + ": " + bad);
        });
    });
}

void check_phi_equals_a(const json& params, int n) {
    int len_max = params.value("skew_len_max", 6);
    for (int len = 2; len <= len_max; ++len)
        for_each_skew_profile(len, [&](const Profile& p) {
            enum_interlacing(p, Topology::Planar, n, [&](const InterlacingSequence& seq) {
                expect_poly_eq(a_weight(seq), phi_sequence(seq), seq.weight(),
                               "skew profile=" + p.str());
            });
        });
    int tmax = params.value("cyl_T_max", 3);
    for (int T = 1; T <= tmax; ++T)
        for (unsigned m = 0; m < (1u << T); ++m) {
            Profile p;
            for (int i = 0; i < T; ++i) p.bits.push_back((m >> i) & 1u);
            enum_interlacing(p, Topology::Cylindric, std::min(n, 6),
                             [&](const InterlacingSequence& seq) {
                HLPoly phi = phi_sequence(seq);
                expect_poly_eq(a_weight(seq), phi, seq.weight(),
                               "cylindric T=" + std::to_string(T) + " profile=" + p.str());
                InterlacingSequence planar = seq;
                planar.topology = Topology::Planar;
                HLPoly quotient =
                    a_weight(planar).divide_exact(b_poly(seq.partitions.front()));
                expect_poly_eq(quotient, phi, seq.weight(),
                               "cylindric/planar quotient T=" + std::to_string(T));
            });
        }
    int plen = params.value("planar_len_max", 4), pw = params.value("planar_weight_max", 6);
    for (int count = 2; count <= plen; ++count)
        for_each_planar_sequence(count, pw, [&](const InterlacingSequence& seq) {
            HLPoly lhs = b_poly(seq.partitions.front()) * phi_sequence(seq);
            expect_poly_eq(a_weight(seq), lhs, seq.weight(), "planar sequence");
        });
    // truncation chains carry weight b_lambda
    for_each_partition_up_to(params.value("chain_weight_max", 6), 0, 0,
                             [&](const Partition& lam) {
        InterlacingSequence chain = truncation_chain(lam);
        expect_poly_eq(a_weight(chain), b_poly(lam), lam.weight(), "chain " + lam.str());
        expect_poly_eq(phi_sequence(chain), b_poly(lam), lam.weight(), "chain phi " + lam.str());
    });
    int deg = params.value("cauchy_degree", 4);
    MultiPoly lhs = cauchy_sum_side(2, 2, deg);
    MultiPoly rhs = cauchy_product_side(2, 2, deg);
    expect_true(lhs == rhs, "bilinear kernel identity");
}

using CheckFn = void (*)(const json&, int);

const std::map<std::string, CheckFn>& catalog_map() {
    static const std::map<std::string, CheckFn> m = {
        {"thm1-box", check_thm1_box},
        {"thm2-box-t", check_thm2_box_t},
        {"thm3-shape", check_thm3_shape},
        {"thm4-bounded", check_thm4_bounded},
        {"thm5-reverse", check_thm5_reverse},
        {"thm7-max-entry", check_thm7_max_entry},
        {"thm8-skew", check_thm8_skew},
        {"thm9-cylindric", check_thm9_cylindric},
        {"prop34-all", check_prop34_all},
        {"eqm-det-hook", check_eqm_det_hook},
        {"lemma-w", check_lemma_w},
        {"prop33-sum-det", check_prop33_sum_det},
        {"sec7-row", check_sec7_row},
        {"set-s", check_set_s},
        {"odd-parts", check_odd_parts},
        {"rsk-stats", check_rsk_stats},
        {"rsk-transpose", check_rsk_transpose},
        {"rsk-symmetric", check_rsk_symmetric},
        {"bk-weights", check_bk_weights},
        {"tiling-roundtrip", check_tiling_roundtrip},
        {"phi-equals-a", check_phi_equals_a},
    };
    return m;
}

}  // namespace

json VerificationReport::to_json() const {
    json j{{"identity", identity_id},
           {"parameters", parameters},
           {"truncation", truncation},
           {"status", pass ? "pass" : "fail"},
           {"runtime_ms", runtime_ms}};
    if (first_discrepancy) {
        j["first_discrepancy"] = json{{"q_exp", first_discrepancy->q_exp},
                                      {"oracle", first_discrepancy->oracle},
                                      {"formula", first_discrepancy->formula},
                                      {"where", first_discrepancy->where}};
    }
    if (!error.empty()) j["error"] = error;
    return j;
}

std::string VerificationReport::line() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << "  " << identity_id;
    if (!parameters.empty()) os << " " << parameters.dump();
    os << "  N=" << truncation << "  (" << runtime_ms << " ms)";
    if (!error.empty()) os << "  error: " << error;
    if (first_discrepancy)
        os << "  first discrepancy at q^" << first_discrepancy->q_exp << " ["
           << first_discrepancy->where << "]: oracle " << first_discrepancy->oracle
           << " vs formula " << first_discrepancy->formula;
    return os.str();
}

std::vector<std::string> identity_catalog() {
    std::vector<std::string> ids;
    for (const auto& [k, v] : catalog_map()) ids.push_back(k);
    return ids;
}

VerificationReport verify(const std::string& identity_id, const json& params, int max_q) {
    VerificationReport r;
    r.identity_id = identity_id;
    r.parameters = params;
    r.truncation = max_q;
    auto t0 = std::chrono::steady_clock::now();
    auto it = catalog_map().find(identity_id);
    if (it == catalog_map().end()) {
        r.error = "unknown identity";
        return r;
    }
    try {
        it->second(params, max_q);
        r.pass = true;
    } catch (const CheckFail& f) {
        r.pass = false;
        r.first_discrepancy = f.d;
    } catch (const std::exception& e) {
        r.pass = false;
        r.error = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

std::vector<VerificationReport> run_suite(const json& config, int workers) {
    if (!config.is_array()) throw std::invalid_argument("run_suite: config must be an array");
    std::vector<VerificationReport> reports(config.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= config.size()) return;
            const json& entry = config[i];
            std::string id = entry.value("id", "");
            json params = entry.value("params", json::object());
            int n = entry.value("max_q", 10);
            reports[i] = verify(id, params, n);
        }
    };
    int nw = std::max(1, workers);
    std::vector<std::thread> threads;
    for (int i = 0; i < nw; ++i) threads.emplace_back(work);
    for (auto& t : threads) t.join();
    return reports;
}

}  // namespace povp
