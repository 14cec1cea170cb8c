#include "povp/closedform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace povp {

namespace {

// (1 - c a^alpha t^tau q^e)^{-1} as a factor multiplied into s
TruncSeries inv_factor(Int c, int a_exp, int t_exp, int q_exp, int trunc) {
    TruncSeries f = TruncSeries::one(trunc);
    f.add_term(q_exp, CoeffPoly::monomial(-c, a_exp, t_exp));
    return f.invert();
}

}  // namespace

TruncSeries gf_overpartitions(int k, bool exact, int trunc) {
    if (k < 0) throw std::invalid_argument("gf_overpartitions: negative k");
    if (!exact) {
        // (-aq)_k / (q)_k
        TruncSeries num = pochhammer(-1, 1, 0, 1, k, trunc);
        return num * pochhammer_q(k, trunc).invert();
    }
    // q^k (-a)_k / (q)_k
    TruncSeries num = pochhammer(-1, 1, 0, 0, k, trunc);
    return num.shift_q(k) * pochhammer_q(k, trunc).invert();
}

TruncSeries gf_box_t(int r, int c, int trunc) {
    TruncSeries s = TruncSeries::one(trunc);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= c; ++j) {
            int e = i + j - 1;
            if (e > trunc) continue;
            TruncSeries num = TruncSeries::one(trunc);
            num.add_term(e, CoeffPoly::monomial(-1, 0, 1));
            s = s * num * inv_factor(1, 0, 0, e, trunc);
        }
    }
    return s;
}

namespace {

/* Minor expansion with memoization on the set of used columns.  Rows are
 * consumed in order; entries are series.  Division-free. */
TruncSeries det_series(const std::vector<std::vector<TruncSeries>>& m, int trunc) {
    int n = static_cast<int>(m.size());
    if (n == 0) return TruncSeries::one(trunc);
    std::map<unsigned, TruncSeries> memo;
    std::function<TruncSeries(unsigned)> rec = [&](unsigned used) -> TruncSeries {
        int row = __builtin_popcount(used);
        if (row == n) return TruncSeries::one(trunc);
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        TruncSeries acc(trunc);
        int sign = 1;
        for (int col = 0; col < n; ++col) {
            if (used & (1u << col)) continue;
            const TruncSeries& e = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (!e.is_zero()) {
                TruncSeries sub = rec(used | (1u << col));
                acc = sign > 0 ? acc + e * sub : acc - e * sub;
            }
            sign = -sign;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return rec(0);
}

}  // namespace

TruncSeries det_overpartition_matrix(const Partition& lambda, bool shifted, int trunc) {
    // strip trailing zeros implicitly via Partition; size = length
    int n = lambda.length();
    std::vector<std::vector<TruncSeries>> m(static_cast<size_t>(n),
                                            std::vector<TruncSeries>(static_cast<size_t>(n),
                                                                     TruncSeries(trunc)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int sub = lambda.part(j) + i - j;
            if (sub < 0) continue;  // zero entry
            TruncSeries e = pochhammer(-1, 1, 0, shifted ? 1 : 0, sub, trunc) *
                            pochhammer_q(sub, trunc).invert();
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = e;
        }
    }
    return det_series(m, trunc);
}

TruncSeries gf_hook_content(const Partition& lambda, bool bounded, int trunc) {
    // prefactor exponent and worst-case negative exponent from contents
    int pref = 0, neg = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        pref += (bounded ? i - 1 : i) * lambda.part(i);
        for (int j = 1; j <= lambda.part(i); ++j) {
            int c = lambda.content(i, j) + (bounded ? 1 : 0);
            if (c < 0) neg -= c;
        }
    }
    int work = trunc + neg;
    TruncSeries s = TruncSeries::one(work).shift_q(pref);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            int c = lambda.content(i, j) + (bounded ? 1 : 0);
            int h = lambda.hook(i, j);
            TruncSeries num = TruncSeries::one(work);
            num.add_term(c, CoeffPoly::monomial(1, 1, 0));
            s = s * num * inv_factor(1, 0, 0, h, work);
        }
    }
    if (s.min_exponent() < 0)
        throw std::domain_error("gf_hook_content: negative q-exponents survive");
    return s.retruncate(trunc);
}

TruncSeries pfaffian(const std::vector<std::vector<TruncSeries>>& m, int trunc) {
    int n = static_cast<int>(m.size());
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
    if (n == 0) return TruncSeries::one(trunc);
    // Pf(M) = sum_{j>0} (-1)^j M[0][j] Pf(M without rows/cols 0, j)
    std::function<TruncSeries(std::vector<int>)> rec =
        [&](std::vector<int> idx) -> TruncSeries {
        if (idx.empty()) return TruncSeries::one(trunc);
        TruncSeries acc(trunc);
        int i0 = idx[0];
        for (size_t p = 1; p < idx.size(); ++p) {
            int j = idx[p];
            const TruncSeries& e = m[static_cast<size_t>(i0)][static_cast<size_t>(j)];
            if (!e.is_zero()) {
                std::vector<int> rest;
                for (size_t q = 1; q < idx.size(); ++q)
                    if (q != p) rest.push_back(idx[q]);
                TruncSeries sub = rec(rest);
                acc = (p % 2 == 1) ? acc + e * sub : acc - e * sub;
            }
        }
        return acc;
    };
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    return rec(idx);
}

namespace {

// closed form W(s) = (-q)_s/(q)_s
TruncSeries w_single(int s, int trunc) {
    return pochhammer(-1, 0, 0, 1, s, trunc) * pochhammer_q(s, trunc).invert();
}

// closed form W(r,s) = W(r) W(s) (1-q^{r-s})/(1+q^{r-s}), r > s >= 0
TruncSeries w_pair(int r, int s, int trunc) {
    TruncSeries ratio_num = TruncSeries::one(trunc);
    ratio_num.add_term(r - s, CoeffPoly::constant(-1));
    return w_single(r, trunc) * w_single(s, trunc) * ratio_num *
           inv_factor(-1, 0, 0, r - s, trunc);
}

}  // namespace

TruncSeries path_sum_free_starts(const std::vector<int>& rs, int trunc) {
    for (size_t i = 0; i + 1 < rs.size(); ++i)
        if (rs[i] <= rs[i + 1])
            throw std::invalid_argument("path_sum_free_starts: not strictly decreasing");
    if (!rs.empty() && rs.back() < 0)
        throw std::invalid_argument("path_sum_free_starts: negative argument");
    size_t l = rs.size();
    if (l == 0) return TruncSeries::one(trunc);
    if (l == 1) return w_single(rs[0], trunc);
    if (l == 2) return w_pair(rs[0], rs[1], trunc);
    size_t n = l % 2 == 0 ? l : l + 1;
    std::vector<std::vector<TruncSeries>> d(n, std::vector<TruncSeries>(n, TruncSeries(trunc)));
    for (size_t i = 0; i < l; ++i)
        for (size_t j = i + 1; j < l; ++j) {
            d[i][j] = w_pair(rs[i], rs[j], trunc);
            d[j][i] = -d[i][j];
        }
    if (n != l)
        for (size_t i = 0; i < l; ++i) {
            d[i][l] = w_single(rs[i], trunc);
            d[l][i] = -d[i][l];
        }
    return pfaffian(d, trunc);
}

TruncSeries gf_reverse_hook(const Partition& lambda, int trunc) {
    TruncSeries s = TruncSeries::one(trunc);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            int h = lambda.hook(i, j);
            TruncSeries num = TruncSeries::one(trunc);
            num.add_term(h, CoeffPoly::constant(1));
            s = s * num * inv_factor(1, 0, 0, h, trunc);
        }
    }
    return s;
}

TruncSeries gf_all_weighted(int trunc) {
    TruncSeries s = TruncSeries::one(trunc);
    for (int i = 1; i <= trunc; ++i) {
        TruncSeries num = TruncSeries::one(trunc);
        num.add_term(i, CoeffPoly::monomial(1, 1, 0));
        for (int rep = 0; rep < i; ++rep) s = s * num;
        TruncSeries invq = inv_factor(1, 0, 0, i, trunc);
        for (int rep = 0; rep < (i + 1) / 2; ++rep) s = s * invq;
        TruncSeries inva = inv_factor(1, 2, 0, i, trunc);
        for (int rep = 0; rep < i / 2; ++rep) s = s * inva;
    }
    return s;
}

TruncSeries gf_shifted_macmahon(int trunc) {
    TruncSeries s = TruncSeries::one(trunc);
    for (int n = 1; n <= trunc; ++n) {
        TruncSeries num = TruncSeries::one(trunc);
        num.add_term(n, CoeffPoly::constant(1));
        TruncSeries den = inv_factor(1, 0, 0, n, trunc);
        for (int rep = 0; rep < n; ++rep) s = s * num * den;
    }
    return s;
}

TruncSeries gf_max_entry(int n, int trunc) {
    TruncSeries s = TruncSeries::one(trunc);
    for (int j = 1; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
            int e = i + j;
            if (e > trunc) continue;
            TruncSeries num = TruncSeries::one(trunc);
            num.add_term(e, CoeffPoly::monomial(1, 1, 0));
            s = s * num;
        }
        for (int i = 1; i <= j; ++i) {
            if (i + j - 1 <= trunc) s = s * inv_factor(1, 0, 0, i + j - 1, trunc);
            if (i + j <= trunc) s = s * inv_factor(1, 2, 0, i + j, trunc);
        }
    }
    return s;
}

TruncSeries gf_parts_in_set(const std::set<int>& set, int trunc) {
    if (set.empty()) throw std::invalid_argument("gf_parts_in_set: empty set");
    std::vector<int> s(set.begin(), set.end());
    TruncSeries out = TruncSeries::one(trunc);
    for (int i : s) {
        if (i > trunc) break;
        for (int j : s) {
            if (i + j > trunc) break;
            TruncSeries num = TruncSeries::one(trunc);
            num.add_term(i + j, CoeffPoly::monomial(1, 1, 0));
            out = out * num;
        }
        out = out * inv_factor(1, 0, 0, i, trunc);   // 1/(1-q^i)
        out = out * inv_factor(1, 1, 0, i, trunc);   // 1/(1-a q^i)
        for (int j : s) {
            if (j >= i || i + j > trunc) {
                if (j >= i) break;
                continue;
            }
            out = out * inv_factor(1, 0, 0, i + j, trunc);
            out = out * inv_factor(1, 2, 0, i + j, trunc);
        }
    }
    return out;
}

TruncSeries gf_odd_parts(int trunc) {
    TruncSeries out = TruncSeries::one(trunc);
    for (int i = 1; 2 * i - 1 <= trunc; ++i) {
        if (2 * i <= trunc) {
            TruncSeries num = TruncSeries::one(trunc);
            num.add_term(2 * i, CoeffPoly::monomial(1, 1, 0));
            for (int rep = 0; rep < i; ++rep) out = out * num;
        }
        out = out * inv_factor(1, 0, 0, 2 * i - 1, trunc);
        out = out * inv_factor(1, 1, 0, 2 * i - 1, trunc);
        if (2 * i <= trunc)
            for (int rep = 0; rep < i / 2; ++rep)
                out = out * inv_factor(1, 0, 0, 2 * i, trunc) *
                      inv_factor(1, 2, 0, 2 * i, trunc);
    }
    return out;
}

TruncSeries gf_row_bounded(int n, int c, int trunc) {
    if (n < 0 || c < 0) throw std::invalid_argument("gf_row_bounded: negative bound");
    TruncSeries out(trunc);
    for (int k = 0; k <= std::min(n, c); ++k) {
        TruncSeries term = pochhammer_q(n - k + c, trunc);
        term = term * pochhammer_q(n - k, trunc).invert();
        term = term * pochhammer_q(k, trunc).invert();
        term = term * pochhammer_q(c - k, trunc).invert();
        int e = k * (k + 1) / 2;
        TruncSeries mono = TruncSeries::monomial(1, k, 0, e, trunc);
        out = out + term * mono;
    }
    return out;
}

TruncSeries gf_skew(const Profile& profile, int trunc) {
    if (!profile.valid_skew_endpoints() || !profile.valid_bits())
        throw std::invalid_argument("gf_skew: malformed profile");
    TruncSeries s = TruncSeries::one(trunc);
    int n = profile.size();
    for (int i = 0; i < n; ++i) {
        if (profile.bits[static_cast<size_t>(i)] != 0) continue;
        for (int j = i + 1; j < n; ++j) {
            if (profile.bits[static_cast<size_t>(j)] != 1) continue;
            int e = j - i;
            if (e > trunc) continue;
            TruncSeries num = TruncSeries::one(trunc);
            num.add_term(e, CoeffPoly::monomial(-1, 0, 1));
            s = s * num * inv_factor(1, 0, 0, e, trunc);
        }
    }
    return s;
}

TruncSeries gf_cylindric(const Profile& profile, int trunc) {
    if (!profile.valid_bits() || profile.size() < 1)
        throw std::invalid_argument("gf_cylindric: malformed profile");
    int T = profile.size();
    TruncSeries s = TruncSeries::one(trunc);
    for (int n = 1; n * T <= trunc; ++n) s = s * inv_factor(1, 0, 0, n * T, trunc);
    // bits are 1-indexed in the pair rule; residue of j - i in 1..T
    for (int i = 1; i <= T; ++i) {
        if (profile.bits[static_cast<size_t>(i - 1)] != 0) continue;
        for (int j = 1; j <= T; ++j) {
            if (profile.bits[static_cast<size_t>(j - 1)] != 1) continue;
            int d = ((j - i) % T + T) % T;
            if (d == 0) d = T;
            for (int n = 1;; ++n) {
                int e = d + (n - 1) * T;
                if (e > trunc) break;
                TruncSeries num = TruncSeries::one(trunc);
                num.add_term(e, CoeffPoly::monomial(-1, 0, 1));
                s = s * num * inv_factor(1, 0, 0, e, trunc);
            }
        }
    }
    return s;
}

TruncSeries gf_box_det_sum(int r, int c, int trunc) {
    TruncSeries out(trunc);
    if (r % 2 == 0) {
        int half = r / 2;
        std::vector<int> tuple(static_cast<size_t>(half), 0);
        std::function<void(int, int)> rec = [&](int idx, int hi) {
            if (idx == half) {
                std::vector<int> parts;
                for (int v : tuple) {
                    parts.push_back(v);
                    parts.push_back(v);
                }
                out = out + det_overpartition_matrix(Partition::from_unchecked(parts), true, trunc);
                return;
            }
            for (int v = hi; v >= 0; --v) {
                tuple[static_cast<size_t>(idx)] = v;
                rec(idx + 1, v);
            }
        };
        rec(0, c);
    } else {
        int half = (r - 1) / 2;
        std::vector<int> tuple(static_cast<size_t>(half), 0);
        std::function<void(int, int)> rec = [&](int idx, int hi) {
            if (idx == half) {
                std::vector<int> parts;
                parts.push_back(c);
                for (int v : tuple) {
                    parts.push_back(v);
                    parts.push_back(v);
                }
                out = out + det_overpartition_matrix(Partition::from_unchecked(parts), true, trunc);
                return;
            }
            for (int v = hi; v >= 0; --v) {
                tuple[static_cast<size_t>(idx)] = v;
                rec(idx + 1, v);
            }
        };
        rec(0, c);
    }
    return out;
}

}  // namespace povp
