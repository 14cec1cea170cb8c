#include "povp/hall_littlewood.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace povp {

HLPoly phi_r(int r) {
    HLPoly p = HLPoly::one();
    for (int j = 1; j <= r; ++j) p = p * HLPoly::one_minus_t_pow(j);
    return p;
}

HLPoly b_poly(const Partition& lambda) {
    HLPoly p = HLPoly::one();
    if (lambda.empty()) return p;
    for (int v = 1; v <= lambda.part(1); ++v) {
        int m = lambda.multiplicity(v);
        if (m > 0) p = p * phi_r(m);
    }
    return p;
}

StripPolys hl_strip_polys(const Partition& lambda, const Partition& mu) {
    if (!Partition::horizontal_strip(lambda, mu)) return {HLPoly::zero(), HLPoly::zero()};
    Partition lc = lambda.conjugate();
    Partition mc = mu.conjugate();
    auto theta = [&](int col) { return lc.part(col) - mc.part(col); };  // 0 or 1
    HLPoly phi = HLPoly::one();
    HLPoly psi = HLPoly::one();
    int top = lambda.empty() ? 0 : lambda.part(1);
    for (int col = 1; col <= top; ++col) {
        if (theta(col) == 1 && theta(col + 1) == 0)
            phi = phi * HLPoly::one_minus_t_pow(lambda.multiplicity(col));
        if (theta(col) == 0 && theta(col + 1) == 1)
            psi = psi * HLPoly::one_minus_t_pow(mu.multiplicity(col));
    }
    return {phi, psi};
}

HLPoly phi_sequence(const InterlacingSequence& seq) {
    ValidationResult v = seq.validate();
    if (!v.ok()) throw std::invalid_argument("phi_sequence: invalid sequence");
    HLPoly p = HLPoly::one();
    for (int i = 0; i + 1 < seq.size(); ++i) {
        const Partition& a = seq.partitions[static_cast<size_t>(i)];
        const Partition& b = seq.partitions[static_cast<size_t>(i + 1)];
        int bit = seq.profile.bits[static_cast<size_t>(i)];
        p = p * (bit == 0 ? hl_strip_polys(b, a).phi : hl_strip_polys(a, b).psi);
    }
    return p;
}

InterlacingSequence truncation_chain(const Partition& lambda) {
    InterlacingSequence seq;
    seq.topology = Topology::Planar;
    seq.partitions.push_back(Partition());
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<int> parts;
        for (int j = 1; j <= i; ++j) parts.push_back(lambda.part(j));
        seq.partitions.push_back(Partition(std::move(parts)));
        seq.profile.bits.push_back(0);
    }
    return seq;
}

MultiPoly MultiPoly::one(int nvars) {
    MultiPoly p(nvars);
    p.add_term(Key(static_cast<size_t>(nvars), 0), HLPoly::one());
    return p;
}

void MultiPoly::add_term(const Key& k, const HLPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, HLPoly::zero() - c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            Key k(k1);
            for (size_t i = 0; i < k.size(); ++i) k[i] += k2[i];
            r.add_term(k, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::truncate_total_degree(int d) const {
    MultiPoly r(nvars_);
    for (const auto& [k, c] : terms_) {
        int deg = 0;
        for (int e : k) deg += e;
        if (deg <= d) r.add_term(k, c);
    }
    return r;
}

MultiPoly MultiPoly::divide_exact(const HLPoly& d) const {
    MultiPoly r(nvars_);
    for (const auto& [k, c] : terms_) r.add_term(k, c.divide_exact(d));
    return r;
}

MultiPoly hl_q_bruteforce(const Partition& lambda, int nvars) {
    MultiPoly out(nvars);
    if (lambda.empty()) return MultiPoly::one(nvars);
    /* Column-strict plane partitions of shape lambda with entries <= nvars
     * are sequences lambda = nu^1 >= nu^2 >= ... >= nu^{nvars+1} = empty with
     * nu^i / nu^{i+1} horizontal strips (nu^i = shape of entries >= i). */
    std::vector<Partition> chain(static_cast<size_t>(nvars) + 1);
    chain[0] = lambda;
    std::function<void(int, HLPoly, MultiPoly::Key)> rec = [&](int i, HLPoly w,
                                                               MultiPoly::Key key) {
        if (i == nvars) {
            if (!chain[static_cast<size_t>(i)].empty()) return;
            out.add_term(key, w);
            return;
        }
        for_each_hstrip_below(chain[static_cast<size_t>(i)], [&](const Partition& mu) {
            StripPolys sp = hl_strip_polys(chain[static_cast<size_t>(i)], mu);
            if (sp.phi.is_zero()) return;
            chain[static_cast<size_t>(i + 1)] = mu;
            MultiPoly::Key k2 = key;
            k2[static_cast<size_t>(i)] +=
                chain[static_cast<size_t>(i)].weight() - mu.weight();
            rec(i + 1, w * sp.phi, k2);
        });
    };
    rec(0, HLPoly::one(), MultiPoly::Key(static_cast<size_t>(nvars), 0));
    return out;
}

MultiPoly cauchy_sum_side(int xvars, int yvars, int degree) {
    int n = xvars + yvars;
    MultiPoly total(n);
    for_each_partition_up_to(degree / 2, 0, 0, [&](const Partition& lambda) {
        MultiPoly qx = hl_q_bruteforce(lambda, xvars);
        MultiPoly qy = hl_q_bruteforce(lambda, yvars);
        if (qx.is_zero() || qy.is_zero()) return;
        MultiPoly py = qy.divide_exact(b_poly(lambda));
        // splice variables: x block then y block
        MultiPoly term(n);
        for (const auto& [kx, cx] : qx.terms()) {
            for (const auto& [ky, cy] : py.terms()) {
                MultiPoly::Key k(static_cast<size_t>(n), 0);
                for (int i = 0; i < xvars; ++i) k[static_cast<size_t>(i)] = kx[static_cast<size_t>(i)];
                for (int i = 0; i < yvars; ++i) k[static_cast<size_t>(xvars + i)] = ky[static_cast<size_t>(i)];
                term.add_term(k, cx * cy);
            }
        }
        total = total + term;
    });
    return total.truncate_total_degree(degree);
}

MultiPoly cauchy_product_side(int xvars, int yvars, int degree) {
    int n = xvars + yvars;
    MultiPoly total = MultiPoly::one(n);
    for (int i = 0; i < xvars; ++i) {
        for (int j = 0; j < yvars; ++j) {
            // (1 - t x_i y_j) / (1 - x_i y_j) = 1 + (1-t) sum_{m>=1} (x_i y_j)^m
            MultiPoly f(n);
            f.add_term(MultiPoly::Key(static_cast<size_t>(n), 0), HLPoly::one());
            HLPoly onemt = HLPoly::one_minus_t_pow(1);
            for (int m = 1; 2 * m <= degree; ++m) {
                MultiPoly::Key k(static_cast<size_t>(n), 0);
                k[static_cast<size_t>(i)] = m;
                k[static_cast<size_t>(xvars + j)] = m;
                f.add_term(k, onemt);
            }
            total = (total * f).truncate_total_degree(degree);
        }
    }
    return total;
}

}  // namespace povp
