#include "povp/series.hpp"

#include <algorithm>
#include <sstream>

namespace povp {

CoeffPoly CoeffPoly::constant(Int c) {
    CoeffPoly p;
    p.add_term(0, 0, c);
    return p;
}

CoeffPoly CoeffPoly::monomial(Int c, int a_exp, int t_exp) {
    CoeffPoly p;
    p.add_term(a_exp, t_exp, c);
    return p;
}

bool CoeffPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0};
}

Int CoeffPoly::constant_term() const { return coeff(0, 0); }

Int CoeffPoly::coeff(int a_exp, int t_exp) const {
    auto it = terms_.find({a_exp, t_exp});
    return it == terms_.end() ? Int(0) : it->second;
}

void CoeffPoly::add_term(int a_exp, int t_exp, const Int& c) {
    if (c == 0) return;
    if (a_exp < 0 || t_exp < 0)
        throw std::invalid_argument("CoeffPoly: negative exponent");
    Key k{a_exp, t_exp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
    CoeffPoly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, v);
    return r;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const {
    CoeffPoly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, -v);
    return r;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
    CoeffPoly r;
    for (const auto& [k1, v1] : terms_)
        for (const auto& [k2, v2] : o.terms_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
    return r;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

CoeffPoly CoeffPoly::substitute(bool set_a, long a_val, bool set_t, long t_val) const {
    CoeffPoly r;
    for (const auto& [k, v] : terms_) {
        Int c = v;
        int ae = k.first, te = k.second;
        if (set_a) {
            Int p = 1;
            for (int i = 0; i < ae; ++i) p *= a_val;
            c *= p;
            ae = 0;
        }
        if (set_t) {
            Int p = 1;
            for (int i = 0; i < te; ++i) p *= t_val;
            c *= p;
            te = 0;
        }
        r.add_term(ae, te, c);
    }
    return r;
}

namespace {

std::string monomial_str(const Int& c, int a_exp, int t_exp) {
    std::ostringstream os;
    bool has_var = a_exp > 0 || t_exp > 0;
    if (!has_var) {
        os << c;
    } else {
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c;
        if (a_exp >= 1) {
            os << "a";
            if (a_exp > 1) os << "^" << a_exp;
        }
        if (t_exp >= 1) {
            os << "t";
            if (t_exp > 1) os << "^" << t_exp;
        }
    }
    return os.str();
}

}  // namespace

std::string CoeffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        std::string m = monomial_str(v, k.first, k.second);
        if (first) {
            os << m;
            first = false;
        } else if (!m.empty() && m[0] == '-') {
            os << "-" << m.substr(1);
        } else {
            os << "+" << m;
        }
    }
    return os.str();
}

TruncSeries TruncSeries::one(int trunc) {
    TruncSeries s(trunc);
    s.add_term(0, CoeffPoly::constant(1));
    return s;
}

TruncSeries TruncSeries::constant(const CoeffPoly& c, int trunc) {
    TruncSeries s(trunc);
    s.add_term(0, c);
    return s;
}

TruncSeries TruncSeries::monomial(Int c, int a_exp, int t_exp, int q_exp, int trunc) {
    TruncSeries s(trunc);
    s.add_term(q_exp, CoeffPoly::monomial(std::move(c), a_exp, t_exp));
    return s;
}

int TruncSeries::min_exponent() const {
    return terms_.empty() ? 0 : terms_.begin()->first;
}

void TruncSeries::add_term(int q_exp, const CoeffPoly& c) {
    if (q_exp > trunc_ || c.is_zero()) return;
    auto it = terms_.find(q_exp);
    if (it == terms_.end()) {
        terms_.emplace(q_exp, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const CoeffPoly& TruncSeries::coefficient_at(int q_exp) const {
    static const CoeffPoly kZero;
    if (q_exp > trunc_)
        throw std::out_of_range("coefficient_at: exponent above truncation order");
    auto it = terms_.find(q_exp);
    return it == terms_.end() ? kZero : it->second;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r(std::min(trunc_, o.trunc_));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries r(std::min(trunc_, o.trunc_));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries r(std::min(trunc_, o.trunc_));
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            if (e1 + e2 > r.trunc_) break;  // inner map sorted ascending
            r.add_term(e1 + e2, c1 * c2);
        }
    }
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(trunc_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return trunc_ == o.trunc_ && terms_ == o.terms_;
}

TruncSeries TruncSeries::invert() const {
    if (min_exponent() < 0)
        throw std::domain_error("invert: series has negative q-exponents");
    CoeffPoly c0 = terms_.count(0) ? terms_.at(0) : CoeffPoly();
    if (!c0.is_constant() || (c0.constant_term() != 1 && c0.constant_term() != -1))
        throw std::domain_error("invert: constant term is not a unit (+-1)");
    Int u = c0.constant_term();  // u^2 = 1
    // b_0 = u; b_n = -u * sum_{k=1..n} a_k b_{n-k}
    std::vector<CoeffPoly> b(static_cast<size_t>(trunc_) + 1);
    b[0] = CoeffPoly::constant(u);
    for (int n = 1; n <= trunc_; ++n) {
        CoeffPoly s;
        for (const auto& [k, ak] : terms_) {
            if (k <= 0) continue;
            if (k > n) break;
            s = s + ak * b[static_cast<size_t>(n - k)];
        }
        if (!s.is_zero()) b[static_cast<size_t>(n)] = -(CoeffPoly::constant(u) * s);
    }
    TruncSeries r(trunc_);
    for (int n = 0; n <= trunc_; ++n) r.add_term(n, b[static_cast<size_t>(n)]);
    return r;
}

TruncSeries TruncSeries::shift_q(int k) const {
    TruncSeries r(trunc_);
    for (const auto& [e, c] : terms_) r.add_term(e + k, c);
    return r;
}

TruncSeries TruncSeries::retruncate(int new_trunc) const {
    TruncSeries r(new_trunc);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

TruncSeries TruncSeries::substitute(bool set_a, long a_val, bool set_t, long t_val) const {
    TruncSeries r(trunc_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.substitute(set_a, a_val, set_t, t_val));
    return r;
}

std::string TruncSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs;
        bool wrap = c.terms().size() > 1;
        if (wrap)
            cs = "(" + c.str() + ")";
        else
            cs = c.str();
        std::string qs;
        if (e == 1)
            qs = "q";
        else if (e != 0)
            qs = "q^" + std::to_string(e);
        std::string term;
        if (e == 0) {
            term = cs;
        } else if (!wrap && cs == "1") {
            term = qs;
        } else if (!wrap && cs == "-1") {
            term = "-" + qs;
        } else {
            term = cs + qs;
        }
        if (first) {
            os << term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            os << " - " << term.substr(1);
        } else {
            os << " + " << term;
        }
    }
    return os.str();
}

TruncSeries pochhammer(Int c, int a_exp, int t_exp, int q_exp, int n, int trunc) {
    if (q_exp < 0) throw std::invalid_argument("pochhammer: negative q shift");
    if (n < 0 && q_exp == 0)
        throw std::invalid_argument("pochhammer: infinite product needs q shift > 0");
    TruncSeries r = TruncSeries::one(trunc);
    for (int i = 0; n < 0 || i < n; ++i) {
        int e = q_exp + i;
        if (e > trunc) break;
        TruncSeries f = TruncSeries::one(trunc);
        f.add_term(e, CoeffPoly::monomial(-c, a_exp, t_exp));
        r = r * f;
    }
    return r;
}

TruncSeries pochhammer_q(int n, int trunc) { return pochhammer(1, 0, 0, 1, n, trunc); }

HLPoly HLPoly::one_minus_t_pow(int k) {
    std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
    c[0] = 1;
    c[static_cast<size_t>(k)] = -1;
    return HLPoly(std::move(c));
}

Int HLPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
}

void HLPoly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

HLPoly HLPoly::operator+(const HLPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return HLPoly(std::move(r));
}

HLPoly HLPoly::operator-(const HLPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return HLPoly(std::move(r));
}

HLPoly HLPoly::operator*(const HLPoly& o) const {
    if (c_.empty() || o.c_.empty()) return HLPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return HLPoly(std::move(r));
}

HLPoly HLPoly::divide_exact(const HLPoly& d) const {
    if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (is_zero()) return HLPoly();
    std::vector<Int> rem = c_;
    int dn = d.degree();
    const Int& lead = d.c_.back();
    int qn = degree() - dn;
    if (qn < 0) throw std::domain_error("divide_exact: degree too small");
    std::vector<Int> q(static_cast<size_t>(qn) + 1, Int(0));
    for (int k = qn; k >= 0; --k) {
        Int num = rem[static_cast<size_t>(k + dn)];
        if (num % lead != 0) throw std::domain_error("divide_exact: not divisible");
        Int f = num / lead;
        q[static_cast<size_t>(k)] = f;
        if (f != 0)
            for (int j = 0; j <= dn; ++j) rem[static_cast<size_t>(k + j)] -= f * d.c_[static_cast<size_t>(j)];
    }
    for (const Int& x : rem)
        if (x != 0) throw std::domain_error("divide_exact: nonzero remainder");
    return HLPoly(std::move(q));
}

Int HLPoly::eval(long t) const {
    Int r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

CoeffPoly HLPoly::to_coeff_poly() const {
    CoeffPoly p;
    for (size_t i = 0; i < c_.size(); ++i) p.add_term(0, static_cast<int>(i), c_[i]);
    return p;
}

std::string HLPoly::str() const {
    CoeffPoly p = to_coeff_poly();
    return p.str();
}

}  // namespace povp
