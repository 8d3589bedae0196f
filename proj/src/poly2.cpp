#include "cremona/poly2.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cremona {

Poly2 Poly2::constant(const Rat& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int i, int j, Rat c) {
    Poly2 p;
    if (c != 0) p.terms_[{i, j}] = std::move(c);
    return p;
}

Poly2 Poly2::var_u() { return monomial(1, 0, 1); }
Poly2 Poly2::var_v() { return monomial(0, 1, 1); }

int Poly2::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int Poly2::degree_u() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int Poly2::degree_v() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

Rat Poly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [k, c] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    const std::size_t limit = term_limit();
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            Poly2::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                r.terms_[k] = ca * cb;
                if (r.terms_.size() > limit)
                    throw ResourceLimit("bivariate product exceeds term limit");
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Poly2 operator*(const Rat& c, const Poly2& a) {
    if (c == 0) return {};
    Poly2 r = a;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

Poly2 Poly2::pow(int e) const {
    Poly2 r = Poly2::constant(1);
    Poly2 base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Poly2 Poly2::derivative_u() const {
    Poly2 r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.terms_[{k.first - 1, k.second}] = c * k.first;
    return r;
}

Poly2 Poly2::derivative_v() const {
    Poly2 r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.terms_[{k.first, k.second - 1}] = c * k.second;
    return r;
}

Rat Poly2::eval(const Rat& u, const Rat& v) const {
    auto p = [](const Rat& x, int e) {
        Rat r = 1;
        for (int i = 0; i < e; ++i) r *= x;
        return r;
    };
    Rat s = 0;
    for (const auto& [k, c] : terms_) s += c * p(u, k.first) * p(v, k.second);
    return s;
}

Poly2 Poly2::subst(const Poly2& gu, const Poly2& gv) const {
    int mu = degree_u(), mv = degree_v();
    std::vector<Poly2> pu(mu + 1), pv(mv + 1);
    pu[0] = Poly2::constant(1);
    for (int i = 1; i <= mu; ++i) pu[i] = pu[i - 1] * gu;
    pv[0] = Poly2::constant(1);
    for (int i = 1; i <= mv; ++i) pv[i] = pv[i - 1] * gv;
    Poly2 r;
    for (const auto& [k, c] : terms_) r = r + c * (pu[k.first] * pv[k.second]);
    return r;
}

Poly2 Poly2::leading_form() const {
    int d = total_degree();
    Poly2 r;
    for (const auto& [k, c] : terms_)
        if (k.first + k.second == d) r.terms_[k] = c;
    return r;
}

int Poly2::min_exp_u() const {
    if (is_zero()) throw AllZero("min_exp_u of zero polynomial");
    int m = degree_u();
    for (const auto& [k, c] : terms_) m = std::min(m, k.first);
    return m;
}

int Poly2::min_exp_v() const {
    if (is_zero()) throw AllZero("min_exp_v of zero polynomial");
    int m = degree_v();
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

Poly2 Poly2::shift_down_u(int k) const {
    Poly2 r;
    for (const auto& [key, c] : terms_) {
        if (key.first < k) throw InternalInconsistency("shift_down_u: not divisible");
        r.terms_[{key.first - k, key.second}] = c;
    }
    return r;
}

Poly2 Poly2::shift_down_v(int k) const {
    Poly2 r;
    for (const auto& [key, c] : terms_) {
        if (key.second < k) throw InternalInconsistency("shift_down_v: not divisible");
        r.terms_[{key.first, key.second - k}] = c;
    }
    return r;
}

std::string Poly2::str(const std::string& nu, const std::string& nv) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    // print highest total degree first, deterministic
    std::vector<std::pair<Key, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
        int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first > r.first;
    });
    bool first = true;
    for (const auto& [k, cv] : ts) {
        Rat c = cv;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || (k.first == 0 && k.second == 0)) {
            os << rat_to_string(c);
            printed = true;
        }
        auto var = [&](const std::string& n, int e) {
            if (e == 0) return;
            if (printed) os << "*";
            os << n;
            if (e > 1) os << "^" << e;
            printed = true;
        };
        var(nu, k.first);
        var(nv, k.second);
    }
    return os.str();
}

}  // namespace cremona
