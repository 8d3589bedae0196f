#include "cremona/homogpoly.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "cremona/unipoly.hpp"

namespace cremona {

namespace {
std::atomic<std::size_t> g_term_limit{200000};
}

std::size_t term_limit() { return g_term_limit.load(); }
void set_term_limit(std::size_t n) { g_term_limit.store(n == 0 ? 200000 : n); }

HomogPoly HomogPoly::zero(int degree) {
    HomogPoly p;
    p.degree_ = degree;
    return p;
}

HomogPoly HomogPoly::constant(const Rat& c) { return monomial({0, 0, 0}, c); }

HomogPoly HomogPoly::monomial(Exp3 e, Rat coeff) {
    HomogPoly p;
    p.degree_ = e.total();
    if (coeff != 0) p.terms_[e] = std::move(coeff);
    return p;
}

HomogPoly HomogPoly::variable(int i) {
    Exp3 e;
    e[i] = 1;
    return monomial(e, 1);
}

Exp3 HomogPoly::lead_exp() const {
    if (is_zero()) throw AllZero("lead_exp of zero polynomial");
    return terms_.begin()->first;
}

const Rat& HomogPoly::lead_coeff() const {
    if (is_zero()) throw AllZero("lead_coeff of zero polynomial");
    return terms_.begin()->second;
}

Rat HomogPoly::coeff(Exp3 e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HomogPoly::set_coeff(Exp3 e, const Rat& v) {
    if (e.total() != degree_) {
        if (terms_.empty() && v != 0) degree_ = e.total();
        else if (v != 0) throw DegreeMismatch("set_coeff breaks homogeneity");
    }
    if (v == 0) terms_.erase(e);
    else terms_[e] = v;
}

void HomogPoly::check_guard() const {
    if (terms_.size() > term_limit())
        throw ResourceLimit("term count " + std::to_string(terms_.size()) +
                            " exceeds limit " + std::to_string(term_limit()));
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

HomogPoly operator+(const HomogPoly& p, const HomogPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    if (p.degree_ != q.degree_)
        throw DegreeMismatch("add: degrees " + std::to_string(p.degree_) + " vs " +
                             std::to_string(q.degree_));
    HomogPoly r = p;
    for (const auto& [e, c] : q.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    r.check_guard();
    return r;
}

HomogPoly operator-(const HomogPoly& p, const HomogPoly& q) { return p + (-q); }

HomogPoly operator*(const HomogPoly& p, const HomogPoly& q) {
    HomogPoly r = HomogPoly::zero(p.degree_ + q.degree_);
    if (p.is_zero() || q.is_zero()) return r;
    const std::size_t limit = term_limit();
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            Exp3 e{ep.a + eq.a, ep.b + eq.b, ep.c + eq.c};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = cp * cq;
                if (r.terms_.size() > limit)
                    throw ResourceLimit("product exceeds term limit " + std::to_string(limit));
            } else {
                it->second += cp * cq;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

HomogPoly operator*(const Rat& c, const HomogPoly& p) {
    if (c == 0) return HomogPoly::zero(p.degree());
    HomogPoly r = p;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

bool operator==(const HomogPoly& p, const HomogPoly& q) {
    if (p.is_zero() && q.is_zero()) return true;
    return p.degree_ == q.degree_ && p.terms_ == q.terms_;
}

HomogPoly HomogPoly::pow(int e) const {
    if (e < 0) throw CremonaError("negative power");
    HomogPoly r = HomogPoly::constant(1);
    HomogPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

HomogPoly HomogPoly::normalized() const {
    if (is_zero()) return *this;
    Rat lc = lead_coeff();
    HomogPoly r = *this;
    for (auto& [e, c] : r.terms_) c /= lc;
    return r;
}

HomogPoly HomogPoly::derivative(int var) const {
    HomogPoly r = HomogPoly::zero(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        int k = e[var];
        if (k == 0) continue;
        Exp3 d = e;
        d[var] = k - 1;
        r.terms_[d] = c * k;
    }
    return r;
}

Rat HomogPoly::eval(const Rat& x, const Rat& y, const Rat& z) const {
    auto p = [](const Rat& v, int e) {
        Rat r = 1;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    };
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += c * p(x, e.a) * p(y, e.b) * p(z, e.c);
    return s;
}

HomogPoly HomogPoly::subst(const HomogPoly& g0, const HomogPoly& g1, const HomogPoly& g2) const {
    int d0 = is_zero() ? 0 : g0.degree();
    HomogPoly result = HomogPoly::zero(degree_ * d0);
    if (is_zero()) return result;
    auto powers = [this](const HomogPoly& g, int var) {
        int m = 0;
        for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
        std::vector<HomogPoly> pw(m + 1);
        pw[0] = HomogPoly::constant(1);
        for (int i = 1; i <= m; ++i) pw[i] = pw[i - 1] * g;
        return pw;
    };
    auto p0 = powers(g0, 0), p1 = powers(g1, 1), p2 = powers(g2, 2);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        HomogPoly t = c * (p0[e.a] * p1[e.b] * p2[e.c]);
        result = first ? t : result + t;
        first = false;
    }
    if (result.is_zero()) result = HomogPoly::zero(degree_ * d0);
    return result;
}

int HomogPoly::min_exponent(int var) const {
    if (is_zero()) throw AllZero("min_exponent of zero polynomial");
    int m = degree_;
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
}

int HomogPoly::max_exponent(int var) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
}

std::string HomogPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        bool mono = e.total() > 0;
        if (a != 1 || !mono) os << rat_to_string(a);
        const char* names[3] = {"x", "y", "z"};
        bool star = a != 1 || !mono;
        for (int v = 0; v < 3; ++v) {
            int k = e[v];
            if (k == 0) continue;
            if (!star) star = true;
            else os << "*";
            os << names[v];
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

HomogPoly add(const HomogPoly& p, const HomogPoly& q) { return p + q; }
HomogPoly mul(const HomogPoly& p, const HomogPoly& q) { return p * q; }

HomogPoly jacobian_det(const HomogPoly& f0, const HomogPoly& f1, const HomogPoly& f2) {
    if (f0.is_zero() || f1.is_zero() || f2.is_zero())
        throw AllZero("jacobian_det: zero component");
    if (f0.degree() != f1.degree() || f1.degree() != f2.degree())
        throw DegreeMismatch("jacobian_det: components of unequal degree");
    std::array<std::array<HomogPoly, 3>, 3> d;
    const HomogPoly* f[3] = {&f0, &f1, &f2};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d[i][j] = f[i]->derivative(j);
    auto minor2 = [&](int r1, int r2, int c1, int c2) {
        return d[r1][c1] * d[r2][c2] - d[r1][c2] * d[r2][c1];
    };
    HomogPoly det = d[0][0] * minor2(1, 2, 1, 2) - d[0][1] * minor2(1, 2, 0, 2) +
                    d[0][2] * minor2(1, 2, 0, 1);
    return det;
}

std::optional<HomogPoly> divide_exact(const HomogPoly& p, const HomogPoly& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return HomogPoly::zero(0);
    HomogPoly r = p;
    HomogPoly quot = HomogPoly::zero(p.degree() - q.degree());
    Exp3 lq = q.lead_exp();
    while (!r.is_zero()) {
        Exp3 lr = r.lead_exp();
        if (lr.a < lq.a || lr.b < lq.b || lr.c < lq.c) return std::nullopt;
        Exp3 m{lr.a - lq.a, lr.b - lq.b, lr.c - lq.c};
        HomogPoly t = HomogPoly::monomial(m, r.lead_coeff() / q.lead_coeff());
        quot = quot.is_zero() ? t : quot + t;
        r = r - t * q;
    }
    return quot;
}

namespace {

// --- helpers for the multivariate gcd -----------------------------------

Exp3 monomial_gcd_exp(const HomogPoly& p, const HomogPoly& q) {
    Exp3 e;
    for (int v = 0; v < 3; ++v) e[v] = std::min(p.min_exponent(v), q.min_exponent(v));
    return e;
}

HomogPoly shift_down(const HomogPoly& p, const Exp3& e) {
    HomogPoly r = HomogPoly::zero(p.degree() - e.total());
    for (const auto& [m, c] : p.terms()) r.set_coeff({m.a - e.a, m.b - e.b, m.c - e.c}, c);
    return r;
}

// Restriction of p to the projective line through two fixed generic points,
// as a binary form in (s, t).  Returns the coefficient list c[k] of s^k t^(d-k).
std::vector<Rat> line_restriction(const HomogPoly& p) {
    static const Rat P[3] = {1, 2, 5};
    static const Rat Q[3] = {3, 1, 7};
    int d = p.degree();
    std::vector<Rat> out(d + 1, Rat(0));
    // binomial expansion per term via univariate convolution
    for (const auto& [e, c] : p.terms()) {
        std::vector<Rat> acc{1};
        for (int v = 0; v < 3; ++v) {
            for (int k = 0; k < e[v]; ++k) {
                std::vector<Rat> nxt(acc.size() + 1, Rat(0));
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    nxt[i + 1] += acc[i] * P[v];
                    nxt[i] += acc[i] * Q[v];
                }
                acc.swap(nxt);
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] += c * acc[i];
    }
    return out;
}

// True when the two polynomials are certified coprime by the generic-line
// restriction; false means "inconclusive, run the full PRS".
bool probe_coprime(const HomogPoly& p, const HomogPoly& q) {
    auto rp = line_restriction(p), rq = line_restriction(q);
    auto all_zero = [](const std::vector<Rat>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
    };
    if (all_zero(rp) || all_zero(rq)) return false;
    auto low = [](const std::vector<Rat>& v) {
        std::size_t i = 0;
        while (v[i] == 0) ++i;
        return i;
    };
    auto high = [](const std::vector<Rat>& v) {
        std::size_t i = v.size() - 1;
        while (v[i] == 0) --i;
        return i;
    };
    if (low(rp) > 0 && low(rq) > 0) return false;   // common power of s
    if (high(rp) < rp.size() - 1 && high(rq) < rq.size() - 1) return false;  // of t
    UniPoly up(rp), uq(rq);
    return uni_gcd(up, uq).degree() == 0;
}

using VPoly = std::vector<HomogPoly>;  // univariate in a chosen var, coeffs var-free

int vdeg(const VPoly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}

VPoly to_vpoly(const HomogPoly& p, int var) {
    VPoly out(p.max_exponent(var) + 1);
    for (auto& c : out) c = HomogPoly::zero(0);
    for (const auto& [e, c] : p.terms()) {
        Exp3 r = e;
        int k = e[var];
        r[var] = 0;
        HomogPoly& coef = out[k];
        HomogPoly t = HomogPoly::monomial(r, c);
        coef = coef.is_zero() ? t : coef + t;
    }
    return out;
}

HomogPoly from_vpoly(const VPoly& a, int var) {
    HomogPoly r = HomogPoly::zero(0);
    bool first = true;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        HomogPoly t = a[k] * HomogPoly::variable(var).pow((int)k);
        r = first ? t : r + t;
        first = false;
    }
    return r;
}

HomogPoly coeff_divide(const HomogPoly& p, const HomogPoly& d) {
    auto q = divide_exact(p, d);
    if (!q) throw InternalInconsistency("gcd: inexact coefficient division");
    return *q;
}

VPoly vp_scale(const VPoly& a, const HomogPoly& s) {
    VPoly r = a;
    for (auto& c : r)
        if (!c.is_zero()) c = c * s;
    return r;
}

VPoly vp_divide(const VPoly& a, const HomogPoly& s) {
    VPoly r = a;
    for (auto& c : r)
        if (!c.is_zero()) c = coeff_divide(c, s);
    return r;
}

// lc(b)^(da-db+1) * a  mod  b, computed without fractions.
VPoly pseudo_rem(VPoly a, const VPoly& b) {
    int db = vdeg(b);
    const HomogPoly& lb = b[db];
    int da = vdeg(a);
    int steps = da - db + 1;  // exactly this many multiplications by lb
    for (int s = 0; s < steps; ++s) {
        int dr = vdeg(a);
        if (dr < db) {
            for (auto& c : a)
                if (!c.is_zero()) c = c * lb;
            continue;
        }
        HomogPoly la = a[dr];
        for (auto& c : a)
            if (!c.is_zero()) c = c * lb;
        for (int i = 0; i <= db; ++i) {
            if (b[i].is_zero()) continue;
            HomogPoly t = la * b[i];
            HomogPoly& dst = a[i + dr - db];
            dst = dst.is_zero() ? -t : dst - t;
        }
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

HomogPoly gcd_impl(const HomogPoly& p, const HomogPoly& q);

HomogPoly content_of(const VPoly& a) {
    HomogPoly c = HomogPoly::zero(0);
    for (const auto& t : a) {
        if (t.is_zero()) continue;
        c = c.is_zero() ? t : gcd_impl(c, t);
        if (c.is_constant()) return HomogPoly::constant(1);
    }
    return c.is_zero() ? HomogPoly::constant(1) : c;
}

HomogPoly gcd_impl(const HomogPoly& p, const HomogPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    Exp3 mono = monomial_gcd_exp(p, q);
    HomogPoly a = shift_down(p, {p.min_exponent(0), p.min_exponent(1), p.min_exponent(2)});
    HomogPoly b = shift_down(q, {q.min_exponent(0), q.min_exponent(1), q.min_exponent(2)});
    HomogPoly monop = HomogPoly::monomial(mono, 1);
    if (a.is_constant() || b.is_constant()) return monop;
    if (probe_coprime(a, b)) return monop;
    // variable of lowest maximal exponent present in both
    int var = -1, best = 0;
    for (int v = 0; v < 3; ++v) {
        int m = std::max(a.max_exponent(v), b.max_exponent(v));
        int lo = std::min(a.max_exponent(v), b.max_exponent(v));
        if (lo == 0) continue;
        if (var == -1 || m < best) {
            var = v;
            best = m;
        }
    }
    if (var == -1) {
        // no variable occurs in both with positive degree: gcd reduces to
        // contents (a is "constant" viewed in any variable of b)
        for (int v = 0; v < 3; ++v) {
            if (a.max_exponent(v) > 0 && b.max_exponent(v) == 0) {
                VPoly av = to_vpoly(a, v);
                return monop * gcd_impl(content_of(av), b);
            }
            if (b.max_exponent(v) > 0 && a.max_exponent(v) == 0) {
                VPoly bv = to_vpoly(b, v);
                return monop * gcd_impl(a, content_of(bv));
            }
        }
        return monop;
    }
    VPoly av = to_vpoly(a, var), bv = to_vpoly(b, var);
    HomogPoly ca = content_of(av), cb = content_of(bv);
    HomogPoly cont = gcd_impl(ca, cb);
    VPoly A = vp_divide(av, ca), B = vp_divide(bv, cb);
    if (vdeg(A) < vdeg(B)) std::swap(A, B);
    // subresultant PRS
    HomogPoly g = HomogPoly::constant(1), h = HomogPoly::constant(1);
    while (true) {
        int da = vdeg(A), db = vdeg(B);
        int delta = da - db;
        VPoly R = pseudo_rem(A, B);
        if (vdeg(R) < 0) break;
        if (vdeg(R) == 0) {
            B = VPoly{HomogPoly::constant(1)};
            break;
        }
        HomogPoly divisor = g * h.pow(delta);
        A = B;
        B = vp_divide(R, divisor);
        g = A[vdeg(A)];
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = coeff_divide(g.pow(delta), h.pow(delta - 1));
        }
    }
    HomogPoly prim = from_vpoly(B, var);
    HomogPoly cb2 = content_of(B);
    prim = coeff_divide(prim, cb2);
    return monop * cont * prim;
}

}  // namespace

HomogPoly gcd(const HomogPoly& p, const HomogPoly& q) {
    HomogPoly g = gcd_impl(p, q);
    return g.normalized();
}

int vanishing_order(const HomogPoly& p, int var) {
    if (p.is_zero()) throw AllZero("vanishing_order of zero polynomial");
    return p.min_exponent(var);
}

namespace {

// removes all factors `lin` from g, returning the multiplicity
int strip_factor(HomogPoly& g, const HomogPoly& lin) {
    int mult = 0;
    while (true) {
        auto q = divide_exact(g, lin);
        if (!q) break;
        g = *q;
        ++mult;
    }
    return mult;
}

}  // namespace

LinearFactorization factor_linear(const HomogPoly& p) {
    if (p.is_zero()) throw AllZero("factor_linear of zero polynomial");
    LinearFactorization out;
    HomogPoly g = p;
    for (int v = 0; v < 3; ++v) {
        int m = g.min_exponent(v);
        if (m > 0) {
            out.linear_factors.emplace_back(HomogPoly::variable(v), m);
            Exp3 e;
            e[v] = m;
            g = shift_down(g, e);
        }
    }
    if (!g.is_constant()) {
        // factors containing x, normalized x + b y + c z
        UniPoly sx = specialize_univariate(g, 0, Rat(0), Rat(1));  // g(x,0,1)
        UniPoly sy = specialize_univariate(g, 0, Rat(1), Rat(0));  // g(x,1,0)
        if (sx.degree() > 0 || sy.degree() > 0) {
            auto croots = rational_roots(sx);
            auto broots = rational_roots(sy);
            for (const Rat& rb : broots) {
                for (const Rat& rc : croots) {
                    HomogPoly lin = HomogPoly::variable(0) + (-rb) * HomogPoly::variable(1) +
                                    (-rc) * HomogPoly::variable(2);
                    int m = strip_factor(g, lin);
                    if (m > 0) out.linear_factors.emplace_back(lin.normalized(), m);
                    if (g.is_constant()) break;
                }
                if (g.is_constant()) break;
            }
        }
    }
    if (!g.is_constant()) {
        // factors y + c z
        UniPoly h = specialize_univariate(g, 1, Rat(1), Rat(1));  // g(1,y,1), univariate in y
        for (const Rat& r : rational_roots(h)) {
            HomogPoly lin = HomogPoly::variable(1) + (-r) * HomogPoly::variable(2);
            int m = strip_factor(g, lin);
            if (m > 0) out.linear_factors.emplace_back(lin.normalized(), m);
            if (g.is_constant()) break;
        }
    }
    if (g.is_constant()) {
        out.unit = g.is_zero() ? Rat(0) : g.lead_coeff();
        out.residual = HomogPoly::constant(1);
    } else {
        out.unit = g.lead_coeff();
        out.residual = g.normalized();
    }
    return out;
}

namespace {

// Bareiss fraction-free determinant over HomogPoly entries.
HomogPoly poly_det(std::vector<std::vector<HomogPoly>> m) {
    const int n = (int)m.size();
    if (n == 0) return HomogPoly::constant(1);
    int sign = 1;
    HomogPoly prev = HomogPoly::constant(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == -1) return HomogPoly::zero(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                HomogPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() && prev.lead_coeff() == 1 ? t
                                                                       : coeff_divide(t, prev);
            }
            m[i][k] = HomogPoly::zero(0);
        }
        prev = m[k][k];
    }
    HomogPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

HomogPoly resultant(const HomogPoly& p, const HomogPoly& q, int var) {
    if (p.is_zero() || q.is_zero()) throw AllZero("resultant of zero polynomial");
    int m = p.max_exponent(var), n = q.max_exponent(var);
    if (m == 0 && n == 0) return HomogPoly::constant(1);
    if (m == 0) return p.pow(n);
    if (n == 0) return q.pow(m);
    VPoly a = to_vpoly(p, var), b = to_vpoly(q, var);
    int size = m + n;
    std::vector<std::vector<HomogPoly>> s(size, std::vector<HomogPoly>(size, HomogPoly::zero(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[i][i + m - k] = a[k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[n + i][i + n - k] = b[k];
    return poly_det(std::move(s));
}

}  // namespace cremona
