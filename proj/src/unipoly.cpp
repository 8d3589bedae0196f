#include "cremona/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/homogpoly.hpp"

namespace cremona {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) {
    return c == 0 ? UniPoly() : UniPoly(std::vector<Rat>{c});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& UniPoly::lead() const {
    if (is_zero()) throw AllZero("lead of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rat& c, const UniPoly& a) {
    if (c == 0) return UniPoly();
    UniPoly r = a;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rat l = lead();
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c /= l;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<Rat> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * (int)i;
    return UniPoly(std::move(c));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + coeffs_[i];
    return r;
}

UniPoly UniPoly::shift_var() const {
    if (is_zero()) return *this;
    std::vector<Rat> c(coeffs_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
    return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeffs_[i];
        if (c == 0) continue;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << rat_to_string(c);
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void uni_divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw AllZero("division by zero polynomial");
    std::vector<Rat> rem = a.coeffs();
    int db = b.degree();
    std::vector<Rat> quot(std::max<int>(0, (int)rem.size() - db), Rat(0));
    while ((int)rem.size() - 1 >= db) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if ((int)rem.size() - 1 < db) break;
        int k = (int)rem.size() - 1 - db;
        Rat f = rem.back() / b.lead();
        quot[k] = f;
        for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.coeff(i);
    }
    q = UniPoly(std::move(quot));
    r = UniPoly(std::move(rem));
}

namespace {

// Primitive integer coefficients of a rational polynomial.
std::vector<BigInt> to_primitive_z(const UniPoly& p) {
    BigInt lcm = 1;
    for (const Rat& c : p.coeffs()) lcm = lcm / int_gcd(lcm, den(c)) * den(c);
    std::vector<BigInt> z(p.coeffs().size());
    BigInt g = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = num(p.coeffs()[i]) * (lcm / den(p.coeffs()[i]));
        g = int_gcd(g, z[i]);
    }
    if (g > 1)
        for (auto& c : z) c /= g;
    return z;
}

int zdeg(const std::vector<BigInt>& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Integer subresultant PRS; returns the primitive last nonzero remainder.
std::vector<BigInt> z_subresultant_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
    auto prim = [](std::vector<BigInt>& v) {
        BigInt g = 0;
        for (const auto& c : v) g = int_gcd(g, c);
        if (g > 1)
            for (auto& c : v) c /= g;
    };
    a.resize(zdeg(a) + 1);
    b.resize(zdeg(b) + 1);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    prim(a);
    prim(b);
    BigInt g = 1, h = 1;
    while (true) {
        int da = zdeg(a), db = zdeg(b);
        int delta = da - db;
        // pseudo remainder lc(b)^(delta+1) a mod b
        std::vector<BigInt> r = a;
        BigInt lb = b[db];
        for (int i = 0; i <= delta; ++i) {
            int dr = zdeg(r);
            if (dr < db) {
                for (auto& c : r) c *= lb;
                continue;
            }
            BigInt lr = r[dr];
            for (auto& c : r) c *= lb;
            for (int j = 0; j <= db; ++j) r[j + dr - db] -= lr * b[j];
        }
        r.resize(std::max(0, zdeg(r) + 1));
        if (r.empty()) break;
        if (zdeg(r) == 0) return {BigInt(1)};
        BigInt divisor = g * boost::multiprecision::pow(h, delta);
        a = b;
        for (auto& c : r) c /= divisor;
        b = r;
        g = a[zdeg(a)];
        if (delta == 1) h = g;
        else if (delta > 1) h = boost::multiprecision::pow(g, delta) /
                                boost::multiprecision::pow(h, delta - 1);
    }
    prim(b);
    return b;
}

}  // namespace

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto za = to_primitive_z(a), zb = to_primitive_z(b);
    auto zg = z_subresultant_gcd(za, zb);
    std::vector<Rat> c(zg.size());
    for (std::size_t i = 0; i < zg.size(); ++i) c[i] = Rat(zg[i]);
    return UniPoly(std::move(c)).monic();
}

UniPoly squarefree_part(const UniPoly& a) {
    if (a.degree() < 1) return a.monic();
    UniPoly g = uni_gcd(a, a.derivative());
    if (g.degree() == 0) return a.monic();
    UniPoly q, r;
    uni_divmod(a, g, q, r);
    if (!r.is_zero()) throw InternalInconsistency("squarefree_part: inexact division");
    return q.monic();
}

std::vector<Rat> rational_roots(const UniPoly& a) {
    std::vector<Rat> roots;
    if (a.degree() < 1) return roots;
    auto z = to_primitive_z(a);
    int low = 0;
    while (z[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    std::vector<BigInt> w(z.begin() + low, z.end());
    if (zdeg(w) >= 1) {
        auto ps = divisors(w.front());
        auto qs = divisors(w.back());
        UniPoly probe = zpoly_to_unipoly(w);
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int s = 0; s < 2; ++s) {
                    Rat cand = s ? Rat(-p, q) : Rat(p, q);
                    if (probe.eval(cand) == 0) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

UniPoly specialize_univariate(const HomogPoly& g, int var, const Rat& v1, const Rat& v2) {
    std::vector<Rat> c(g.max_exponent(var) + 1, Rat(0));
    auto p = [](const Rat& v, int e) {
        Rat r = 1;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    };
    int o1 = (var + 1) % 3, o2 = (var + 2) % 3;
    if (o1 > o2) std::swap(o1, o2);
    for (const auto& [e, coef] : g.terms())
        c[e[var]] += coef * p(v1, e[o1]) * p(v2, e[o2]);
    return UniPoly(std::move(c));
}

ZPoly zpoly_trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return zpoly_trim(std::move(c));
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return zpoly_trim(std::move(c));
}

ZPoly zpoly_neg(ZPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

bool zpoly_divides(const ZPoly& d, const ZPoly& p) {
    if (d.empty()) return p.empty();
    UniPoly q, r;
    uni_divmod(zpoly_to_unipoly(p), zpoly_to_unipoly(d), q, r);
    return r.is_zero();
}

std::string zpoly_str(const ZPoly& p, const std::string& var) {
    return zpoly_to_unipoly(p).str(var);
}

UniPoly zpoly_to_unipoly(const ZPoly& p) {
    std::vector<Rat> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rat(p[i]);
    return UniPoly(std::move(c));
}

ZPoly unipoly_to_zpoly_primitive(const UniPoly& p) {
    if (p.is_zero()) return {};
    BigInt lcm = 1;
    for (const Rat& c : p.coeffs()) lcm = lcm / int_gcd(lcm, den(c)) * den(c);
    ZPoly z(p.coeffs().size());
    BigInt g = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = num(p.coeffs()[i]) * (lcm / den(p.coeffs()[i]));
        g = int_gcd(g, z[i]);
    }
    if (g > 1)
        for (auto& c : z) c /= g;
    return z;
}

}  // namespace cremona
