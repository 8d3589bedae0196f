#include "cremona/dyngrowth.hpp"

#include <algorithm>
#include <cmath>

namespace cremona {

DegreeSequence degree_sequence(const RationalMapP2& f, int horizon) {
    if (horizon < 1) throw CremonaError("degree_sequence needs N >= 1");
    DegreeSequence seq;
    seq.map_degree = f.degree();
    seq.horizon = horizon;
    RationalMapP2 g = f;
    seq.degrees.push_back(g.degree());
    for (int n = 2; n <= horizon; ++n) {
        g = compose(f, g);
        seq.degrees.push_back(g.degree());
    }
    return seq;
}

StabilityCertificate is_algebraically_stable(const DegreeSequence& seq) {
    if (seq.horizon < 2) throw CremonaError("is_algebraically_stable needs N >= 2");
    StabilityCertificate cert;
    BigInt expect = 1;
    for (std::size_t n = 0; n < seq.degrees.size(); ++n) {
        expect *= seq.map_degree;
        if (BigInt(seq.degrees[n]) != expect) {
            cert.stable = false;
            cert.first_failing_n = (int)n;
            cert.expected = (long long)expect;
            cert.got = seq.degrees[n];
            return cert;
        }
    }
    cert.stable = true;
    return cert;
}

std::string to_string(GrowthType t) {
    switch (t) {
        case GrowthType::BOUNDED: return "BOUNDED";
        case GrowthType::LINEAR: return "LINEAR";
        case GrowthType::QUADRATIC: return "QUADRATIC";
        default: return "EXPONENTIAL";
    }
}

GrowthClass growth_classify(const DegreeSequence& seq) {
    const auto& d = seq.degrees;
    const int n = (int)d.size();
    if (n < 6) throw CremonaError("growth_classify needs N >= 6");
    GrowthClass out{GrowthType::BOUNDED, {}, {}, {}, {}};
    // exact period within the horizon
    for (int p = 1; p <= n / 2; ++p) {
        bool ok = true;
        for (int i = 0; i + p < n; ++i)
            if (d[i] != d[i + p]) {
                ok = false;
                break;
            }
        if (ok) {
            out.type = GrowthType::BOUNDED;
            out.period = p;
            return out;
        }
    }
    const int tail = n / 2;
    // exponential: tail ratios exceed 1 + eps (eps = 1/20) and are
    // non-decreasing; both comparisons are exact on rationals.  Polynomial
    // growth always has strictly decreasing tail ratios, so the monotonicity
    // test separates the two regimes even on short horizons.
    const Rat eps(1, 20);
    std::vector<Rat> ratios;
    for (int i = tail; i + 1 < n; ++i) ratios.emplace_back(d[i + 1], d[i]);
    bool expo = !ratios.empty();
    for (const Rat& r : ratios)
        if (!(r > 1 + eps)) expo = false;
    for (std::size_t i = 0; i + 1 < ratios.size() && expo; ++i)
        if (ratios[i + 1] < ratios[i]) expo = false;
    if (expo) {
        out.type = GrowthType::EXPONENTIAL;
        out.tail_ratios = ratios;
        return out;
    }
    std::vector<long long> d1, d2;
    for (int i = tail; i + 1 < n; ++i) d1.push_back(d[i + 1] - d[i]);
    for (std::size_t i = 0; i + 1 < d1.size(); ++i) d2.push_back(d1[i + 1] - d1[i]);
    out.tail_first_diff = d1;
    out.tail_second_diff = d2;
    bool const1 = std::all_of(d2.begin(), d2.end(), [](long long v) { return v == 0; });
    if (const1 && !d1.empty() && d1[0] != 0) {
        out.type = GrowthType::LINEAR;
        return out;
    }
    bool const2 = !d2.empty() && std::all_of(d2.begin(), d2.end(),
                                             [&](long long v) { return v == d2[0]; });
    if (const2 && d2[0] != 0) {
        out.type = GrowthType::QUADRATIC;
        return out;
    }
    throw InconclusiveHorizon("no growth pattern stabilizes at horizon " +
                              std::to_string(seq.horizon));
}

DynDegreeEstimate dyn_degree_estimate(const DegreeSequence& seq) {
    if (seq.horizon < 4) throw CremonaError("dyn_degree_estimate needs N >= 4");
    DynDegreeEstimate est;
    auto cert = is_algebraically_stable(seq);
    if (cert.stable) {
        est.value = (double)seq.map_degree;
        est.exact = true;
        return est;
    }
    est.value = std::pow((double)seq.degrees.back(), 1.0 / (double)seq.degrees.size());
    if (seq.degrees.size() >= 6) {
        try {
            GrowthType t = growth_classify(seq).type;
            est.tends_to_one = t != GrowthType::EXPONENTIAL;
        } catch (const InconclusiveHorizon&) {
        }
    } else if (seq.degrees.back() == 1) {
        est.tends_to_one = true;
    }
    return est;
}

QuadraticSurd QuadraticSurd::make(const Rat& p, const Rat& q, const BigInt& d) {
    if (d < 0) throw CremonaError("negative discriminant");
    if (q == 0 || d == 0) return {p, 0, 0};
    if (d == 1) return {p + q, 0, 0};
    BigInt s, f;
    split_square(d, s, f);
    if (f == 1) return {p + q * Rat(s), 0, 0};
    return {p, q * Rat(s), f};
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.disc != 0 && b.disc != 0 && a.disc != b.disc)
        throw CremonaError("incompatible quadratic surds");
    BigInt d = a.disc != 0 ? a.disc : b.disc;
    return QuadraticSurd::make(a.p * b.p + a.q * b.q * Rat(d), a.p * b.q + a.q * b.p, d);
}

QuadraticSurd QuadraticSurd::pow(int k) const {
    QuadraticSurd r = rational(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

double QuadraticSurd::to_double() const {
    return (double)p + (double)q * std::sqrt((double)disc);
}

std::string QuadraticSurd::str() const {
    if (q == 0) return rat_to_string(p);
    // common-denominator display: (a + b*sqrt(d))/c
    BigInt c = den(p) / int_gcd(den(p), den(q)) * den(q);
    BigInt a = num(p) * (c / den(p));
    BigInt b = num(q) * (c / den(q));
    BigInt ab = b < 0 ? BigInt(-b) : b;
    std::string s = "(" + a.str() + (b < 0 ? " - " : " + ") +
                    (ab == 1 ? "" : ab.str() + "*") + "sqrt(" + disc.str() + "))";
    if (c != 1) s += "/" + c.str();
    return s;
}

MonomialMap::MonomialMap(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
    long long dt = det();
    if (dt != 1 && dt != -1) throw CremonaError("monomial map needs |det| = 1");
}

MonomialMap MonomialMap::mul(const MonomialMap& o) const {
    return MonomialMap(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                       c * o.b + d * o.d);
}

QuadraticSurd monomial_dyn_degree(const MonomialMap& m) {
    long long tr = m.trace(), dt = m.det();
    if (dt == 1 && tr >= -2 && tr <= 2) return QuadraticSurd::rational(1);
    if (dt == -1 && tr == 0) return QuadraticSurd::rational(1);
    long long at = tr < 0 ? -tr : tr;
    BigInt disc = BigInt(tr) * tr - 4 * dt;
    return QuadraticSurd::make(Rat(at, 2), Rat(1, 2), disc);
}

RationalMapP2 monomial_as_p2_map(const MonomialMap& m) {
    long long e[3][3] = {{m.a, m.b, -m.a - m.b}, {m.c, m.d, -m.c - m.d}, {0, 0, 0}};
    for (int col = 0; col < 3; ++col) {
        long long lo = std::min({e[0][col], e[1][col], e[2][col]});
        for (int row = 0; row < 3; ++row) e[row][col] -= lo;
    }
    auto mono = [&](int row) {
        return HomogPoly::monomial({(int)e[row][0], (int)e[row][1], (int)e[row][2]}, 1);
    };
    return RationalMapP2::make(mono(0), mono(1), mono(2));
}

}  // namespace cremona
