#include "cremona/bsurface.hpp"

#include <algorithm>

namespace cremona {

PicLattice PicLattice::proper(int n) {
    PicLattice lat;
    lat.n = n;
    lat.gram.assign(n + 1, std::vector<BigInt>(n + 1, 0));
    lat.strict_in_total.assign(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        lat.gram[i][i] = i == 0 ? 1 : -1;
        lat.strict_in_total[i][i] = 1;
    }
    return lat;
}

PicVector PicVector::unit(int rank, int i) {
    PicVector v;
    v.c.assign(rank, 0);
    v.c[i] = 1;
    return v;
}

PicMatrix PicMatrix::identity(int n) {
    PicMatrix r;
    r.m.assign(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) r.m[i][i] = 1;
    return r;
}

PicMatrix operator*(const PicMatrix& a, const PicMatrix& b) {
    int n = a.size();
    if (n != b.size()) throw LatticeMismatch("matrix sizes differ");
    PicMatrix r;
    r.m.assign(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) r.m[i][j] += a.m[i][k] * b.m[k][j];
    return r;
}

PicVector PicMatrix::apply(const PicVector& v) const {
    if ((int)v.c.size() != size()) throw LatticeMismatch("vector/matrix size mismatch");
    PicVector r;
    r.c.assign(size(), 0);
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) r.c[i] += m[i][j] * v.c[j];
    return r;
}

BigInt PicMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < size(); ++i) t += m[i][i];
    return t;
}

BigInt intersection(const PicVector& u, const PicVector& v, const PicLattice& lat) {
    if ((int)u.c.size() != lat.rank() || (int)v.c.size() != lat.rank())
        throw LatticeMismatch("vectors do not live in the given lattice");
    BigInt s = 0;
    for (int i = 0; i < lat.rank(); ++i)
        for (int j = 0; j < lat.rank(); ++j) s += u.c[i] * lat.gram[i][j] * v.c[j];
    return s;
}

PicMatrix pullback_matrix(const std::vector<PicVector>& images) {
    if (images.empty()) throw LatticeMismatch("no images given");
    int n = (int)images.size();
    for (const auto& v : images)
        if ((int)v.c.size() != n) throw LatticeMismatch("one image per basis vector required");
    PicMatrix r;
    r.m.assign(n, std::vector<BigInt>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) r.m[i][j] = images[j].c[i];
    return r;
}

bool preserves_intersection_form(const PicMatrix& m, const PicLattice& lat) {
    int n = m.size();
    if (n != lat.rank()) throw LatticeMismatch("matrix does not act on the lattice");
    // M^T G M == G
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigInt s = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += m.m[k][i] * lat.gram[k][l] * m.m[l][j];
            if (s != lat.gram[i][j]) return false;
        }
    return true;
}

ZPoly char_poly(const PicMatrix& mat) {
    const int n = mat.size();
    // Faddeev-LeVerrier: exact over the integers, divisions are exact by
    // Newton's identities.
    ZPoly c(n + 1, BigInt(0));
    c[n] = 1;
    PicMatrix b = mat;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            PicMatrix shifted = b;
            for (int i = 0; i < n; ++i) shifted.m[i][i] += c[n - k + 1];
            b = mat * shifted;
        }
        BigInt t = b.trace();
        if (t % k != 0) throw InternalInconsistency("Faddeev-LeVerrier division not exact");
        c[n - k] = -t / k;
    }
    return c;
}

BigInt periodic_count(const PicMatrix& m, int n) {
    if (n < 1) throw CremonaError("periodic_count needs n >= 1");
    PicMatrix p = PicMatrix::identity(m.size());
    for (int i = 0; i < n; ++i) p = p * m;
    return 2 + p.trace();
}

// ---------- blow-up towers -------------------------------------------------

namespace {

Poly2 translate(const Poly2& g, const Rat& c1, const Rat& c2) {
    return g.subst(Poly2::var_u() + Poly2::constant(c1), Poly2::var_v() + Poly2::constant(c2));
}

int mult_at_origin(const Poly2& g) {
    if (g.is_zero()) throw InternalInconsistency("multiplicity of zero polynomial");
    int m = g.total_degree();
    for (const auto& [k, c] : g.terms()) m = std::min(m, k.first + k.second);
    return m;
}

// substitution of the blow-up chart map into g, i.e. g(center + chart(t,w))
Poly2 pull_through(const Poly2& g, const BlowupStep& s) {
    Poly2 t = Poly2::var_u(), w = Poly2::var_v();
    Poly2 a, b;
    if (s.kind == ChartKind::FirstExceptional) {
        a = Poly2::constant(s.c1) + t;
        b = Poly2::constant(s.c2) + t * w;
    } else {
        a = Poly2::constant(s.c1) + t * w;
        b = Poly2::constant(s.c2) + w;
    }
    return g.subst(a, b);
}

Poly2 strip_exceptional(const Poly2& g, ChartKind kind, int order) {
    return kind == ChartKind::FirstExceptional ? g.shift_down_u(order) : g.shift_down_v(order);
}

int order_along(const Poly2& g, ChartKind kind) {
    return kind == ChartKind::FirstExceptional ? g.min_exp_u() : g.min_exp_v();
}

}  // namespace

void BlowupTower::add_step(const Rat& c1, const Rat& c2, ChartKind kind, std::string label) {
    BlowupStep step{c1, c2, kind, label.empty() ? "E" + std::to_string(size() + 1) : label};
    int j = size();  // 0-based index of the new step
    std::vector<int> mults(j, 0);
    std::vector<Poly2> next_strict;
    for (int k = 0; k < j; ++k) {
        const Poly2& eq = strict_[j - 1][k];
        if (eq.is_zero()) throw InternalInconsistency("tracked curve equation vanished");
        Poly2 local = translate(eq, c1, c2);
        int m = local.coeff(0, 0) != 0 ? 0 : mult_at_origin(local);
        mults[k] = m;
        Poly2 pulled = pull_through(eq, step);
        next_strict.push_back(m > 0 ? strip_exceptional(pulled, kind, m) : pulled);
    }
    // the new exceptional curve in its own chart
    next_strict.push_back(kind == ChartKind::FirstExceptional ? Poly2::var_u()
                                                              : Poly2::var_v());
    steps_.push_back(step);
    mult_.push_back(mults);
    strict_.push_back(std::move(next_strict));
}

std::array<Poly2, 3> BlowupTower::chart_to_p2(int j) const {
    if (j < 0 || j > size()) throw ChartDomainError("chart index out of range");
    Poly2 a = Poly2::var_u(), b = Poly2::var_v();
    for (int i = j; i >= 1; --i) {
        const BlowupStep& s = steps_[i - 1];
        Poly2 na, nb;
        if (s.kind == ChartKind::FirstExceptional) {
            na = Poly2::constant(s.c1) + a;
            nb = Poly2::constant(s.c2) + a * b;
        } else {
            na = Poly2::constant(s.c1) + a * b;
            nb = Poly2::constant(s.c2) + b;
        }
        a = na;
        b = nb;
    }
    Poly2 one = Poly2::constant(1);
    switch (root_) {
        case RootChart::Z1: return {a, b, one};
        case RootChart::X1: return {one, a, b};
        default: return {a, one, b};
    }
}

int BlowupTower::exceptional_var(int j) const {
    if (j < 1 || j > size()) throw ChartDomainError("chart index out of range");
    return steps_[j - 1].kind == ChartKind::FirstExceptional ? 0 : 1;
}

int BlowupTower::incidence(int j, int k) const {
    if (j < 1 || j > size() || k < 1 || k >= j) throw ChartDomainError("bad incidence index");
    return mult_[j - 1][k - 1];
}

PicLattice BlowupTower::lattice() const {
    int n = size();
    PicLattice lat;
    lat.n = n;
    // totals in terms of totals are the identity; strict classes subtract the
    // later totals through their centers: S_k = T_k - sum_j mult(j,k) T_j
    std::vector<std::vector<BigInt>> strict(n + 1, std::vector<BigInt>(n + 1, 0));
    strict[0][0] = 1;
    for (int k = 1; k <= n; ++k) {
        strict[k][k] = 1;
        for (int j = k + 1; j <= n; ++j) strict[j][k] = -BigInt(mult_[j - 1][k - 1]);
    }
    lat.strict_in_total = strict;
    lat.gram.assign(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            BigInt s = 0;
            for (int k = 0; k <= n; ++k) {
                BigInt sign = k == 0 ? 1 : -1;
                s += sign * strict[k][i] * strict[k][j];
            }
            lat.gram[i][j] = s;
        }
    return lat;
}

PicVector BlowupTower::curve_class(const HomogPoly& curve) const {
    if (curve.is_zero()) throw AllZero("curve_class of zero curve");
    // dehomogenize into the root chart
    Poly2 eq;
    for (const auto& [e, c] : curve.terms()) {
        int i, j;
        switch (root_) {
            case RootChart::Z1: i = e.a; j = e.b; break;
            case RootChart::X1: i = e.b; j = e.c; break;
            default: i = e.a; j = e.c; break;
        }
        eq = eq + Poly2::monomial(i, j, c);
    }
    int n = size();
    std::vector<int> mult(n + 1, 0);
    Poly2 cur = eq;
    for (int j = 1; j <= n; ++j) {
        const BlowupStep& s = steps_[j - 1];
        if (cur.is_zero()) throw ChartDomainError("curve vanishes on a whole chart");
        Poly2 local = translate(cur, s.c1, s.c2);
        int m = local.coeff(0, 0) != 0 ? 0 : mult_at_origin(local);
        mult[j] = m;
        Poly2 pulled = pull_through(cur, s);
        cur = m > 0 ? strip_exceptional(pulled, s.kind, m) : pulled;
    }
    // class = deg * L - sum mult_j T_j, converted to the strict basis via
    // T_k = S_k + sum_{j>k} mult(j,k) T_j
    std::vector<std::vector<BigInt>> total_in_strict(n + 1, std::vector<BigInt>(n + 1, 0));
    total_in_strict[0][0] = 1;
    for (int k = n; k >= 1; --k) {
        std::vector<BigInt> acc(n + 1, 0);
        acc[k] = 1;
        for (int j = k + 1; j <= n; ++j) {
            BigInt m = mult_[j - 1][k - 1];
            if (m == 0) continue;
            for (int i = 0; i <= n; ++i) acc[i] += m * total_in_strict[i][j];
        }
        for (int i = 0; i <= n; ++i) total_in_strict[i][k] = acc[i];
    }
    PicVector out;
    out.c.assign(n + 1, 0);
    out.c[0] = curve.degree();
    for (int j = 1; j <= n; ++j) {
        if (mult[j] == 0) continue;
        for (int i = 0; i <= n; ++i) out.c[i] -= BigInt(mult[j]) * total_in_strict[i][j];
    }
    return out;
}

namespace {

Poly2 eval_homog(const HomogPoly& f, const std::array<Poly2, 3>& at) {
    int mx = f.max_exponent(0), my = f.max_exponent(1), mz = f.max_exponent(2);
    std::vector<Poly2> px(mx + 1), py(my + 1), pz(mz + 1);
    px[0] = py[0] = pz[0] = Poly2::constant(1);
    for (int i = 1; i <= mx; ++i) px[i] = px[i - 1] * at[0];
    for (int i = 1; i <= my; ++i) py[i] = py[i - 1] * at[1];
    for (int i = 1; i <= mz; ++i) pz[i] = pz[i - 1] * at[2];
    Poly2 r;
    for (const auto& [e, c] : f.terms()) r = r + c * (px[e.a] * py[e.b] * pz[e.c]);
    return r;
}

}  // namespace

std::vector<int> vanishing_orders(const RationalMapP2& f, const HomogPoly& linear_form,
                                  const BlowupTower& tower) {
    if (linear_form.degree() != 1) throw DegreeMismatch("linear form of degree 1 required");
    std::vector<int> orders;
    for (int j = 1; j <= tower.size(); ++j) {
        auto chart = tower.chart_to_p2(j);
        std::array<Poly2, 3> comp;
        for (int i = 0; i < 3; ++i) comp[i] = eval_homog(f[i], chart);
        Poly2 pulled = linear_form.coeff({1, 0, 0}) * comp[0] +
                       linear_form.coeff({0, 1, 0}) * comp[1] +
                       linear_form.coeff({0, 0, 1}) * comp[2];
        if (pulled.is_zero())
            throw ChartDomainError("pulled-back form vanishes identically in chart");
        orders.push_back(tower.exceptional_var(j) == 0 ? pulled.min_exp_u()
                                                       : pulled.min_exp_v());
    }
    return orders;
}

std::vector<int> vanishing_orders_generic(const RationalMapP2& f, const BlowupTower& tower) {
    // order of a generic linear combination = min of the component orders
    std::vector<int> orders;
    for (int j = 1; j <= tower.size(); ++j) {
        auto chart = tower.chart_to_p2(j);
        int best = -1;
        for (int i = 0; i < 3; ++i) {
            Poly2 comp = eval_homog(f[i], chart);
            if (comp.is_zero()) continue;
            int o = tower.exceptional_var(j) == 0 ? comp.min_exp_u() : comp.min_exp_v();
            best = best < 0 ? o : std::min(best, o);
        }
        if (best < 0) throw ChartDomainError("map vanishes identically in chart");
        orders.push_back(best);
    }
    return orders;
}

BlowupTower tau_resolution_tower() {
    BlowupTower t(RootChart::Z1);
    // blow up (0:0:1); chart (xi, s) with (x, y) = (xi s, s), E1 = {s = 0}
    t.add_step(0, 0, ChartKind::SecondExceptional, "E1");
    // blow up (0,0) = E1 cap strict {x=0}; chart (u, v) with (xi, s) = (u, uv)
    t.add_step(0, 0, ChartKind::FirstExceptional, "E2");
    // blow up (0,1) on E2; chart (eta, mu) with (u, v) = (eta, 1 + eta mu)
    t.add_step(0, 1, ChartKind::FirstExceptional, "E3");
    return t;
}

ZPoly bk_char_poly(int n) {
    if (n < 1) throw CremonaError("bk_char_poly needs n >= 1");
    ZPoly cubic{-1, -1, 0, 1};  // x^3 - x - 1
    ZPoly shifted(n + 1, BigInt(0));
    shifted.push_back(1);  // x^{n+1}
    ZPoly head = zpoly_mul(shifted, cubic);
    ZPoly tail{-1, 0, 1, 1};  // x^3 + x^2 - 1
    return zpoly_add(head, tail);
}

PicMatrix bk_pic_matrix(int n) {
    if (n < 1) throw CremonaError("bk_pic_matrix needs n >= 1");
    // Basis (L, E1, E2, F0..Fn) on the plane blown up at p1, p2 and the
    // orbit q, f(q), ..., f^n(q) = m.  Images:
    //   L  -> 2L - E1 - E2 - F0        (conic through p1, p2, q)
    //   E1 -> {z=0} = L - E1 - F0      (through p1 and q)
    //   E2 -> {x=0} = L - E1 - E2      (through p1 and p2)
    //   Fj -> F_{j+1}                  (orbit shift, j < n)
    //   Fn -> {ax+y=0} = L - E2 - F0   (through p2 and q)
    int rank = n + 4;
    auto vec = [&](std::initializer_list<std::pair<int, int>> entries) {
        PicVector v;
        v.c.assign(rank, 0);
        for (auto [i, val] : entries) v.c[i] = val;
        return v;
    };
    std::vector<PicVector> images;
    images.push_back(vec({{0, 2}, {1, -1}, {2, -1}, {3, -1}}));
    images.push_back(vec({{0, 1}, {1, -1}, {3, -1}}));
    images.push_back(vec({{0, 1}, {1, -1}, {2, -1}}));
    for (int j = 0; j < n; ++j) images.push_back(PicVector::unit(rank, 4 + j));
    images.push_back(vec({{0, 1}, {2, -1}, {3, -1}}));
    return pullback_matrix(images);
}

PicMatrix bk_y_matrix() {
    PicMatrix m;
    m.m = {{2, 1, 1}, {-1, -1, -1}, {-1, 0, -1}};
    return m;
}

}  // namespace cremona
