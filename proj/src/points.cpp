#include "cremona/points.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cremona {

ProjPointQ::ProjPointQ(const Rat& x, const Rat& y, const Rat& z) {
    BigInt l = 1;
    for (const Rat* v : {&x, &y, &z}) l = l / int_gcd(l, den(*v)) * den(*v);
    c = {num(x) * (l / den(x)), num(y) * (l / den(y)), num(z) * (l / den(z))};
    BigInt g = int_gcd(int_gcd(c[0], c[1]), c[2]);
    if (g == 0) throw AllZero("projective point with all coordinates zero");
    for (auto& v : c) v /= g;
    for (const auto& v : c) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : c) w = -w;
        break;
    }
}

std::string ProjPointQ::str() const {
    return "(" + c[0].str() + " : " + c[1].str() + " : " + c[2].str() + ")";
}

namespace {

// ---------- pairwise-coprime subsystem decomposition ---------------------

using System = std::vector<HomogPoly>;

bool is_nonzero_constant(const HomogPoly& p) { return !p.is_zero() && p.is_constant(); }

std::vector<System> decompose(System start) {
    std::vector<System> out;
    std::vector<System> work{std::move(start)};
    while (!work.empty()) {
        System s = std::move(work.back());
        work.pop_back();
        if (std::any_of(s.begin(), s.end(), is_nonzero_constant)) continue;
        bool split = false;
        for (std::size_t i = 0; i < s.size() && !split; ++i) {
            for (std::size_t j = i + 1; j < s.size() && !split; ++j) {
                HomogPoly h = gcd(s[i], s[j]);
                if (h.is_constant()) continue;
                split = true;
                System pair{h};
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i && k != j) pair.push_back(s[k]);
                if (pair.size() >= 2) work.push_back(std::move(pair));
                // else: a two-form system split on its only pair cannot
                // happen, the caller guarantees coprimality there
                System reduced = s;
                reduced[i] = *divide_exact(s[i], h);
                reduced[j] = *divide_exact(s[j], h);
                work.push_back(std::move(reduced));
            }
        }
        if (!split) out.push_back(std::move(s));
    }
    return out;
}

// ---------- shear transforms ---------------------------------------------

struct Shear {
    Rat s, r;  // x -> x + s z, y -> y + r z
};

HomogPoly apply_shear(const HomogPoly& p, const Shear& t) {
    return p.subst(HomogPoly::variable(0) + t.s * HomogPoly::variable(2),
                   HomogPoly::variable(1) + t.r * HomogPoly::variable(2),
                   HomogPoly::variable(2));
}

ProjPointQ unshear_point(const Rat& x, const Rat& y, const Rat& z, const Shear& t) {
    return ProjPointQ(x + t.s * z, y + t.r * z, z);
}

// Finds a shear such that no form vanishes at the image of (0:0:1),
// i.e. p(s, r, 1) != 0 for every p.  Deterministic spiral search.
Shear pick_shear(const std::vector<System>& subsystems, int skip) {
    std::vector<Rat> cand{0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7};
    int found = 0;
    for (const Rat& s : cand) {
        for (const Rat& r : cand) {
            bool ok = true;
            for (const auto& sys : subsystems) {
                for (const auto& p : sys) {
                    if (p.eval(s, r, 1) == 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok && found++ == skip) return {s, r};
        }
    }
    throw InternalInconsistency("no admissible shear found");
}

// ---------- arithmetic in (Q[u]/W)[z] -------------------------------------

using ZX = std::vector<UniPoly>;  // polynomial in z with Q[u] coefficients

int zxdeg(const ZX& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}

UniPoly mod_w(const UniPoly& a, const UniPoly& w) {
    UniPoly q, r;
    uni_divmod(a, w, q, r);
    return r;
}

ZX zx_mod(ZX a, const UniPoly& w) {
    for (auto& c : a) c = mod_w(c, w);
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

ZX zx_mul(const ZX& a, const ZX& b, const UniPoly& w) {
    if (a.empty() || b.empty()) return {};
    ZX c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return zx_mod(std::move(c), w);
}

ZX zx_derivative(const ZX& a) {
    if (a.size() <= 1) return {};
    ZX d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = Rat((int)i) * a[i];
    return d;
}

// extended gcd over Q[u]: returns g with s*a + t*b = g (g monic)
UniPoly uni_extgcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        UniPoly q, r;
        uni_divmod(r0, r1, q, r);
        UniPoly ns = s0 - q * s1, nt = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if (r0.is_zero()) {
        s = UniPoly();
        t = UniPoly();
        return r0;
    }
    Rat l = r0.lead();
    s = Rat(1) / l * s0;
    t = Rat(1) / l * t0;
    return r0.monic();
}

UniPoly mod_inverse(const UniPoly& a, const UniPoly& w) {
    UniPoly s, t;
    UniPoly g = uni_extgcd(a, w, s, t);
    if (g.degree() != 0) throw InternalInconsistency("mod_inverse of non-unit");
    return mod_w(s, w);
}

struct Piece {
    UniPoly w;  // squarefree modulus piece
    ZX g;       // monic gcd of the fiber system modulo w (possibly constant)
};

// D5-style gcd of a list of z-polynomials modulo w.  Splits w whenever a
// leading coefficient is a proper zero divisor.  Results are monic in z.
void d5_gcd_list(std::vector<ZX> polys, UniPoly w, std::vector<Piece>& out) {
    for (auto& p : polys) p = zx_mod(std::move(p), w);
    polys.erase(std::remove_if(polys.begin(), polys.end(),
                               [](const ZX& p) { return zxdeg(p) < 0; }),
                polys.end());
    if (polys.empty())
        throw InternalInconsistency("fiber system vanishes identically");
    // running gcd: A
    ZX A = polys[0];
    for (std::size_t idx = 1; idx < polys.size(); ++idx) {
        ZX B = polys[idx];
        // Euclid on (A, B) mod w
        while (true) {
            if (zxdeg(B) < 0) break;
            if (zxdeg(B) == 0 || zxdeg(A) == 0) {
                // need leading-coeff invertibility to certify a unit gcd
                const ZX& C = zxdeg(B) == 0 ? B : A;
                UniPoly lc = C[0];
                UniPoly g = uni_gcd(lc, w);
                if (g.degree() == 0) {
                    A = ZX{UniPoly::constant(1)};
                    B = ZX{};
                    break;
                }
                if (g.degree() == w.degree()) {
                    // constant is zero mod w: drop it
                    if (zxdeg(B) == 0) B = ZX{};
                    else {
                        A = B;
                        B = ZX{};
                    }
                    break;
                }
                // split
                UniPoly q, r;
                uni_divmod(w, g, q, r);
                d5_gcd_list(polys, g, out);
                d5_gcd_list(polys, q.monic(), out);
                return;
            }
            if (zxdeg(A) < zxdeg(B)) std::swap(A, B);
            UniPoly lb = B[zxdeg(B)];
            UniPoly g = uni_gcd(lb, w);
            if (g.degree() == w.degree()) {
                // leading coefficient vanishes identically: strip it
                B.pop_back();
                B = zx_mod(std::move(B), w);
                continue;
            }
            if (g.degree() > 0) {
                UniPoly q, r;
                uni_divmod(w, g, q, r);
                d5_gcd_list(polys, g, out);
                d5_gcd_list(polys, q.monic(), out);
                return;
            }
            // invertible: make B monic and reduce A mod B
            UniPoly inv = mod_inverse(lb, w);
            ZX Bm = B;
            for (auto& c : Bm) c = mod_w(c * inv, w);
            // A mod Bm (z-division, monic divisor)
            ZX R = A;
            int db = zxdeg(Bm);
            while (zxdeg(R) >= db) {
                int dr = zxdeg(R);
                UniPoly f = R[dr];
                for (int i = 0; i <= db; ++i) {
                    R[dr - db + i] = mod_w(R[dr - db + i] - f * Bm[i], w);
                }
                while (!R.empty() && R.back().is_zero()) R.pop_back();
            }
            A = Bm;
            B = std::move(R);
        }
        if (zxdeg(A) == 0) break;  // unit gcd already
    }
    // normalize A monic (split further if its lead is a zero divisor)
    while (true) {
        if (zxdeg(A) <= 0) {
            out.push_back({std::move(w), ZX{UniPoly::constant(1)}});
            return;
        }
        UniPoly la = A[zxdeg(A)];
        UniPoly g = uni_gcd(la, w);
        if (g.degree() == 0) {
            UniPoly inv = mod_inverse(la, w);
            for (auto& c : A) c = mod_w(c * inv, w);
            out.push_back({std::move(w), std::move(A)});
            return;
        }
        if (g.degree() == w.degree()) {
            A.pop_back();
            A = zx_mod(std::move(A), w);
            continue;
        }
        UniPoly q, r;
        uni_divmod(w, g, q, r);
        std::vector<ZX> single{A};
        d5_gcd_list(single, g, out);
        d5_gcd_list(single, q.monic(), out);
        return;
    }
}

// degree of gcd(p, p') mod w, accumulated per split piece
void d5_sqfree_defect(const ZX& p, const UniPoly& w,
                      std::vector<std::pair<UniPoly, int>>& out) {
    std::vector<Piece> pieces;
    std::vector<ZX> pair{p, zx_derivative(p)};
    d5_gcd_list(pair, w, pieces);
    for (auto& pc : pieces) out.emplace_back(pc.w, std::max(0, zxdeg(pc.g)));
}

// ---------- per-projection registries -------------------------------------

struct Registries {
    // key: rational projection u0 (point (u0 : 1)), plus one slot for (1:0)
    std::map<Rat, std::vector<UniPoly>> rational_fibers;
    std::vector<UniPoly> infinity_fibers;  // projection (1:0)
    // algebraic projections: (squarefree modulus W, monic fiber gcd in z)
    std::vector<std::pair<UniPoly, ZX>> clusters;
};

UniPoly fiber_at(const HomogPoly& p, const Rat& x0, const Rat& y0) {
    return specialize_univariate(p, 2, x0, y0);  // univariate in z
}

// z-polynomial with Q[u] coefficients from p(u, 1, z)
ZX lift_fiber(const HomogPoly& p) {
    ZX out(p.max_exponent(2) + 1);
    std::vector<std::vector<Rat>> cs(out.size());
    for (auto& v : cs) v.assign(p.degree() + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) cs[e.c][e.a] += c;  // y := 1
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = UniPoly(cs[i]);
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

void process_subsystem(const System& sys, Registries& reg) {
    // fiber over the projection (1:0)
    {
        std::vector<UniPoly> fibers;
        for (const auto& p : sys) fibers.push_back(fiber_at(p, 1, 0));
        UniPoly g = fibers[0];
        for (std::size_t i = 1; i < fibers.size(); ++i) g = uni_gcd(g, fibers[i]);
        if (g.degree() >= 1) reg.infinity_fibers.push_back(g);
    }
    // eliminant in the (x : y) projection
    HomogPoly elim;
    if (sys.size() == 2) {
        elim = resultant(sys[0], sys[1], 2);
    } else {
        HomogPoly r01 = resultant(sys[0], sys[1], 2);
        HomogPoly r02 = resultant(sys[0], sys[2], 2);
        elim = gcd(r01, r02);
    }
    if (elim.is_zero()) throw InternalInconsistency("vanishing eliminant");
    if (elim.is_constant()) return;  // no zeros with y != 0 beyond (1:0) fiber
    UniPoly r = specialize_univariate(elim, 0, Rat(1), Rat(0));  // u = x at y=1
    UniPoly sq = squarefree_part(r);
    if (sq.degree() < 1) return;
    UniPoly w = sq;
    for (const Rat& root : rational_roots(sq)) {
        UniPoly lin({-root, Rat(1)});
        UniPoly q, rem;
        uni_divmod(w, lin, q, rem);
        if (!rem.is_zero()) throw InternalInconsistency("root division failed");
        w = q;
        // exact fiber over the rational projection (root : 1)
        UniPoly g;
        bool first = true;
        for (const auto& p : sys) {
            UniPoly f = fiber_at(p, root, 1);
            g = first ? f : uni_gcd(g, f);
            first = false;
        }
        if (g.degree() >= 1) reg.rational_fibers[root].push_back(g);
    }
    if (w.degree() >= 1) {
        std::vector<ZX> fibers;
        for (const auto& p : sys) fibers.push_back(lift_fiber(p));
        std::vector<Piece> pieces;
        d5_gcd_list(std::move(fibers), w.monic(), pieces);
        for (auto& pc : pieces)
            if (zxdeg(pc.g) >= 1) reg.clusters.emplace_back(pc.w, pc.g);
    }
}

// ---------- final counting -------------------------------------------------

long count_clusters(const std::vector<std::pair<UniPoly, ZX>>& clusters) {
    if (clusters.empty()) return 0;
    // gcd-free basis of the moduli
    std::vector<UniPoly> basis;
    std::vector<UniPoly> queue;
    for (const auto& [w, g] : clusters) queue.push_back(w);
    while (!queue.empty()) {
        UniPoly f = queue.back().monic();
        queue.pop_back();
        if (f.degree() < 1) continue;
        bool coprime = true;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            UniPoly g = uni_gcd(f, basis[i]);
            if (g.degree() >= 1) {
                UniPoly b = basis[i];
                basis.erase(basis.begin() + i);
                UniPoly q, r;
                uni_divmod(b, g, q, r);
                if (q.degree() >= 1) queue.push_back(q);
                queue.push_back(g);
                uni_divmod(f, g, q, r);
                if (q.degree() >= 1) queue.push_back(q);
                coprime = false;
                break;
            }
        }
        if (coprime) basis.push_back(f);
    }
    long total = 0;
    for (const auto& b : basis) {
        // product of all fibers living over this basis piece
        ZX prod{UniPoly::constant(1)};
        bool any = false;
        for (const auto& [w, g] : clusters) {
            UniPoly q, r;
            uni_divmod(w, b, q, r);
            if (!r.is_zero()) continue;
            ZX gb = zx_mod(g, b);
            if (zxdeg(gb) < 1) continue;
            prod = zx_mul(prod, gb, b);
            any = true;
        }
        if (!any) continue;
        int dp = zxdeg(prod);
        std::vector<std::pair<UniPoly, int>> defects;
        d5_sqfree_defect(prod, b, defects);
        for (const auto& [piece, ddef] : defects) total += (long)piece.degree() * (dp - ddef);
    }
    return total;
}

PointCount run_count(const std::vector<System>& subsystems, const Shear& t) {
    Registries reg;
    for (const auto& sys : subsystems) {
        System sheared;
        sheared.reserve(sys.size());
        for (const auto& p : sys) sheared.push_back(apply_shear(p, t));
        process_subsystem(sheared, reg);
    }
    PointCount out;
    std::set<ProjPointQ> rpoints;
    long alg = 0;
    auto handle_fiber_group = [&](const std::vector<UniPoly>& fibers, const Rat& x0,
                                  const Rat& y0) {
        UniPoly prod = UniPoly::constant(1);
        for (const auto& f : fibers) prod = prod * f;
        UniPoly sq = squarefree_part(prod);
        auto roots = rational_roots(sq);
        for (const Rat& z0 : roots) rpoints.insert(unshear_point(x0, y0, z0, t));
        alg += sq.degree() - (long)roots.size();
    };
    if (!reg.infinity_fibers.empty()) handle_fiber_group(reg.infinity_fibers, 1, 0);
    for (const auto& [u0, fibers] : reg.rational_fibers) handle_fiber_group(fibers, u0, 1);
    alg += count_clusters(reg.clusters);
    out.rational.assign(rpoints.begin(), rpoints.end());
    out.algebraic_count = alg;
    return out;
}

}  // namespace

PointCount common_zeros(const std::vector<HomogPoly>& system, bool crosscheck) {
    System forms;
    for (const auto& p : system)
        if (!p.is_zero()) forms.push_back(p);
    if (forms.size() < 2)
        throw InternalInconsistency("common_zeros needs at least two nonzero forms");
    for (const auto& p : forms)
        if (is_nonzero_constant(p)) return {};
    HomogPoly g = forms[0];
    for (std::size_t i = 1; i < forms.size(); ++i) g = gcd(g, forms[i]);
    if (!g.is_constant())
        throw InternalInconsistency("common zero locus is not finite");
    auto subsystems = decompose(forms);
    Shear t0 = pick_shear(subsystems, 0);
    PointCount first = run_count(subsystems, t0);
    if (crosscheck) {
        Shear t1 = pick_shear(subsystems, 1);
        PointCount second = run_count(subsystems, t1);
        if (first.total() != second.total() ||
            first.rational.size() != second.rational.size() ||
            !std::equal(first.rational.begin(), first.rational.end(), second.rational.begin()))
            throw InternalInconsistency("point counts disagree across coordinate frames");
    }
    return first;
}

}  // namespace cremona
