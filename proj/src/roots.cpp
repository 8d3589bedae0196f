#include "cremona/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace cremona {

namespace {

ZPoly squarefree_z(const ZPoly& p) {
    UniPoly u = zpoly_to_unipoly(p);
    UniPoly sf = squarefree_part(u);
    return unipoly_to_zpoly_primitive(sf);
}

using CLD = std::complex<long double>;

CLD eval_poly(const std::vector<CLD>& c, const CLD& z) {
    CLD r = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) r = r * z + c[i];
    return r;
}

}  // namespace

std::vector<CertifiedRoot> certified_roots(const ZPoly& p_in) {
    ZPoly p = squarefree_z(p_in);
    int n = (int)p.size() - 1;
    if (n < 1) throw CremonaError("certified_roots needs a nonconstant polynomial");
    std::vector<CLD> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = (long double)(double)p[i];
    // monic normalization for the companion matrix
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    double lead = (double)p[n];
    for (int i = 0; i < n; ++i) {
        comp(i, n - 1) = -(double)p[i] / lead;
        if (i + 1 < n) comp(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    std::vector<CLD> roots(n);
    for (int i = 0; i < n; ++i)
        roots[i] = CLD((long double)es.eigenvalues()[i].real(),
                       (long double)es.eigenvalues()[i].imag());
    std::vector<CLD> dc(n);  // derivative coefficients
    for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * (long double)i;
    // Newton refinement in extended precision
    for (int iter = 0; iter < 80; ++iter) {
        long double worst = 0;
        for (auto& z : roots) {
            CLD f = eval_poly(c, z), d = eval_poly(dc, z);
            if (std::abs(d) == 0) continue;
            CLD step = f / d;
            z -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-17L) break;
    }
    // Weierstrass inclusion disks: |n * p(z_i) / (lead * prod(z_i - z_j))|
    std::vector<CertifiedRoot> out(n);
    long double lead_l = (long double)(double)p[n];
    for (int i = 0; i < n; ++i) {
        CLD prod = 1;
        for (int j = 0; j < n; ++j)
            if (j != i) prod *= roots[i] - roots[j];
        long double w = std::abs(eval_poly(c, roots[i])) / (std::abs(lead_l) * std::abs(prod));
        long double rad = (long double)n * w;
        rad = rad * 1.000001L + 1e-15L * (1 + std::abs(roots[i]));
        out[i].approx = std::complex<double>((double)roots[i].real(), (double)roots[i].imag());
        out[i].radius = (double)rad;
    }
    // the disks must be pairwise disjoint for each to isolate one root
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dist = std::abs(out[i].approx - out[j].approx);
            if (dist <= out[i].radius + out[j].radius)
                throw InternalInconsistency("root inclusion disks overlap");
        }
    return out;
}

Enclosure dominant_root(const ZPoly& p, double tol) {
    auto roots = certified_roots(p);
    Enclosure e{0.0, 0.0};
    for (const auto& r : roots) {
        double m = std::abs(r.approx);
        e.lo = std::max(e.lo, m - r.radius);
        e.hi = std::max(e.hi, m + r.radius);
    }
    if (e.width() > tol)
        throw InternalInconsistency("dominant root enclosure wider than tolerance");
    return e;
}

std::string to_string(NumberClass c) {
    switch (c) {
        case NumberClass::PISOT: return "PISOT";
        case NumberClass::SALEM: return "SALEM";
        case NumberClass::SALEM_QUADRATIC: return "SALEM_QUADRATIC";
        case NumberClass::ON_OR_INSIDE_UNIT_CIRCLE: return "ON_OR_INSIDE_UNIT_CIRCLE";
        default: return "OTHER";
    }
}

AlgebraicNumberClass salem_pisot_classify(const ZPoly& p_in, double tol,
                                          bool strict_quadratic) {
    ZPoly p = zpoly_trim(p_in);
    if (p.empty() || p.back() != 1) throw NotMonic("polynomial must be monic");
    int n = (int)p.size() - 1;
    if (n < 1) throw CremonaError("constant polynomial");
    AlgebraicNumberClass out{NumberClass::OTHER, {0, 0}, false};
    // exact palindrome test for reciprocity
    out.reciprocal = true;
    for (int i = 0; i <= n; ++i)
        if (p[i] != p[n - i]) {
            out.reciprocal = false;
            break;
        }
    auto roots = certified_roots(p);
    int outside = 0, inside = 0, on_circle = 0;
    bool dominant_real_pos = false;
    for (const auto& r : roots) {
        double m = std::abs(r.approx);
        if (m - r.radius > 1.0 + tol) {
            ++outside;
            if (std::abs(r.approx.imag()) <= r.radius && r.approx.real() > 1.0)
                dominant_real_pos = true;
        } else if (m + r.radius < 1.0 - tol) {
            ++inside;
        } else if (std::abs(m - 1.0) <= tol + r.radius) {
            ++on_circle;
        } else {
            throw InternalInconsistency("root modulus not resolved at tolerance");
        }
    }
    Enclosure dom{0, 0};
    for (const auto& r : roots) {
        double m = std::abs(r.approx);
        dom.lo = std::max(dom.lo, m - r.radius);
        dom.hi = std::max(dom.hi, m + r.radius);
    }
    out.dominant = dom;
    int deg = (int)roots.size();
    if (outside == 0) {
        out.cls = NumberClass::ON_OR_INSIDE_UNIT_CIRCLE;
    } else if (outside == 1 && dominant_real_pos && inside == 1 && out.reciprocal &&
               deg == 2) {
        // reciprocal quadratic (lambda, 1/lambda): the degenerate Salem
        // pattern, labeled as such rather than falling through to PISOT
        out.cls = strict_quadratic ? NumberClass::OTHER : NumberClass::SALEM_QUADRATIC;
    } else if (outside == 1 && dominant_real_pos && inside == deg - 1) {
        out.cls = NumberClass::PISOT;
    } else if (outside == 1 && dominant_real_pos && inside == 1 && out.reciprocal &&
               on_circle == deg - 2 && deg >= 4) {
        out.cls = NumberClass::SALEM;
    } else {
        out.cls = NumberClass::OTHER;
    }
    return out;
}

}  // namespace cremona
