#ifndef CREMONA_ROOTS_HPP
#define CREMONA_ROOTS_HPP

#include <complex>
#include <string>
#include <vector>

#include "cremona/unipoly.hpp"

namespace cremona {

struct Enclosure {
    double lo = 0.0, hi = 0.0;
    double width() const { return hi - lo; }
};

struct CertifiedRoot {
    std::complex<double> approx;
    double radius;  // disk certified to contain exactly one root
};

// Certified approximations of all roots of the squarefree part: companion
// matrix eigenvalues seed Newton refinement in extended precision, then each
// root gets a Weierstrass-style inclusion disk.  Disks are pairwise disjoint.
std::vector<CertifiedRoot> certified_roots(const ZPoly& p);

// Enclosure of the maximal root modulus with width <= tol.
Enclosure dominant_root(const ZPoly& p, double tol = 1e-9);

enum class NumberClass { PISOT, SALEM, SALEM_QUADRATIC, ON_OR_INSIDE_UNIT_CIRCLE, OTHER };
std::string to_string(NumberClass c);

struct AlgebraicNumberClass {
    NumberClass cls;
    Enclosure dominant;   // modulus of the dominant root
    bool reciprocal = false;  // exact coefficient-palindrome test
};

// Classification of the root pattern of a monic integer polynomial.  The
// caller passes an irreducible polynomial (a minimal-polynomial factor).
// Reciprocal quadratics (lambda, 1/lambda, no unit-circle conjugates) are
// reported as the labeled degenerate SALEM_QUADRATIC case unless
// strict_quadratic is set, in which case they fall through to OTHER.
AlgebraicNumberClass salem_pisot_classify(const ZPoly& p, double tol = 1e-9,
                                          bool strict_quadratic = false);

}  // namespace cremona

#endif
