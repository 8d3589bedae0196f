#ifndef CREMONA_POINTS_HPP
#define CREMONA_POINTS_HPP

#include <array>
#include <string>
#include <vector>

#include "cremona/homogpoly.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

// Projective point with rational coordinates, stored as primitive integer
// coordinates whose first nonzero entry is positive.
struct ProjPointQ {
    std::array<BigInt, 3> c{0, 0, 0};

    ProjPointQ() = default;
    ProjPointQ(const Rat& x, const Rat& y, const Rat& z);

    friend bool operator==(const ProjPointQ&, const ProjPointQ&) = default;
    friend bool operator<(const ProjPointQ& l, const ProjPointQ& r) { return l.c < r.c; }

    std::string str() const;
};

struct PointCount {
    std::vector<ProjPointQ> rational;  // sorted, distinct
    long algebraic_count = 0;          // further distinct non-rational zeros
    long total() const { return (long)rational.size() + algebraic_count; }
};

// All distinct common zeros in P^2 over the algebraic closure of the given
// homogeneous forms (two or three of them).  The zero set must be finite,
// i.e. the forms must have no common factor.  Rational points are listed
// with coordinates, the remaining ones are counted exactly.
//
// With crosscheck set, the computation is repeated in a second coordinate
// frame and an InternalInconsistency is raised if the counts disagree.
PointCount common_zeros(const std::vector<HomogPoly>& system, bool crosscheck = false);

}  // namespace cremona

#endif
