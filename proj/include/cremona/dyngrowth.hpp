#ifndef CREMONA_DYNGROWTH_HPP
#define CREMONA_DYNGROWTH_HPP

#include <optional>
#include <string>
#include <vector>

#include "cremona/cremaps.hpp"

namespace cremona {

struct DegreeSequence {
    int map_degree = 0;
    std::vector<long long> degrees;  // [deg f^1, ..., deg f^N]
    int horizon = 0;
};

// Exact degrees of reduced iterates, computed by repeated compose-and-reduce.
DegreeSequence degree_sequence(const RationalMapP2& f, int horizon);

struct StabilityCertificate {
    bool stable = false;
    int first_failing_n = -1;      // index into degrees when !stable
    long long expected = 0, got = 0;
};

// N-bounded certification of deg f^n = (deg f)^n, not a proof for all n.
StabilityCertificate is_algebraically_stable(const DegreeSequence& seq);

enum class GrowthType { BOUNDED, LINEAR, QUADRATIC, EXPONENTIAL };
std::string to_string(GrowthType t);

struct GrowthClass {
    GrowthType type;
    std::optional<int> period;               // BOUNDED
    std::vector<Rat> tail_ratios;            // EXPONENTIAL evidence
    std::vector<long long> tail_first_diff;  // LINEAR/QUADRATIC evidence
    std::vector<long long> tail_second_diff;
};

GrowthClass growth_classify(const DegreeSequence& seq);

struct DynDegreeEstimate {
    double value = 1.0;
    bool exact = false;        // certified by N-bounded algebraic stability
    bool tends_to_one = false;  // polynomial/bounded growth detected
};

DynDegreeEstimate dyn_degree_estimate(const DegreeSequence& seq);

// Exact value p + q*sqrt(disc) with disc squarefree (disc = 0 for rationals).
struct QuadraticSurd {
    Rat p, q;
    BigInt disc = 0;

    static QuadraticSurd rational(const Rat& v) { return {v, 0, 0}; }
    static QuadraticSurd make(const Rat& p, const Rat& q, const BigInt& d);

    friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
    QuadraticSurd pow(int k) const;
    double to_double() const;
    std::string str() const;
};

struct MonomialMap {
    long long a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]], |det| = 1
    MonomialMap(long long a, long long b, long long c, long long d);
    long long trace() const { return a + d; }
    long long det() const { return a * d - b * c; }
    MonomialMap mul(const MonomialMap& o) const;
};

QuadraticSurd monomial_dyn_degree(const MonomialMap& m);
RationalMapP2 monomial_as_p2_map(const MonomialMap& m);

}  // namespace cremona

#endif
