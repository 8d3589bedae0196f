#ifndef CREMONA_CREMAPS_HPP
#define CREMONA_CREMAPS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/homogpoly.hpp"
#include "cremona/points.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

struct Matrix3 {
    std::array<std::array<Rat, 3>, 3> m{};

    static Matrix3 identity();
    Rat det() const;
    Matrix3 inverse() const;  // throws SingularMatrix
    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
    friend bool operator==(const Matrix3&, const Matrix3&) = default;
    std::array<Rat, 3> apply(const std::array<Rat, 3>& v) const;
};

// Reduced rational self-map of P^2: components share no common factor and
// the representation is scalar-normalized, so equal maps compare equal.
class RationalMapP2 {
public:
    static RationalMapP2 make(const HomogPoly& c0, const HomogPoly& c1, const HomogPoly& c2);
    static RationalMapP2 identity();
    static RationalMapP2 sigma();  // (yz : xz : xy)
    static RationalMapP2 rho();    // (xy : z^2 : yz)
    static RationalMapP2 tau();    // (x^2 : xy : y^2 - xz)
    static RationalMapP2 from_matrix(const Matrix3& a);

    int degree() const { return degree_; }
    const std::array<HomogPoly, 3>& components() const { return f_; }
    const HomogPoly& operator[](int i) const { return f_[i]; }

    std::string str() const;

private:
    RationalMapP2() = default;
    std::array<HomogPoly, 3> f_;
    int degree_ = 1;
};

RationalMapP2 compose(const RationalMapP2& f, const RationalMapP2& g);
bool projectively_equal(const RationalMapP2& f, const RationalMapP2& g);
bool is_identity(const RationalMapP2& f);

struct IndeterminacyReport {
    std::vector<ProjPointQ> rational_points;
    long algebraic_count = 0;
    long total_distinct = 0;
};

IndeterminacyReport indeterminacy(const RationalMapP2& f);

struct ExceptionalEntry {
    HomogPoly curve;  // normalized factor of the Jacobian determinant
    int multiplicity = 1;
    bool contracted = false;
    std::optional<ProjPointQ> image;  // set for contractions to a rational point
};

struct ExceptionalReport {
    HomogPoly jacobian;
    std::vector<ExceptionalEntry> entries;
};

ExceptionalReport exceptional(const RationalMapP2& f);

// Exact test that f contracts every component of the (squarefree) curve.
bool contracts_locus(const RationalMapP2& f, const HomogPoly& curve);

enum class QuadraticClass { SIGMA_TYPE, RHO_TYPE, TAU_TYPE, NOT_BIRATIONAL };
std::string to_string(QuadraticClass c);

QuadraticClass classify_quadratic(const RationalMapP2& f);

struct NoetherLetter {
    bool is_sigma = false;
    Matrix3 mat;  // meaningful when !is_sigma
    static NoetherLetter sigma() { return {true, {}}; }
    static NoetherLetter linear(const Matrix3& a) { return {false, a}; }
};

struct NoetherWord {
    std::vector<NoetherLetter> letters;
};

// Left-to-right composition with reduction at each step: a word "A sigma B"
// expands to A o sigma o B.
RationalMapP2 expand_word(const NoetherWord& w);
NoetherWord invert_word(const NoetherWord& w);

bool homaloidal_check(int n, const std::vector<int>& mults);

// Fiber action with polynomial entries in y (clear rational-function
// denominators first; the Moebius action is unchanged).
struct DeJonquieresMap {
    std::array<std::array<UniPoly, 2>, 2> fiber;  // [[a,b],[c,d]]: x -> (a x + b)/(c x + d)
    std::array<std::array<Rat, 2>, 2> base;       // y -> (p y + q)/(r y + s)
};

RationalMapP2 dejonquieres_to_map(const DeJonquieresMap& d);

// True when f maps the pencil of lines through (1:0:0) to itself via the
// given base Moebius action.
bool preserves_pencil(const RationalMapP2& f, const std::array<std::array<Rat, 2>, 2>& base);

}  // namespace cremona

#endif
