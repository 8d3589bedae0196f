#ifndef CREMONA_HOMOGPOLY_HPP
#define CREMONA_HOMOGPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/rat.hpp"

namespace cremona {

// Exponent triple for x^a y^b z^c.
struct Exp3 {
    int a = 0, b = 0, c = 0;
    int total() const { return a + b + c; }
    int operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
    int& operator[](int i) { return i == 0 ? a : (i == 1 ? b : c); }
    friend bool operator==(const Exp3&, const Exp3&) = default;
};

// Orders monomials lexicographically with x > y > z, largest first, so a
// polynomial's begin() is its lex-leading term.  The leading coefficient in
// this order is the one used by every "up to scalar" normalization.
struct LexDesc {
    bool operator()(const Exp3& l, const Exp3& r) const {
        if (l.a != r.a) return l.a > r.a;
        if (l.b != r.b) return l.b > r.b;
        return l.c > r.c;
    }
};

// Sparse homogeneous polynomial in x, y, z over the rationals.  The zero
// polynomial keeps an explicit degree tag; no zero coefficient is stored.
class HomogPoly {
public:
    using TermMap = std::map<Exp3, Rat, LexDesc>;

    HomogPoly() = default;
    static HomogPoly zero(int degree);
    static HomogPoly constant(const Rat& c);
    static HomogPoly monomial(Exp3 e, Rat coeff);
    static HomogPoly variable(int i);  // 0 -> x, 1 -> y, 2 -> z

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree_ == 0; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading data in the lex x>y>z order.
    Exp3 lead_exp() const;
    const Rat& lead_coeff() const;

    Rat coeff(Exp3 e) const;
    void set_coeff(Exp3 e, const Rat& v);  // maintains the no-zero invariant

    HomogPoly operator-() const;
    friend HomogPoly operator+(const HomogPoly& p, const HomogPoly& q);
    friend HomogPoly operator-(const HomogPoly& p, const HomogPoly& q);
    friend HomogPoly operator*(const HomogPoly& p, const HomogPoly& q);
    friend HomogPoly operator*(const Rat& c, const HomogPoly& p);
    friend bool operator==(const HomogPoly& p, const HomogPoly& q);

    HomogPoly pow(int e) const;

    // Divides every coefficient by the lex-leading one.
    HomogPoly normalized() const;

    HomogPoly derivative(int var) const;

    Rat eval(const Rat& x, const Rat& y, const Rat& z) const;

    // Substitution f(g0, g1, g2); the gi must share a common degree.
    HomogPoly subst(const HomogPoly& g0, const HomogPoly& g1, const HomogPoly& g2) const;

    // Minimal exponent of `var` across the terms (the vanishing order along
    // the corresponding coordinate divisor).  p must be nonzero.
    int min_exponent(int var) const;
    int max_exponent(int var) const;

    std::string str() const;  // deterministic human/machine readable form

private:
    int degree_ = 0;
    TermMap terms_;
    void check_guard() const;
};

HomogPoly add(const HomogPoly& p, const HomogPoly& q);
HomogPoly mul(const HomogPoly& p, const HomogPoly& q);

// 3x3 determinant of partial derivatives; equal degrees d >= 1 required.
HomogPoly jacobian_det(const HomogPoly& f0, const HomogPoly& f1, const HomogPoly& f2);

// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<HomogPoly> divide_exact(const HomogPoly& p, const HomogPoly& q);

// Monic-normalized greatest common divisor (subresultant pseudo-remainder
// sequences, recursing on the variable of lowest maximal exponent).
HomogPoly gcd(const HomogPoly& p, const HomogPoly& q);

int vanishing_order(const HomogPoly& p, int var);

struct LinearFactorization {
    // Each factor is a degree-1 form normalized to lex-leading coefficient 1.
    std::vector<std::pair<HomogPoly, int>> linear_factors;
    HomogPoly residual;  // no rational linear factor
    Rat unit;
};

// Extracts every rational linear factor with multiplicity; the product
// unit * factors^mults * residual reproduces the input exactly.
LinearFactorization factor_linear(const HomogPoly& p);

// Sylvester resultant eliminating `var`; result lives in the remaining two
// variables.  Convention: if q has var-degree 0, Res = q^(deg_var p), and
// symmetrically; 1 if both are free of var.
HomogPoly resultant(const HomogPoly& p, const HomogPoly& q, int var);

}  // namespace cremona

#endif
