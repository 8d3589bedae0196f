#ifndef CREMONA_POLY2_HPP
#define CREMONA_POLY2_HPP

#include <map>
#include <string>
#include <utility>

#include "cremona/errors.hpp"
#include "cremona/rat.hpp"

namespace cremona {

// Sparse bivariate polynomial over Q in affine variables (u, v).  Used for
// blow-up chart computations and plane polynomial automorphisms.
class Poly2 {
public:
    using Key = std::pair<int, int>;  // (deg_u, deg_v)
    using TermMap = std::map<Key, Rat>;

    Poly2() = default;
    static Poly2 constant(const Rat& c);
    static Poly2 monomial(int i, int j, Rat c);
    static Poly2 var_u();
    static Poly2 var_v();

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    int degree_u() const;
    int degree_v() const;
    const TermMap& terms() const { return terms_; }
    Rat coeff(int i, int j) const;
    std::size_t term_count() const { return terms_.size(); }

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Rat& c, const Poly2& a);
    friend bool operator==(const Poly2& a, const Poly2& b);

    Poly2 pow(int e) const;
    Poly2 derivative_u() const;
    Poly2 derivative_v() const;
    Rat eval(const Rat& u, const Rat& v) const;
    Poly2 subst(const Poly2& gu, const Poly2& gv) const;

    // Leading homogeneous part (terms of maximal total degree).
    Poly2 leading_form() const;

    // Minimal exponent of u (resp. v) over all terms; p must be nonzero.
    int min_exp_u() const;
    int min_exp_v() const;

    // Quotient by u^k (resp. v^k); requires exact divisibility.
    Poly2 shift_down_u(int k) const;
    Poly2 shift_down_v(int k) const;

    std::string str(const std::string& nu = "u", const std::string& nv = "v") const;

private:
    TermMap terms_;
};

}  // namespace cremona

#endif
