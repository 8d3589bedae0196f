#ifndef CREMONA_UNIPOLY_HPP
#define CREMONA_UNIPOLY_HPP

#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/rat.hpp"

namespace cremona {

class HomogPoly;

// Dense univariate polynomial over Q, coefficient of t^k at index k.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);
    static UniPoly from_roots_none() { return constant(1); }

    int degree() const { return (int)coeffs_.size() - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : Rat(0); }
    const Rat& lead() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rat& c, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    UniPoly monic() const;
    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    UniPoly shift_var() const;  // multiply by t

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

// quotient/remainder over Q (b nonzero)
void uni_divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);  // monic
UniPoly squarefree_part(const UniPoly& a);            // monic
std::vector<Rat> rational_roots(const UniPoly& a);    // distinct, sorted

// g(..., specialized) as univariate in `var`: the other two variables of the
// trivariate g are fixed to the given rational values.
UniPoly specialize_univariate(const HomogPoly& g, int var, const Rat& v1, const Rat& v2);

// Integer polynomials (for characteristic polynomials and root work).
using ZPoly = std::vector<BigInt>;  // coefficient of x^k at index k, trimmed

ZPoly zpoly_trim(ZPoly p);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_neg(ZPoly a);
bool zpoly_divides(const ZPoly& d, const ZPoly& p);  // exact division test over Q
std::string zpoly_str(const ZPoly& p, const std::string& var = "t");
UniPoly zpoly_to_unipoly(const ZPoly& p);
ZPoly unipoly_to_zpoly_primitive(const UniPoly& p);  // clears denominators, primitive

}  // namespace cremona

#endif
