#ifndef CREMONA_RAT_HPP
#define CREMONA_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cremona {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the Rat invariant we need.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return numerator(r); }
inline BigInt den(const Rat& r) { return denominator(r); }

std::string rat_to_string(const Rat& r);
std::string bigint_to_string(const BigInt& n);

// Exact integer gcd, always >= 0.
BigInt int_gcd(BigInt a, BigInt b);

// All positive divisors of |n| (n != 0).  Uses trial division followed by
// Brent's rho for any large cofactor, so it stays exact on big inputs.
std::vector<BigInt> divisors(const BigInt& n);

// Largest square divisor split: n = s^2 * f with f squarefree (n > 0).
void split_square(const BigInt& n, BigInt& s, BigInt& f);

}  // namespace cremona

#endif
