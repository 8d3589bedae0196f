#include "cremona/rat.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace cremona {

std::string bigint_to_string(const BigInt& n) { return n.str(); }

std::string rat_to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

namespace {

BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) { return a * b % m; }

BigInt powmod(BigInt base, BigInt exp, const BigInt& m) {
    BigInt r = 1;
    base %= m;
    while (exp > 0) {
        if ((exp & 1) != 0) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

BigInt brent_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    while (true) {
        BigInt y = BigInt(rng() % 1000003 + 1), c = BigInt(rng() % 1000003 + 1);
        BigInt x = y, d = 1, q = 1, ys = y;
        const int m = 64;
        int r = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            int k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (int i = 0; i < std::min(m, r - k); ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, (x > y ? x - y : y - x), n);
                }
                d = int_gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                d = int_gcd((x > ys ? x - ys : ys - x), n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(BigInt n, std::map<BigInt, int>& out) {
    if (n <= 1) return;
    for (BigInt p = 2; p * p <= n && p < (1 << 20); p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    BigInt d = brent_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<BigInt> divisors(const BigInt& n) {
    BigInt m = n < 0 ? -n : n;
    std::map<BigInt, int> fac;
    factor_into(m, fac);
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : fac) {
        std::vector<BigInt> next;
        next.reserve(divs.size() * (e + 1));
        BigInt pk = 1;
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs.swap(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

void split_square(const BigInt& n, BigInt& s, BigInt& f) {
    std::map<BigInt, int> fac;
    factor_into(n, fac);
    s = 1;
    f = 1;
    for (const auto& [p, e] : fac) {
        for (int i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) f *= p;
    }
}

}  // namespace cremona
