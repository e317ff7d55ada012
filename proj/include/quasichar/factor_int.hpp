#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace quasichar {

inline bool is_probable_prime(Int n) {
    if (n < 2) return false;
    for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for all 64-bit inputs
    for (Int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// Brent's variant of Pollard rho; n is odd composite.
inline Int pollard_rho(Int n) {
    for (Int c = 1;; ++c) {
        auto f = [&](Int x) { return (static_cast<Int>((static_cast<__int128>(x) * x + c) % n)); };
        Int y = 2, x = 2, g = 1, q = 1, ys = 2;
        Int r = 1;
        const Int m = 128;
        do {
            x = y;
            for (Int i = 0; i < r; ++i) y = f(y);
            Int k = 0;
            do {
                ys = y;
                for (Int i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

/// Prime factorization of n >= 1 as ascending (prime, exponent) pairs.
/// Trial division to a small bound, then Pollard rho.
inline std::vector<std::pair<Int, int>> factor_integer(Int n, Int max_value = (Int{1} << 62)) {
    if (n < 1) throw InternalError("factor_integer expects a positive integer");
    if (n > max_value) throw NormFactorizationTooLarge("value exceeds factorization budget");
    std::map<Int, int> out;
    for (Int p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) detail::factor_rec(n, out);
    return {out.begin(), out.end()};
}

inline int legendre(Int a, Int p) {
    a = mod_pos(a, p);
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Square root of a quadratic residue a modulo an odd prime p (Tonelli-Shanks).
inline Int sqrt_mod(Int a, Int p) {
    a = mod_pos(a, p);
    if (a == 0) return 0;
    Int q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int i = 0, tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

} // namespace quasichar
