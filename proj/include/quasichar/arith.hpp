#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "errors.hpp"

namespace quasichar {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("addition exceeds 64 bits");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("subtraction exceeds 64 bits");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("multiplication exceeds 64 bits");
    return r;
}

// a*b + c*d without intermediate wraparound
inline Int checked_dot2(Int a, Int b, Int c, Int d) {
    return checked_add(checked_mul(a, b), checked_mul(c, d));
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int abs_int(Int a) { return a < 0 ? checked_neg(a) : a; }

inline Int gcd_int(Int a, Int b) { return std::gcd(abs_int(a), abs_int(b)); }

inline Int lcm_int(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    return checked_mul(abs_int(a) / g, abs_int(b));
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Non-negative remainder for positive modulus.
inline Int mod_pos(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

/// Returns (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

inline Int mul_mod(Int a, Int b, Int m) {
    return static_cast<Int>((static_cast<__int128>(a) * b) % m);
}

inline Int pow_mod(Int base, Int exp, Int m) {
    Int result = 1 % m;
    base = mod_pos(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline Int checked_pow(Int base, unsigned exp) {
    Int r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline bool is_squarefree(Int d) {
    Int n = abs_int(d);
    for (Int p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        if (n % p == 0) n /= p;
    }
    return true;
}

} // namespace quasichar
