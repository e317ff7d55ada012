#pragma once

#include <limits>
#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "factor_int.hpp"
#include "intmat.hpp"

namespace quasichar {

/// An element a + b*w of O in the integral basis {1, w}. Over Z, b is 0.
struct Element {
    Int a = 0;
    Int b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    auto operator<=>(const Element&) const = default;

    Element operator+(const Element& o) const { return {checked_add(a, o.a), checked_add(b, o.b)}; }
    Element operator-(const Element& o) const { return {checked_sub(a, o.a), checked_sub(b, o.b)}; }
    Element operator-() const { return {checked_neg(a), checked_neg(b)}; }
};

/// Z, or the maximal order of Q(sqrt d) with w = (1+sqrt d)/2 when d = 1 mod 4
/// and w = sqrt d otherwise.
class Ring {
public:
    Ring() = default;

    static Ring integers() { return Ring(); }

    static Ring quadratic(Int d) {
        if (d == 0 || d == 1) throw InvalidRing("d must differ from 0 and 1");
        if (!is_squarefree(d)) throw InvalidRing("d = " + std::to_string(d) + " is not squarefree");
        Ring r;
        r.quadratic_ = true;
        r.d_ = d;
        return r;
    }

    bool is_integers() const { return !quadratic_; }
    int degree() const { return quadratic_ ? 2 : 1; }
    Int d() const { return d_; }

    /// w^2 = w1*w + w0
    Int w1() const { return quadratic_ && mod_pos(d_, 4) == 1 ? 1 : 0; }
    Int w0() const {
        if (!quadratic_) return 0;
        return mod_pos(d_, 4) == 1 ? (d_ - 1) / 4 : d_;
    }

    bool operator==(const Ring&) const = default;

    Element mul(const Element& x, const Element& y) const {
        if (!quadratic_) return {checked_mul(x.a, y.a), 0};
        Int bd = checked_mul(x.b, y.b);
        Int re = checked_add(checked_mul(x.a, y.a), checked_mul(bd, w0()));
        Int im = checked_add(checked_dot2(x.a, y.b, x.b, y.a), checked_mul(bd, w1()));
        return {re, im};
    }

    Element times_omega(const Element& x) const {
        if (!quadratic_) throw InternalError("Z has no second basis element");
        return {checked_mul(x.b, w0()), checked_add(x.a, checked_mul(x.b, w1()))};
    }

    Element scale(const Element& x, Int k) const { return {checked_mul(x.a, k), checked_mul(x.b, k)}; }

    Element conj(const Element& x) const {
        if (!quadratic_) return x;
        return {checked_add(x.a, checked_mul(x.b, w1())), checked_neg(x.b)};
    }

    Int norm(const Element& x) const {
        if (!quadratic_) return x.a;
        // a^2 + w1*a*b - w0*b^2; negative values occur in real fields
        Int n = checked_add(checked_mul(x.a, x.a), checked_mul(w1(), checked_mul(x.a, x.b)));
        return checked_sub(n, checked_mul(w0(), checked_mul(x.b, x.b)));
    }

    /// Integral basis coordinates of x (length = degree).
    std::vector<Int> coords(const Element& x) const {
        if (!quadratic_) return {x.a};
        return {x.a, x.b};
    }

    Element from_coords(std::span<const Int> c) const {
        if (!quadratic_) return {c[0], 0};
        return {c[0], c[1]};
    }

    std::string name() const {
        if (!quadratic_) return "Z";
        return "O_Q(sqrt(" + std::to_string(d_) + "))";
    }

    std::string format(const Element& x) const {
        if (!quadratic_ || x.b == 0) return std::to_string(x.a);
        std::ostringstream os;
        if (x.a != 0) os << x.a << (x.b > 0 ? "+" : "-");
        else if (x.b < 0) os << "-";
        Int b = abs_int(x.b);
        if (b != 1) os << b;
        os << "w";
        return os.str();
    }

private:
    bool quadratic_ = false;
    Int d_ = 0;
};

namespace detail {

// Incremental HNF of a sublattice of Z^2 in coordinates (1, w):
// basis rows (a, 0) and (b, c), 0 <= b < a when a > 0.
struct Lattice2 {
    Int a = 0, b = 0, c = 0;

    void normalize_b() {
        if (a != 0) b = mod_pos(b, a);
    }

    void add(Int x, Int y) {
        if (a != 0) x = mod_pos(x, a);
        if (y == 0) {
            a = gcd_int(a, x);
        } else if (c == 0) {
            b = y < 0 ? checked_neg(x) : x;
            c = abs_int(y);
        } else {
            auto [g, s, t] = ext_gcd(c, y);
            __int128 nb = static_cast<__int128>(s) * b + static_cast<__int128>(t) * x;
            __int128 rem = static_cast<__int128>(y / g) * b - static_cast<__int128>(c / g) * x;
            if (a != 0) {
                nb %= a;
                rem %= a;
            }
            b = narrow(nb);
            c = g;
            a = gcd_int(a, narrow(rem));
        }
        normalize_b();
    }

    static Int narrow(__int128 v) {
        if (v > std::numeric_limits<Int>::max() || v < -std::numeric_limits<Int>::max())
            throw ArithmeticOverflow("lattice entry exceeds 64 bits");
        return static_cast<Int>(v);
    }
};

} // namespace detail

class Ideal;
class FractionalIdeal;

/// Nonzero ideal of O stored as the HNF of its Z-lattice. Over Z only `a`
/// is meaningful (the ideal aZ). For quadratic rings the basis is
/// {a, b + c*w} with c | a, c | b and 0 <= b < a; the norm is a*c and
/// a is the least positive integer in the ideal.
class Ideal {
public:
    Ideal() = default;

    static Ideal unit(const Ring& ring) { return Ideal(ring, 1, 0, 1); }

    static Ideal principal(const Ring& ring, const Element& g) {
        Element gs[] = {g};
        return from_generators(ring, gs);
    }

    static Ideal of_integer(const Ring& ring, Int n) { return principal(ring, {n, 0}); }

    static Ideal from_generators(const Ring& ring, std::span<const Element> gens) {
        if (ring.is_integers()) {
            Int g = 0;
            for (const auto& e : gens) g = gcd_int(g, e.a);
            if (g == 0) throw AllGeneratorsZero("the zero ideal is excluded");
            return Ideal(ring, g, 0, 1);
        }
        detail::Lattice2 l;
        for (const auto& e : gens) {
            if (e.is_zero()) continue;
            l.add(e.a, e.b);
            Element we = ring.times_omega(e);
            l.add(we.a, we.b);
        }
        if (l.a == 0 || l.c == 0) throw AllGeneratorsZero("the zero ideal is excluded");
        return Ideal(ring, l.a, l.b, l.c);
    }

    /// Ideal with the given HNF; throws if the lattice is not w-stable.
    static Ideal from_hnf(const Ring& ring, Int a, Int b, Int c) {
        if (ring.is_integers()) {
            if (a <= 0) throw InvalidArrangement("ideal HNF must have a positive diagonal");
            return Ideal(ring, a, 0, 1);
        }
        if (a <= 0 || c <= 0 || b < 0 || b >= a) throw InvalidArrangement("not an ideal HNF");
        Ideal cand(ring, a, b, c);
        for (const auto& e : cand.basis())
            if (!cand.contains(ring.times_omega(e))) throw InvalidArrangement("lattice is not an O-ideal");
        return cand;
    }

    /// HNF already known to describe an ideal (no stability check).
    static Ideal from_trusted_hnf(const Ring& ring, Int a, Int b, Int c) { return Ideal(ring, a, b, c); }

    /// Ideal spanned over Z by the given vectors, assumed w-stable (checked).
    static Ideal from_zbasis(const Ring& ring, std::span<const Element> vecs) {
        if (ring.is_integers()) return from_generators(ring, vecs);
        detail::Lattice2 l;
        for (const auto& e : vecs) l.add(e.a, e.b);
        if (l.a == 0 || l.c == 0) throw AllGeneratorsZero("lattice is not of full rank");
        return from_hnf(ring, l.a, l.b, l.c);
    }

    const Ring& ring() const { return ring_; }
    Int a() const { return a_; }
    Int b() const { return b_; }
    Int c() const { return c_; }

    /// Least positive rational integer in the ideal.
    Int min_integer() const { return a_; }

    Int norm() const { return ring_.is_integers() ? a_ : checked_mul(a_, c_); }

    bool is_unit() const { return a_ == 1; }

    /// HNF rows in coordinates (1, w).
    IntMatrix hnf_matrix() const {
        if (ring_.is_integers()) {
            IntMatrix m(1, 1);
            m(0, 0) = a_;
            return m;
        }
        IntMatrix m(2, 2);
        m(0, 0) = a_;
        m(1, 0) = b_;
        m(1, 1) = c_;
        return m;
    }

    std::vector<Element> basis() const {
        if (ring_.is_integers()) return {{a_, 0}};
        return {{a_, 0}, {b_, c_}};
    }

    /// Canonical residue: second coordinate in [0, c), first in [0, a).
    Element reduce(const Element& x) const {
        if (ring_.is_integers()) return {mod_pos(x.a, a_), 0};
        Int q = floor_div(x.b, c_);
        __int128 xa = (static_cast<__int128>(x.a) - static_cast<__int128>(q) * b_) % a_;
        if (xa < 0) xa += a_;
        return {static_cast<Int>(xa), x.b - q * c_};
    }

    bool contains(const Element& x) const { return reduce(x).is_zero(); }

    bool contains(const Ideal& other) const {
        check_same(other);
        for (const auto& e : other.basis())
            if (!contains(e)) return false;
        return true;
    }

    /// this | other, i.e. other is contained in this.
    bool divides(const Ideal& other) const { return contains(other); }

    /// Largest positive integer g with this contained in gO.
    Int content() const {
        if (ring_.is_integers()) return a_;
        return gcd_int(gcd_int(a_, b_), c_);
    }

    Ideal divide_by_integer(Int g) const {
        if (ring_.is_integers()) return Ideal(ring_, a_ / g, 0, 1);
        return Ideal(ring_, a_ / g, b_ / g, c_ / g);
    }

    Ideal scale_by_integer(Int g) const {
        if (ring_.is_integers()) return Ideal(ring_, checked_mul(a_, g), 0, 1);
        return Ideal(ring_, checked_mul(a_, g), checked_mul(b_, g), checked_mul(c_, g));
    }

    void check_same(const Ideal& o) const {
        if (!(ring_ == o.ring_)) throw RingMismatch("ideals over different rings");
    }

    bool operator==(const Ideal& o) const { return ring_ == o.ring_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

    /// Deterministic order: by norm, then lexicographic HNF.
    bool operator<(const Ideal& o) const {
        return std::make_tuple(norm(), a_, b_, c_) < std::make_tuple(o.norm(), o.a_, o.b_, o.c_);
    }

    std::string hnf_string() const {
        if (ring_.is_integers()) return "[[" + std::to_string(a_) + "]]";
        return "[[" + std::to_string(a_) + ",0],[" + std::to_string(b_) + "," + std::to_string(c_) + "]]";
    }

    /// Generators as elements (the HNF basis), suitable for re-parsing.
    std::vector<Element> generators() const { return basis(); }

private:
    Ideal(const Ring& ring, Int a, Int b, Int c) : ring_(ring), a_(a), b_(b), c_(c) {}

    Ring ring_;
    Int a_ = 1, b_ = 0, c_ = 1;
};

inline Ideal operator+(const Ideal& x, const Ideal& y) {
    x.check_same(y);
    const Ring& r = x.ring();
    if (r.is_integers()) return Ideal::from_hnf(r, gcd_int(x.a(), y.a()), 0, 1);
    detail::Lattice2 l;
    for (const auto& e : x.basis()) l.add(e.a, e.b);
    for (const auto& e : y.basis()) l.add(e.a, e.b);
    return Ideal::from_hnf(r, l.a, l.b, l.c);
}

inline Ideal operator*(const Ideal& x, const Ideal& y) {
    x.check_same(y);
    const Ring& r = x.ring();
    if (r.is_integers()) return Ideal::from_hnf(r, checked_mul(x.a(), y.a()), 0, 1);
    detail::Lattice2 l;
    for (const auto& e : x.basis())
        for (const auto& f : y.basis()) {
            Element p = r.mul(e, f);
            l.add(p.a, p.b);
        }
    return Ideal::from_hnf(r, l.a, l.b, l.c);
}

inline Ideal ideal_sum(const Ideal& x, const Ideal& y) { return x + y; }
inline Ideal ideal_product(const Ideal& x, const Ideal& y) { return x * y; }

inline Ideal ideal_power(const Ideal& x, unsigned e) {
    Ideal r = Ideal::unit(x.ring());
    for (unsigned i = 0; i < e; ++i) r = r * x;
    return r;
}

/// The lcm, as the intersection of the two HNF lattices {(a,0), (b,c)}:
/// second coordinates are multiples of k*lcm(c1,c2), first by CRT.
inline Ideal ideal_intersection(const Ideal& x, const Ideal& y) {
    x.check_same(y);
    const Ring& r = x.ring();
    if (r.is_integers()) return Ideal::from_hnf(r, lcm_int(x.a(), y.a()), 0, 1);
    const Int c = lcm_int(x.c(), y.c());
    const Int u1 = mod_pos(static_cast<Int>(static_cast<__int128>(x.b()) * (c / x.c()) % x.a()), x.a());
    const Int u2 = mod_pos(static_cast<Int>(static_cast<__int128>(y.b()) * (c / y.c()) % y.a()), y.a());
    const Int g = gcd_int(x.a(), y.a());
    const Int k = g / gcd_int(g, mod_pos(u1 - u2, g));
    const Int a = lcm_int(x.a(), y.a());
    // x0 = k*u1 mod a1, x0 = k*u2 mod a2
    const Int r1 = mod_pos(static_cast<Int>(static_cast<__int128>(k) * u1 % x.a()), x.a());
    const Int r2 = mod_pos(static_cast<Int>(static_cast<__int128>(k) * u2 % y.a()), y.a());
    auto [gg, p, q] = ext_gcd(x.a(), y.a());
    (void)q;
    const Int m2 = y.a() / gg;
    const __int128 t = static_cast<__int128>(mod_pos((r2 - r1) / gg, m2)) * mod_pos(p, m2) % m2;
    const Int x0 = mod_pos(static_cast<Int>((static_cast<__int128>(r1) + t * x.a()) % a), a);
    return Ideal::from_hnf(r, a, mod_pos(x0, a), checked_mul(k, c));
}

inline Ideal conjugate(const Ideal& x) {
    const Ring& r = x.ring();
    if (r.is_integers()) return x;
    std::vector<Element> v;
    for (const auto& e : x.basis()) v.push_back(r.conj(e));
    return Ideal::from_zbasis(r, v);
}

/// (1/den) * num with den minimal.
class FractionalIdeal {
public:
    FractionalIdeal(Ideal num, Int den) : num_(std::move(num)), den_(den) {
        Int g = gcd_int(num_.content(), den_);
        if (g > 1) {
            num_ = num_.divide_by_integer(g);
            den_ /= g;
        }
    }

    const Ideal& numerator() const { return num_; }
    Int denominator() const { return den_; }
    bool is_integral() const { return den_ == 1; }

    Ideal to_integral() const {
        if (den_ != 1) throw NonIntegralQuotient("fractional ideal has denominator " + std::to_string(den_));
        return num_;
    }

    FractionalIdeal operator*(const Ideal& y) const { return FractionalIdeal(num_ * y, den_); }
    FractionalIdeal operator*(const FractionalIdeal& y) const {
        return FractionalIdeal(num_ * y.num_, checked_mul(den_, y.den_));
    }

    bool operator==(const FractionalIdeal&) const = default;

private:
    Ideal num_;
    Int den_;
};

inline FractionalIdeal inverse(const Ideal& x) {
    if (x.ring().is_integers()) return FractionalIdeal(Ideal::unit(x.ring()), x.a());
    return FractionalIdeal(conjugate(x), x.norm());
}

/// {w in O : w*k in a} = a * (k + a)^{-1}.
inline Ideal ideal_colon(const Ideal& a, const Ideal& k) {
    a.check_same(k);
    return (inverse(k + a) * a).to_integral();
}

/// a * b^{-1}, which must be integral.
inline Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
    a.check_same(b);
    return (inverse(b) * a).to_integral();
}

/// Running sum of ideals (or of the zero ideal).
class IdealSum {
public:
    explicit IdealSum(const Ring& ring) : ring_(ring) {}

    void add(const Ideal& x) {
        if (ring_.is_integers()) {
            l_.a = gcd_int(l_.a, x.a());
            return;
        }
        l_.add(x.a(), 0);
        l_.add(x.b(), x.c());
    }

    void add(const IdealSum& o) {
        if (!o.is_zero()) add(o.value());
    }

    void add_element(const Element& e) {
        if (e.is_zero()) return;
        if (ring_.is_integers()) {
            l_.a = gcd_int(l_.a, e.a);
            return;
        }
        l_.add(e.a, e.b);
        Element w = ring_.times_omega(e);
        l_.add(w.a, w.b);
    }

    bool is_zero() const { return l_.a == 0; }
    bool is_unit() const { return l_.a == 1; }

    Ideal value() const {
        if (is_zero()) throw InternalError("sum is the zero ideal");
        return Ideal::from_trusted_hnf(ring_, l_.a, ring_.is_integers() ? 0 : l_.b, ring_.is_integers() ? 1 : l_.c);
    }

private:
    Ring ring_;
    detail::Lattice2 l_;
};

struct PrimeAbove {
    Ideal prime;
    int ramification;  // e in pO = prod P^e
};

/// Decomposition of the rational prime p in O.
inline std::vector<PrimeAbove> primes_above(const Ring& ring, Int p) {
    if (ring.is_integers()) return {{Ideal::of_integer(ring, p), 1}};
    const Int w1 = ring.w1(), w0 = ring.w0();
    std::vector<Int> roots;
    if (p == 2) {
        for (Int x = 0; x < 2; ++x)
            if (mod_pos(x * x - w1 * x - w0, 2) == 0) roots.push_back(x);
    } else {
        Int disc = mod_pos(checked_add(checked_mul(w1, w1), checked_mul(4, w0)), p);
        Int inv2 = (p + 1) / 2;
        if (disc == 0) {
            roots.push_back(mul_mod(mod_pos(w1, p), inv2, p));
        } else if (legendre(disc, p) == 1) {
            Int s = sqrt_mod(disc, p);
            roots.push_back(mul_mod(mod_pos(w1 + s, p), inv2, p));
            roots.push_back(mul_mod(mod_pos(w1 - s, p), inv2, p));
        }
    }
    std::vector<PrimeAbove> out;
    if (roots.empty()) {
        out.push_back({Ideal::of_integer(ring, p), 1});
    } else if (roots.size() == 1) {
        Element g[] = {{p, 0}, {-roots[0], 1}};
        out.push_back({Ideal::from_generators(ring, g), 2});
    } else {
        for (Int r : roots) {
            Element g[] = {{p, 0}, {-r, 1}};
            out.push_back({Ideal::from_generators(ring, g), 1});
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeAbove& x, const PrimeAbove& y) { return x.prime < y.prime; });
    return out;
}

inline bool is_prime(const Ideal& p) {
    Int n = p.norm();
    auto f = factor_integer(n);
    if (f.size() != 1) return false;
    if (f[0].second == 1) return true;
    if (f[0].second == 2 && !p.ring().is_integers()) {
        auto above = primes_above(p.ring(), f[0].first);
        return above.size() == 1 && above[0].ramification == 1 && above[0].prime == p;
    }
    return false;
}

struct PrimeFactorization {
    std::vector<std::pair<Ideal, unsigned>> factors;

    Ideal product(const Ring& ring) const {
        Ideal r = Ideal::unit(ring);
        for (const auto& [p, e] : factors) r = r * ideal_power(p, e);
        return r;
    }
};

struct FactorBudget {
    Int max_norm = Int{1} << 62;
};

inline unsigned ord_unchecked(Ideal a, const Ideal& p) {
    unsigned e = 0;
    while (p.divides(a)) {
        a = ideal_quotient(a, p);
        ++e;
        if (a.is_unit()) break;
    }
    return e;
}

inline unsigned ord_p(const Ideal& a, const Ideal& p) {
    a.check_same(p);
    if (!is_prime(p)) throw NotPrime("ideal " + p.hnf_string() + " is not prime");
    return ord_unchecked(a, p);
}

inline PrimeFactorization factor_ideal(const Ideal& x, FactorBudget budget = {}) {
    if (x.norm() > budget.max_norm) throw NormFactorizationTooLarge("norm " + std::to_string(x.norm()) + " exceeds budget");
    PrimeFactorization out;
    Ideal rest = x;
    for (const auto& [p, e] : factor_integer(x.norm(), budget.max_norm)) {
        for (const auto& above : primes_above(x.ring(), p)) {
            unsigned k = 0;
            while (!rest.is_unit() && above.prime.divides(rest)) {
                rest = ideal_quotient(rest, above.prime);
                ++k;
            }
            if (k > 0) out.factors.push_back({above.prime, k});
        }
    }
    if (!rest.is_unit()) throw InternalError("factorization did not exhaust " + x.hnf_string());
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
}

/// All divisors, ordered by (norm, HNF).
inline std::vector<Ideal> divisors(const Ideal& x) {
    auto f = factor_ideal(x);
    std::vector<Ideal> out{Ideal::unit(x.ring())};
    for (const auto& [p, e] : f.factors) {
        std::vector<Ideal> next;
        for (const auto& d : out) {
            Ideal q = d;
            next.push_back(q);
            for (unsigned i = 0; i < e; ++i) {
                q = q * p;
                next.push_back(q);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ResidueBudget {
    Int max_size = 10'000'000;
};

/// Canonical residue system of O/a.
inline std::vector<Element> residues(const Ideal& x, ResidueBudget budget = {}) {
    if (x.norm() > budget.max_size) throw BudgetExceeded("residue system of size " + std::to_string(x.norm()));
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(x.norm()));
    if (x.ring().is_integers()) {
        for (Int i = 0; i < x.a(); ++i) out.push_back({i, 0});
        return out;
    }
    for (Int yb = 0; yb < x.c(); ++yb)
        for (Int ya = 0; ya < x.a(); ++ya) out.push_back({ya, yb});
    return out;
}

/// Every ideal of norm at most bound, ordered by (norm, HNF).
inline std::vector<Ideal> ideals_up_to_norm(const Ring& ring, Int bound) {
    std::vector<Ideal> out;
    if (ring.is_integers()) {
        for (Int a = 1; a <= bound; ++a) out.push_back(Ideal::from_hnf(ring, a, 0, 1));
        return out;
    }
    for (Int c = 1; c * c <= bound; ++c)
        for (Int a = c; checked_mul(a, c) <= bound; a += c)
            for (Int b = 0; b < a; b += c) {
                // w-stability of the lattice {a, b + c*w}
                Element v[] = {{a, 0}, {b, c}};
                bool ok = true;
                for (const auto& e : v) {
                    Element w = ring.times_omega(e);
                    Int q = floor_div(w.b, c);
                    if (w.b - q * c != 0 || mod_pos(w.a - q * b, a) != 0) ok = false;
                }
                if (ok) out.push_back(Ideal::from_hnf(ring, a, b, c));
            }
    std::sort(out.begin(), out.end());
    return out;
}

/// Names of primes for display: "p{norm}" or "p{norm}_{k}" when several
/// primes of that norm lie over the same rational prime.
inline std::string prime_name(const Ideal& p) {
    Int n = p.norm();
    auto f = factor_integer(n);
    auto above = primes_above(p.ring(), f[0].first);
    std::vector<Ideal> same;
    for (const auto& a : above)
        if (a.prime.norm() == n) same.push_back(a.prime);
    if (same.size() <= 1) return "p" + std::to_string(n);
    for (std::size_t i = 0; i < same.size(); ++i)
        if (same[i] == p) return "p" + std::to_string(n) + "_" + std::to_string(i + 1);
    throw InternalError("prime not found over its rational prime");
}

inline std::string factored_string(const Ideal& x) {
    if (x.is_unit()) return "<1>";
    auto f = factor_ideal(x);
    std::string s;
    for (const auto& [p, e] : f.factors) {
        if (!s.empty()) s += "*";
        s += prime_name(p) + "^" + std::to_string(e);
    }
    return s;
}

} // namespace quasichar
