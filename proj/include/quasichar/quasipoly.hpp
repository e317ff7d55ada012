#pragma once

#include <map>
#include <string>
#include <vector>

#include "ring.hpp"

namespace quasichar {

/// Dense integer polynomial in t, coefficients c_0, c_1, ...
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t degree, Int coeff = 1) {
        std::vector<Int> c(degree + 1, 0);
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Int leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }

    void add_term(std::size_t degree, Int v) {
        if (c_.size() <= degree) c_.resize(degree + 1, 0);
        c_[degree] = checked_add(c_[degree], v);
        trim();
    }

    Int evaluate(Int t) const {
        Int v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = checked_add(checked_mul(v, t), *it);
        return v;
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coeff(i), o.coeff(i));
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<Int> r = c_;
        for (auto& x : r) x = checked_neg(x);
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
        return Polynomial(std::move(r));
    }

    /// p(a - t)
    Polynomial reflect(Int a) const {
        Polynomial lin({a, -1}), pw({1}), out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            out = out + pw * Polynomial({c_[i]});
            pw = pw * lin;
        }
        return out;
    }

    bool operator==(const Polynomial&) const = default;

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            Int v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            Int a = v < 0 ? -v : v;
            if (s.empty()) s += v < 0 ? "-" : "";
            else s += v < 0 ? " - " : " + ";
            if (a != 1 || i == 0) s += std::to_string(a);
            if (i >= 1) s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// A quasi-polynomial on the nonzero ideals with the gcd property:
/// its value at a is f^{a + period}(N(a)).
class QuasiPolynomial {
public:
    QuasiPolynomial(Ideal period, std::vector<std::pair<Ideal, Polynomial>> constituents)
        : period_(std::move(period)), cons_(std::move(constituents)) {
        std::sort(cons_.begin(), cons_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        auto divs = divisors(period_);
        if (divs.size() != cons_.size()) throw InternalError("constituent count does not match divisor count");
        for (std::size_t i = 0; i < divs.size(); ++i)
            if (!(divs[i] == cons_[i].first)) throw InternalError("constituent keys are not the divisors of the period");
    }

    /// Constant quasi-polynomial p with period <1>.
    static QuasiPolynomial polynomial(const Ring& ring, Polynomial p) {
        return QuasiPolynomial(Ideal::unit(ring), {{Ideal::unit(ring), std::move(p)}});
    }

    const Ring& ring() const { return period_.ring(); }
    const Ideal& period() const { return period_; }
    const std::vector<std::pair<Ideal, Polynomial>>& constituents() const { return cons_; }

    /// f^k where k must divide the period (otherwise k + period is used).
    const Polynomial& constituent(const Ideal& kappa) const {
        Ideal k = kappa + period_;
        for (const auto& [d, p] : cons_)
            if (d == k) return p;
        throw InternalError("divisor missing from constituents");
    }

    /// Re-express with a multiple of the period.
    QuasiPolynomial with_period(const Ideal& multiple) const {
        if (!period_.divides(multiple)) throw InternalError("new period must be a multiple of the old one");
        std::vector<std::pair<Ideal, Polynomial>> c;
        for (const auto& d : divisors(multiple)) c.push_back({d, constituent(d)});
        return QuasiPolynomial(multiple, std::move(c));
    }

    bool operator==(const QuasiPolynomial&) const = default;

private:
    Ideal period_;
    std::vector<std::pair<Ideal, Polynomial>> cons_;
};

inline Int qp_evaluate(const QuasiPolynomial& q, const Ideal& a) {
    q.period().check_same(a);
    return q.constituent(a + q.period()).evaluate(a.norm());
}

inline QuasiPolynomial qp_sum(const QuasiPolynomial& x, const QuasiPolynomial& y) {
    x.period().check_same(y.period());
    Ideal rho = ideal_intersection(x.period(), y.period());
    std::vector<std::pair<Ideal, Polynomial>> c;
    for (const auto& d : divisors(rho)) c.push_back({d, x.constituent(d) + y.constituent(d)});
    return QuasiPolynomial(rho, std::move(c));
}

/// Whether `candidate` (a divisor of the period) is itself a period.
inline bool qp_is_period(const QuasiPolynomial& q, const Ideal& candidate) {
    std::map<std::tuple<Int, Int, Int>, const Polynomial*> seen;
    for (const auto& [k, p] : q.constituents()) {
        Ideal g = k + candidate;
        auto key = std::make_tuple(g.a(), g.b(), g.c());
        auto [it, fresh] = seen.try_emplace(key, &p);
        if (!fresh && !(*it->second == p)) return false;
    }
    return true;
}

/// Greedy removal of prime factors while the smaller ideal is still a period.
inline std::pair<Ideal, QuasiPolynomial> qp_minimum_period(const QuasiPolynomial& q) {
    Ideal rho = q.period();
    bool changed = true;
    while (changed && !rho.is_unit()) {
        changed = false;
        for (const auto& [p, e] : factor_ideal(rho).factors) {
            Ideal smaller = ideal_quotient(rho, p);
            if (qp_is_period(q, smaller)) {
                rho = smaller;
                changed = true;
                break;
            }
        }
    }
    std::vector<std::pair<Ideal, Polynomial>> c;
    for (const auto& d : divisors(rho)) c.push_back({d, q.constituent(d)});
    QuasiPolynomial reduced(rho, std::move(c));
    return {rho, reduced};
}

} // namespace quasichar
