#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ring.hpp"

namespace quasichar {

/// An l x k matrix over O.
class CoeffMatrix {
public:
    CoeffMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols) {}

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Element> entries_;
};

/// Integer matrix of x -> x*C with O^l = Z^{deg*l}; row (i, t) is w^t e_i.
inline IntMatrix restriction_of_scalars(const CoeffMatrix& c) {
    const Ring& r = c.ring();
    const std::size_t deg = static_cast<std::size_t>(r.degree());
    IntMatrix m(deg * c.rows(), deg * c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            Element e = c(i, j);
            for (std::size_t t = 0; t < deg; ++t) {
                auto co = r.coords(e);
                for (std::size_t s = 0; s < deg; ++s) m(deg * i + t, deg * j + s) = co[s];
                if (t + 1 < deg) e = r.times_omega(e);
            }
        }
    return m;
}

inline std::size_t rank_over_K(const CoeffMatrix& c) {
    return rank(restriction_of_scalars(c)) / static_cast<std::size_t>(c.ring().degree());
}

/// All i x i minors keyed by (row mask, column mask), built by expansion
/// along the last column from the (i-1) x (i-1) minors.
inline std::map<std::pair<unsigned, unsigned>, Element> minors_of_size(const CoeffMatrix& c, std::size_t size) {
    const Ring& r = c.ring();
    std::map<std::pair<unsigned, unsigned>, Element> cur;
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) cur[{1u << i, 1u << j}] = c(i, j);
    for (std::size_t s = 2; s <= size; ++s) {
        std::map<std::pair<unsigned, unsigned>, Element> next;
        for (const auto& [key, val] : cur) {
            auto [rm, cm] = key;
            if (static_cast<std::size_t>(__builtin_popcount(cm)) != s - 1) continue;
            unsigned top = 31 - static_cast<unsigned>(__builtin_clz(cm));
            for (std::size_t j = top + 1; j < c.cols(); ++j)
                for (std::size_t i = 0; i < c.rows(); ++i) {
                    if (rm & (1u << i)) continue;
                    unsigned nrm = rm | (1u << i), ncm = cm | (1u << j);
                    // sign from the position of row i inside nrm (last column is j)
                    int pos = __builtin_popcount(nrm & ((1u << i) - 1));
                    int sign = ((pos + static_cast<int>(s) - 1) % 2 == 0) ? 1 : -1;
                    Element term = r.mul(c(i, j), val);
                    if (sign < 0) term = -term;
                    auto [it, fresh] = next.try_emplace({nrm, ncm}, term);
                    if (!fresh) it->second = it->second + term;
                }
        }
        cur = std::move(next);
    }
    return cur;
}

/// E_1, ..., E_r: ideals generated by the i x i minors, r = rank over K.
inline std::vector<Ideal> determinantal_ideals(const CoeffMatrix& c) {
    std::size_t r = rank_over_K(c);
    std::vector<Ideal> out;
    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<Element> gens;
        for (const auto& [key, v] : minors_of_size(c, i)) gens.push_back(v);
        out.push_back(Ideal::from_generators(c.ring(), gens));
    }
    return out;
}

/// Rank r(J) and invariant factors d_1 | ... | d_r of the torsion of coker.
struct SubsetInvariants {
    int rank = 0;
    std::vector<Ideal> factors;

    bool operator==(const SubsetInvariants&) const = default;
};

/// d_i = E_i * E_{i-1}^{-1} with E_0 = <1>.
inline SubsetInvariants invariants_from_determinantal(const Ring& ring, const std::vector<Ideal>& e) {
    SubsetInvariants inv;
    inv.rank = static_cast<int>(e.size());
    Ideal prev = Ideal::unit(ring);
    for (const auto& ei : e) {
        inv.factors.push_back(ideal_quotient(ei, prev));
        prev = ei;
    }
    for (std::size_t i = 1; i < inv.factors.size(); ++i)
        if (!inv.factors[i - 1].divides(inv.factors[i]))
            throw NonIntegralQuotient("invariant factor chain broken");
    return inv;
}

inline SubsetInvariants invariant_factors(const CoeffMatrix& c) {
    return invariants_from_determinantal(c.ring(), determinantal_ideals(c));
}

/// m(J, k) = prod N(k + d_i).
inline Int m_value(const SubsetInvariants& inv, const Ideal& kappa) {
    Int m = 1;
    for (const auto& d : inv.factors) m = checked_mul(m, (kappa + d).norm());
    return m;
}

/// tors(coker(x -> xC)) realized as Sat/Lambda where Lambda is the image
/// lattice in Z^{deg*k} and Sat its saturation.
class TorsionModule {
public:
    explicit TorsionModule(const CoeffMatrix& c) : ring_(c.ring()), k_(c.cols()) {
        image_ = hnf(restriction_of_scalars(c));
        sat_ = saturate(image_);
        IntMatrix t(0, sat_.rows());
        for (std::size_t i = 0; i < image_.rows(); ++i) {
            auto co = coordinates(sat_, image_.row(i));
            if (!co) throw InternalError("image not inside its saturation");
            t.append_row(*co);
        }
        rel_ = hnf(std::move(t));
        if (!is_full_rank_square_hnf(rel_)) throw InternalError("relation lattice not of full rank");
    }

    const Ring& ring() const { return ring_; }
    std::size_t width() const { return k_; }
    Int size() const { return lattice_index(rel_); }

    /// Least positive integer killing the module.
    Int exponent() const {
        auto inv = smith_invariants(rel_);
        return inv.empty() ? 1 : inv.back();
    }

    std::vector<Int> abelian_invariants() const {
        std::vector<Int> out;
        for (Int d : smith_invariants(rel_))
            if (d > 1) out.push_back(d);
        return out;
    }

    /// Canonical representative of the class of x; throws if x is not torsion.
    std::vector<Element> canonical(const std::vector<Element>& x) const {
        auto z = sat_coords(x);
        reduce_mod_full_rank(rel_, z);
        return from_sat_coords(z);
    }

    bool is_zero(const std::vector<Element>& x) const {
        auto z = sat_coords(x);
        return lattice_contains(rel_, z);
    }

    std::vector<std::vector<Element>> elements() const {
        std::vector<std::vector<Element>> out;
        const std::size_t n = rel_.rows();
        std::vector<Int> z(n, 0);
        if (size() > 10'000'000) throw BudgetExceeded("torsion module too large to enumerate");
        for (;;) {
            std::vector<Int> y = z;
            reduce_mod_full_rank(rel_, y);
            out.push_back(from_sat_coords(y));
            std::size_t i = 0;
            while (i < n && ++z[i] == rel_(i, i)) z[i++] = 0;
            if (i == n) break;
        }
        return out;
    }

    std::vector<std::vector<Element>> generators() const {
        std::vector<std::vector<Element>> out;
        for (std::size_t i = 0; i < sat_.rows(); ++i) {
            std::vector<Int> z(sat_.rows(), 0);
            z[i] = 1;
            out.push_back(from_sat_coords(z));
        }
        return out;
    }

    std::vector<Element> act(const Element& a, const std::vector<Element>& x) const {
        std::vector<Element> y;
        for (const auto& e : x) y.push_back(ring_.mul(a, e));
        return canonical(y);
    }

    /// {a in O : a*x = 0 in the module}.
    Ideal annihilator(const std::vector<Element>& x) const {
        sat_coords(x);
        const std::size_t deg = static_cast<std::size_t>(ring_.degree());
        IntMatrix act(deg, deg * k_);
        std::vector<Element> cur = x;
        for (std::size_t t = 0; t < deg; ++t) {
            for (std::size_t j = 0; j < k_; ++j) {
                auto co = ring_.coords(cur[j]);
                for (std::size_t s = 0; s < deg; ++s) act(t, deg * j + s) = co[s];
            }
            if (t + 1 < deg)
                for (auto& e : cur) e = ring_.times_omega(e);
        }
        IntMatrix ann = preimage(act, image_);
        std::vector<Element> basis;
        for (std::size_t i = 0; i < ann.rows(); ++i) basis.push_back(ring_.from_coords(ann.row(i)));
        return Ideal::from_zbasis(ring_, basis);
    }

    Ideal module_annihilator() const {
        Ideal out = Ideal::unit(ring_);
        for (const auto& g : generators()) out = ideal_intersection(out, annihilator(g));
        return out;
    }

private:
    std::vector<Int> flatten(const std::vector<Element>& x) const {
        if (x.size() != k_) throw ElementNotInModule("wrong vector length");
        std::vector<Int> v;
        for (const auto& e : x)
            for (Int c : ring_.coords(e)) v.push_back(c);
        return v;
    }

    std::vector<Int> sat_coords(const std::vector<Element>& x) const {
        auto co = coordinates(sat_, flatten(x));
        if (!co) throw ElementNotInModule("vector is not a torsion class of the cokernel");
        return *co;
    }

    std::vector<Element> from_sat_coords(const std::vector<Int>& z) const {
        const std::size_t deg = static_cast<std::size_t>(ring_.degree());
        std::vector<Int> v(deg * k_, 0);
        for (std::size_t i = 0; i < sat_.rows(); ++i)
            if (z[i] != 0)
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_add(v[j], checked_mul(z[i], sat_(i, j)));
        std::vector<Element> out;
        for (std::size_t j = 0; j < k_; ++j) out.push_back(ring_.from_coords(std::span<const Int>(v).subspan(deg * j, deg)));
        return out;
    }

    Ring ring_;
    std::size_t k_;
    IntMatrix image_, sat_, rel_;
};

inline TorsionModule torsion_cokernel(const CoeffMatrix& c) { return TorsionModule(c); }

inline Ideal annihilator(const TorsionModule& m, const std::vector<Element>& x) { return m.annihilator(x); }

} // namespace quasichar
