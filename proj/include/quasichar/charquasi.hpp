#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "layers.hpp"

namespace quasichar {

enum class ConstituentPath { automatic, subset_sum, layer_poset };

struct ConstituentOptions {
    ConstituentPath path = ConstituentPath::automatic;
    std::size_t subset_bound = 22;
    unsigned threads = 0;
};

/// f^k(t) = sum over all J of (-1)^|J| m(J, k) t^(l - r(J)), for every k | period.
inline QuasiPolynomial constituents_by_subsets(const Arrangement& a, const Ideal& period, unsigned threads = 0) {
    const Ring& ring = a.ring();
    const auto divs = divisors(period);
    const std::size_t nk = divs.size(), ell = a.ell();
    const unsigned workers = resolve_threads(threads);

    struct Tally {
        std::vector<std::vector<Int>> coeff;
        std::unordered_map<std::vector<Int>, std::vector<Int>, VectorHash> cache;
    };
    std::vector<Tally> per(workers);
    for (auto& t : per) t.coeff.assign(nk, std::vector<Int>(ell + 1, 0));

    if (a.size() > 0) {
        MinorTable table(a, threads);
        sweep_subsets(table, a.size(), threads, [&](const std::vector<std::size_t>& j, const std::vector<IdealSum>& e, unsigned w) {
            Tally& t = per[w];
            std::vector<Int> key;
            std::size_t r = 0;
            while (r < e.size() && !e[r].is_zero()) {
                Ideal v = e[r].value();
                key.insert(key.end(), {v.a(), v.b(), v.c()});
                ++r;
            }
            auto it = t.cache.find(key);
            if (it == t.cache.end()) {
                SubsetInvariants inv = invariants_from_sums(ring, e);
                std::vector<Int> ms;
                for (const auto& k : divs) ms.push_back(m_value(inv, k));
                it = t.cache.emplace(std::move(key), std::move(ms)).first;
            }
            const bool odd = j.size() % 2 == 1;
            for (std::size_t q = 0; q < nk; ++q) {
                Int& c = t.coeff[q][ell - r];
                c = odd ? checked_sub(c, it->second[q]) : checked_add(c, it->second[q]);
            }
        });
    }

    std::vector<std::pair<Ideal, Polynomial>> cons;
    for (std::size_t q = 0; q < nk; ++q) {
        std::vector<Int> c(ell + 1, 0);
        c[ell] = 1;
        for (const auto& t : per)
            for (std::size_t d = 0; d <= ell; ++d) c[d] = checked_add(c[d], t.coeff[q][d]);
        cons.push_back({divs[q], Polynomial(std::move(c))});
    }
    return QuasiPolynomial(period, std::move(cons));
}

/// chi^k of the layer poset for every k | period.
inline QuasiPolynomial constituents_by_layers(const LayerPoset& p) {
    std::vector<std::pair<Ideal, Polynomial>> cons;
    for (const auto& k : divisors(p.period())) cons.push_back({k, kappa_characteristic_polynomial(p, k)});
    return QuasiPolynomial(p.period(), std::move(cons));
}

inline QuasiPolynomial constituents(const Arrangement& a, ConstituentOptions opt = {}) {
    ConstituentPath path = opt.path;
    if (path == ConstituentPath::automatic)
        path = a.size() <= opt.subset_bound ? ConstituentPath::subset_sum : ConstituentPath::layer_poset;
    if (path == ConstituentPath::subset_sum) {
        if (a.size() > opt.subset_bound)
            throw PathInfeasible("subset-sum path needs n <= " + std::to_string(opt.subset_bound) + ", got n = " +
                                 std::to_string(a.size()));
        return constituents_by_subsets(a, lcm_period(a, opt.threads), opt.threads);
    }
    LayerOptions lo;
    lo.threads = opt.threads;
    return constituents_by_layers(LayerPoset(a, lo));
}

/// Number of points of (O/a)^l off every reduced hyperplane.
inline Int evaluate(const Arrangement& a, const Ideal& ideal, ConstituentOptions opt = {}) {
    if (!(a.ring() == ideal.ring())) throw RingMismatch("ideal and arrangement over different rings");
    return qp_evaluate(constituents(a, opt), ideal);
}

/// Evidence that the lcm period is the minimum period.
struct MinimalityCertificate {
    Ideal period;
    std::vector<std::optional<Ideal>> rho_by_dim;  // index r: lcm of d_{J,r(J)} with r(J) = l - r
    Ideal minimum;                                 // from qp_minimum_period
    struct Witness {
        Ideal prime;
        Ideal kappa1, kappa2;  // kappa1 + period/prime == kappa2 + period/prime
        Polynomial f1, f2;
    };
    std::vector<Witness> witnesses;
};

inline MinimalityCertificate minimality_certificate(const Arrangement& a, ConstituentOptions opt = {}) {
    PeriodData pd = period_data(a, opt.threads);
    MinimalityCertificate cert{pd.period, std::vector<std::optional<Ideal>>(a.ell() + 1), Ideal::unit(a.ring()), {}};
    Ideal joined = Ideal::unit(a.ring());
    for (std::size_t rank = 1; rank <= a.ell(); ++rank)
        if (pd.by_rank[rank]) {
            cert.rho_by_dim[a.ell() - rank] = pd.by_rank[rank];
            joined = ideal_intersection(joined, *pd.by_rank[rank]);
        }
    if (!(joined == pd.period)) throw CertificateFailure("per-dimension periods do not recombine to the lcm period");

    QuasiPolynomial q = constituents(a, opt);
    if (!(q.period() == pd.period)) throw CertificateFailure("constituent period differs from lcm period");
    cert.minimum = qp_minimum_period(q).first;
    if (!(cert.minimum == pd.period)) throw CertificateFailure("a proper divisor of the lcm period is a period");

    if (pd.period.is_unit()) return cert;
    const auto divs = divisors(pd.period);
    for (const auto& [p, e] : factor_ideal(pd.period).factors) {
        Ideal smaller = ideal_quotient(pd.period, p);
        std::optional<MinimalityCertificate::Witness> found;
        for (std::size_t i = 0; i < divs.size() && !found; ++i)
            for (std::size_t j = i + 1; j < divs.size() && !found; ++j)
                if (divs[i] + smaller == divs[j] + smaller && !(q.constituent(divs[i]) == q.constituent(divs[j])))
                    found = MinimalityCertificate::Witness{p, divs[i], divs[j], q.constituent(divs[i]), q.constituent(divs[j])};
        if (!found) throw CertificateFailure("no witness for prime " + p.hnf_string());
        cert.witnesses.push_back(*found);
    }
    return cert;
}

/// The arrangement over O_S, S generated by the given elements: ideals of
/// O_S correspond to S-coprime ideals of O.
struct Localization {
    std::vector<Ideal> inverted_primes;  // primes of the period meeting S
    Ideal period;                         // S-coprime part of the period
    QuasiPolynomial quasi;                // constituents f^{delta cap O}
};

/// Primes dividing some <s>, restricted to the factors of `x`; and the S-coprime part of x.
inline std::pair<std::vector<Ideal>, Ideal> strip_primes(const Ideal& x, const std::vector<Element>& s) {
    const Ring& ring = x.ring();
    std::vector<Ideal> hit;
    Ideal rest = Ideal::unit(ring);
    for (const auto& [p, e] : factor_ideal(x).factors) {
        bool meets = false;
        for (const auto& g : s) meets = meets || p.contains(g);
        if (meets) hit.push_back(p);
        else rest = rest * ideal_power(p, e);
    }
    return {hit, rest};
}

inline Localization localize(const Arrangement& a, const std::vector<Element>& s, ConstituentOptions opt = {}) {
    for (const auto& g : s)
        if (g.is_zero()) throw ZeroInMultiplicativeSet("0 cannot be inverted");
    QuasiPolynomial q = constituents(a, opt);
    auto [hit, rest] = strip_primes(q.period(), s);
    std::vector<std::pair<Ideal, Polynomial>> cons;
    for (const auto& d : divisors(rest)) cons.push_back({d, q.constituent(d)});
    return {hit, rest, QuasiPolynomial(rest, std::move(cons))};
}

/// Layer poset of the localized arrangement; its layers live in (K/O_S)^l
/// with the same y/m coordinates.
inline LayerPoset localized_layer_poset(const Arrangement& a, const std::vector<Element>& s, unsigned threads = 0) {
    Ideal rho = lcm_period(a, threads);
    Ideal m = Ideal::of_integer(a.ring(), rho.min_integer());
    LayerOptions lo;
    lo.threads = threads;
    lo.modulus = strip_primes(m, s).second;
    return LayerPoset(a, lo);
}

/// Compares the localized poset with the kappa-torsion subposet of the full
/// poset under y mod M_X -> y mod M_X^S. Returns an empty string on success.
inline std::string compare_localized_poset(const LayerPoset& full, const LayerPoset& local, const Ideal& kappa) {
    auto sub = kappa_torsion_subposet(full, kappa);
    if (sub.size() != local.layers().size())
        return "size mismatch: " + std::to_string(sub.size()) + " vs " + std::to_string(local.layers().size());
    std::unordered_map<std::size_t, std::size_t> eta;
    std::vector<char> hit(local.layers().size(), 0);
    for (auto id : sub) {
        const Layer& z = full.layers()[id];
        auto w = local.find(z.flat, local.project(z.flat, z.label));
        if (!w) return "layer " + full.point_string(z) + " has no image";
        if (hit[*w]) return "map is not injective";
        hit[*w] = 1;
        eta[id] = *w;
        const Layer& y = local.layers()[*w];
        if (y.dim != z.dim) return "dimension mismatch";
        if (y.mobius != z.mobius) return "Möbius mismatch at " + full.point_string(z);
        if (!(y.tau == z.tau)) return "annihilator mismatch at " + full.point_string(z);
    }
    for (auto id : sub) {
        std::vector<std::size_t> mapped;
        for (auto c : full.layers()[id].covers) mapped.push_back(eta.at(c));
        std::sort(mapped.begin(), mapped.end());
        if (mapped != local.layers()[eta.at(id)].covers) return "covering relations differ";
    }
    return {};
}

} // namespace quasichar
