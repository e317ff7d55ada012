#pragma once

// Random instance generators and property checks shared by the unit tests
// and the acceptance runner.  Each check returns a tally; a clean run has
// failures == 0.

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <quasichar.hpp>

namespace qctest {

using namespace quasichar;
using Rng = std::mt19937_64;

#ifndef QC_DATA_DIR
#define QC_DATA_DIR "data"
#endif

inline std::string data_path(const std::string& file) { return std::string(QC_DATA_DIR) + "/" + file; }

struct Tally {
    std::size_t instances = 0;  // random instances drawn (0 when each case is one instance)
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first;

    void fail(const std::string& msg) {
        if (failures++ == 0) first = msg;
    }
    bool ok() const { return failures == 0; }
    std::string summary() const {
        std::string s = instances ? std::to_string(instances) + " instances, " : "";
        s += std::to_string(cases) + " checks, " + std::to_string(failures) + " failures";
        if (!ok()) s += " (first: " + first + ")";
        return s;
    }
};

inline Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline const std::vector<Ring>& test_rings() {
    static const std::vector<Ring> rings = {Ring::integers(),     Ring::quadratic(-1), Ring::quadratic(-5),
                                            Ring::quadratic(5),   Ring::quadratic(-3), Ring::quadratic(2),
                                            Ring::quadratic(-2),  Ring::quadratic(3)};
    return rings;
}

inline const Ring& random_ring(Rng& rng) {
    const auto& r = test_rings();
    return r[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(r.size()) - 1))];
}

inline Element random_element(const Ring& ring, Rng& rng, Int bound) {
    return {uniform(rng, -bound, bound), ring.is_integers() ? 0 : uniform(rng, -bound, bound)};
}

inline Element random_nonzero(const Ring& ring, Rng& rng, Int bound) {
    Element e;
    do e = random_element(ring, rng, bound);
    while (e.is_zero());
    return e;
}

/// A random nonzero ideal with norm at most max_norm, from 1 to 3 random generators.
inline Ideal random_ideal(const Ring& ring, Rng& rng, Int max_norm) {
    while (true) {
        std::vector<Element> g;
        const Int count = uniform(rng, 1, 3);
        for (Int i = 0; i < count; ++i) g.push_back(random_element(ring, rng, 6));
        bool any = false;
        for (const auto& e : g) any = any || !e.is_zero();
        if (!any) continue;
        Ideal x = Ideal::from_generators(ring, g);
        if (x.norm() <= max_norm) return x;
    }
}

inline Arrangement random_arrangement(const Ring& ring, Rng& rng, std::size_t ell, std::size_t n, Int bound) {
    std::vector<std::vector<Element>> cols;
    while (cols.size() < n) {
        std::vector<Element> c;
        bool nonzero = false;
        for (std::size_t i = 0; i < ell; ++i) {
            c.push_back(random_element(ring, rng, bound));
            nonzero = nonzero || !c.back().is_zero();
        }
        if (nonzero) cols.push_back(std::move(c));
    }
    return Arrangement(ring, ell, std::move(cols));
}

inline CoeffMatrix random_matrix(const Ring& ring, Rng& rng, std::size_t rows, std::size_t cols, Int bound) {
    CoeffMatrix c(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) c(i, j) = random_element(ring, rng, bound);
    return c;
}

/// Runs a predicate on a random instance; instances whose arithmetic leaves
/// the 64-bit budget count as rejected draws.
template <class F>
bool fits_budget(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::budget) throw;
        return false;
    }
}

/// Small arrangement whose layer poset stays small: modest exponent m.
inline Arrangement random_small_arrangement(Rng& rng, Int max_exponent = 60) {
    while (true) {
        const Ring& ring = random_ring(rng);
        const std::size_t ell = static_cast<std::size_t>(uniform(rng, 1, 3));
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, ell == 3 ? 4 : 5));
        Arrangement a = random_arrangement(ring, rng, ell, n, ell == 3 ? 1 : 3);
        if (fits_budget([&] { return lcm_period(a).min_integer() <= max_exponent; })) return a;
    }
}

inline std::string describe(const Arrangement& a) {
    std::ostringstream s;
    s << a.ring().name() << " l=" << a.ell() << " [";
    for (std::size_t j = 0; j < a.size(); ++j) {
        s << (j ? " (" : "(");
        for (std::size_t i = 0; i < a.ell(); ++i) s << (i ? "," : "") << a.ring().format(a.column(j)[i]);
        s << ")";
    }
    return s.str() + "]";
}

// ---------------------------------------------------------------------------
// Ideal arithmetic laws

inline void check_ideal_laws_once(const Ring& ring, Rng& rng, Tally& t) {
    Ideal x = random_ideal(ring, rng, 60), y = random_ideal(ring, rng, 60), z = random_ideal(ring, rng, 60);
    std::string where = ring.name() + " " + x.hnf_string() + " " + y.hnf_string() + " " + z.hnf_string();
    ++t.cases;
    Ideal s = x + y, p = x * y, m = ideal_intersection(x, y);
    if (!(s * m == p)) t.fail("(a+b)(a^b) != ab at " + where);
    if (!s.divides(x) || !s.divides(y)) t.fail("a+b does not divide both at " + where);
    if (!x.divides(m) || !y.divides(m)) t.fail("a^b not a common multiple at " + where);
    if (p.norm() != x.norm() * y.norm()) t.fail("N(ab) != N(a)N(b) at " + where);
    if (!(x * (y + z) == x * y + x * z)) t.fail("distributivity at " + where);
    if (!((x * y) * z == x * (y * z))) t.fail("associativity at " + where);
    if (!(x * y == y * x) || !(x + y == y + x)) t.fail("commutativity at " + where);
    if (!(ideal_quotient(p, y) == x)) t.fail("(ab)/b != a at " + where);
    if (!(inverse(x) * x).is_integral() || !(inverse(x) * x).to_integral().is_unit()) t.fail("a a^-1 != O at " + where);
    if (!(factor_ideal(x).product(ring) == x)) t.fail("factorization does not reassemble at " + where);

    // Canonical form: a shuffled, padded generator set gives the same HNF.
    std::vector<Element> gens = x.generators();
    gens.push_back(ring.mul(random_element(ring, rng, 4), gens[0]));
    if (gens.size() > 1) gens.push_back(gens[0] + gens[1]);
    std::shuffle(gens.begin(), gens.end(), rng);
    if (!(Ideal::from_generators(ring, gens) == x)) t.fail("HNF not canonical at " + where);

    // Colon against an element-wise oracle: w in (x : y) iff w*g in x for generators g of y.
    Ideal colon = ideal_colon(x, y);
    for (const auto& w : residues(x))
        if (!w.is_zero()) {
            bool in = true;
            for (const auto& g : y.generators()) in = in && x.contains(ring.mul(w, g));
            if (in != colon.contains(w)) {
                t.fail("colon disagrees with element-wise oracle at " + where);
                break;
            }
        }
    if (!colon.contains(x)) t.fail("(a:k) does not contain a at " + where);
}

inline Tally check_ideal_laws(Rng& rng, std::size_t cases) {
    Tally t;
    for (std::size_t i = 0; i < cases; ++i) check_ideal_laws_once(test_rings()[i % test_rings().size()], rng, t);
    return t;
}

// ---------------------------------------------------------------------------
// (O/a)[k] = O/(k+a): k-torsion of the explicit residue ring

inline Tally check_torsion_counts(Rng& rng, std::size_t cases) {
    Tally t;
    for (std::size_t i = 0; i < cases; ++i) {
        const Ring& ring = test_rings()[i % test_rings().size()];
        Ideal a = random_ideal(ring, rng, 30), k = random_ideal(ring, rng, 30);
        ++t.cases;
        Int count = 0;
        for (const auto& x : residues(a)) {
            bool killed = true;
            for (const auto& g : k.generators()) killed = killed && a.contains(ring.mul(g, x));
            count += killed;
        }
        if (count != (k + a).norm())
            t.fail(ring.name() + " a=" + a.hnf_string() + " k=" + k.hnf_string() + ": " + std::to_string(count) + " vs " +
                   std::to_string((k + a).norm()));
    }
    return t;
}

// ---------------------------------------------------------------------------
// |ker(O/a)^l -> (O/a)^k| = prod N(a + d_i) N(a)^(l - r)

inline Tally check_kernel_counts(Rng& rng, std::size_t cases) {
    Tally t;
    for (std::size_t i = 0; i < cases; ++i) {
        const Ring& ring = test_rings()[i % test_rings().size()];
        const std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 3)), cols = static_cast<std::size_t>(uniform(rng, 1, 3));
        CoeffMatrix c = random_matrix(ring, rng, rows, cols, 3);
        Ideal a = random_ideal(ring, rng, 16);
        ++t.cases;
        SubsetInvariants inv = invariant_factors(c);
        Int formula = 1;
        for (const auto& d : inv.factors) formula *= (a + d).norm();
        for (std::size_t k = inv.rank; k < rows; ++k) formula *= a.norm();
        Int brute = brute_count_kernel(c, a);
        if (brute != formula)
            t.fail(ring.name() + " a=" + a.hnf_string() + ": brute " + std::to_string(brute) + " formula " + std::to_string(formula));
    }
    return t;
}

// ---------------------------------------------------------------------------
// f^(kk') = f^k + f^k' - f^<1> for comaximal k, k' when every d_{J,r(J)} is a prime power

inline bool is_prime_power(const Ideal& x) { return x.is_unit() || factor_ideal(x).factors.size() == 1; }

inline void check_additivity(const QuasiPolynomial& q, const std::string& where, Tally& t) {
    const auto divs = divisors(q.period());
    const Polynomial& f1 = q.constituent(Ideal::unit(q.ring()));
    for (const auto& k : divs)
        for (const auto& k2 : divs) {
            if (!(k + k2).is_unit()) continue;
            ++t.cases;
            if (!(q.constituent(k * k2) == q.constituent(k) + q.constituent(k2) - f1))
                t.fail(where + " k=" + factored_string(k) + " k'=" + factored_string(k2));
        }
}

inline Tally check_additivity_random(Rng& rng, std::size_t cases) {
    Tally t;
    std::size_t attempts = 0;
    while (t.instances < cases && attempts < 100 * cases) {
        ++attempts;
        const std::size_t ell = static_cast<std::size_t>(uniform(rng, 2, 3));
        Arrangement a = random_arrangement(random_ring(rng), rng, ell, static_cast<std::size_t>(uniform(rng, 2, 4)), ell == 3 ? 1 : 3);
        std::optional<QuasiPolynomial> q;
        bool hyp = fits_budget([&] {
            for (const auto& e : subset_data(a).entries)
                if (!e.invariants.factors.empty() && !is_prime_power(e.invariants.factors.back())) return false;
            q = constituents(a);
            return factor_ideal(q->period()).factors.size() >= 2;
        });
        if (!hyp) continue;
        ++t.instances;
        check_additivity(*q, describe(a), t);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Layer posets: sign alternation, order ideals, per-flat counts

inline void check_mobius_signs(const LayerPoset& p, const std::string& where, Tally& t) {
    for (const auto& z : p.layers()) {
        ++t.cases;
        const Int sign = (p.ell() - z.dim) % 2 == 0 ? 1 : -1;
        if (sign * z.mobius <= 0) t.fail(where + " layer " + p.point_string(z) + " mu=" + std::to_string(z.mobius));
    }
}

/// Every layer below a k-torsion layer is k-torsion; checked by walking covers.
inline void check_order_ideal(const LayerPoset& p, const Ideal& kappa, const std::string& where, Tally& t) {
    ++t.cases;
    std::vector<char> seen(p.layers().size(), 0);
    std::vector<std::size_t> stack;
    for (const auto& z : p.layers())
        if (z.tau.divides(kappa)) stack.push_back(z.id);
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        if (seen[id]) continue;
        seen[id] = 1;
        if (!p.layers()[id].tau.divides(kappa)) {
            t.fail(where + " k=" + factored_string(kappa) + " layer " + p.point_string(p.layers()[id]));
            return;
        }
        for (auto c : p.layers()[id].covers) stack.push_back(c);
    }
    std::vector<std::size_t> sub = kappa_torsion_subposet(p, kappa);
    std::size_t expect = 0;
    for (const auto& z : p.layers()) expect += z.tau.divides(kappa);
    if (sub.size() != expect) t.fail(where + " subposet size mismatch");
}

/// For every J inside J_X that spans X: the k-torsion layers at X whose index
/// set contains J number m(J, k).
inline void check_flat_counts(const Arrangement& a, const LayerPoset& p, const std::string& where, Tally& t,
                              std::size_t max_members = 10) {
    const auto divs = divisors(p.period());
    for (const auto& x : p.flats()) {
        const std::size_t n = std::min(x.members.size(), max_members);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::size_t> j;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) j.push_back(x.members[i]);
            SubsetInvariants inv = j.empty() ? SubsetInvariants{} : invariant_factors(a.coefficient_matrix(j));
            if (static_cast<std::size_t>(inv.rank) != x.rank) continue;
            for (const auto& k : divs) {
                ++t.cases;
                Int count = 0;
                for (auto id : p.layers_at(x.id)) {
                    const Layer& z = p.layers()[id];
                    count += z.tau.divides(k) && std::includes(z.members.begin(), z.members.end(), j.begin(), j.end());
                }
                if (count != m_value(inv, k))
                    t.fail(where + " flat " + std::to_string(x.id) + " k=" + factored_string(k) + ": " + std::to_string(count) +
                           " vs " + std::to_string(m_value(inv, k)));
            }
        }
    }
}

inline Tally check_poset_properties(Rng& rng, std::size_t cases, const std::function<void(const Arrangement&, const LayerPoset&, Tally&)>& body) {
    Tally t;
    for (std::size_t i = 0; i < cases; ++i) {
        Arrangement a = random_small_arrangement(rng);
        LayerPoset p(a);
        ++t.instances;
        body(a, p, t);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Positivity and duality on the H-type root systems

inline Tally check_positivity(const RootSystemData& rs, const QuasiPolynomial& q, Int max_norm = 40) {
    Tally t;
    for (const auto& x : ideals_up_to_norm(q.ring(), max_norm)) {
        ++t.cases;
        Int v = qp_evaluate(q, x);
        if ((v > 0) != (x.norm() >= rs.coxeter_number))
            t.fail(rs.name + " at " + x.hnf_string() + " (N=" + std::to_string(x.norm()) + "): " + std::to_string(v));
    }
    return t;
}

inline bool satisfies_duality(const Polynomial& f, std::size_t ell, Int h) {
    Polynomial g = f.reflect(h);
    return (ell % 2 == 0 ? g : -g) == f;
}

} // namespace qctest
