#pragma once

#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "period.hpp"
#include "quasipoly.hpp"

namespace quasichar {

/// Fixed-width bitset over column indices.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

    void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool subset_of(const IndexSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    void unite(const IndexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    }

    bool operator==(const IndexSet&) const = default;
    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::vector<std::uint64_t> words_;
};

struct VectorHash {
    template <class T>
    std::size_t operator()(const std::vector<T>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : v) h ^= std::hash<T>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

/// A flat H_X of the arrangement over K.
struct Flat {
    std::size_t id = 0;
    IndexSet indices;                  // J_X
    std::vector<std::size_t> members;  // J_X, sorted
    std::size_t rank = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> basis;    // independent subset of J_X of size rank
    IntMatrix lattice;                 // L_X = H_X meet O^l, saturated, HNF in Z^{deg*l}
    std::vector<std::size_t> below;    // flats strictly below (J_Y a proper subset of J_X)
    std::vector<std::size_t> covers;   // below with rank one less
};

namespace detail {

inline IntMatrix column_restriction(const Arrangement& a, std::size_t j) {
    return restriction_of_scalars(a.coefficient_matrix({j}));
}

inline bool kills(const IntMatrix& lattice, const IntMatrix& col) {
    for (std::size_t i = 0; i < lattice.rows(); ++i)
        for (std::size_t s = 0; s < col.cols(); ++s) {
            Int v = 0;
            for (std::size_t k = 0; k < col.rows(); ++k)
                if (lattice(i, k) != 0) v = checked_add(v, checked_mul(lattice(i, k), col(k, s)));
            if (v != 0) return false;
        }
    return true;
}

} // namespace detail

/// All flats by iterated closure, ordered by (rank, members).
inline std::vector<Flat> intersection_lattice(const Arrangement& a, unsigned threads = 0) {
    const std::size_t n = a.size(), deg = static_cast<std::size_t>(a.ring().degree());
    std::vector<IntMatrix> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(detail::column_restriction(a, j));

    Flat ambient;
    ambient.indices = IndexSet(n);
    ambient.dim = a.ell();
    ambient.lattice = IntMatrix::identity(deg * a.ell());
    std::vector<Flat> flats{ambient};
    std::vector<std::size_t> level{0};

    while (!level.empty()) {
        struct Candidate {
            std::vector<std::size_t> members, basis;
            IntMatrix lattice;
        };
        std::vector<std::vector<Candidate>> found(level.size());
        parallel_for(level.size(), threads, [&](std::size_t li, unsigned) {
            const Flat& f = flats[level[li]];
            IndexSet covered = f.indices;
            for (std::size_t j = 0; j < n; ++j) {
                if (covered.contains(j)) continue;
                IntMatrix img = multiply(f.lattice, cols[j]);
                IntMatrix u = left_kernel(img);
                IntMatrix lat = hnf(multiply(u, f.lattice));
                Candidate c;
                IndexSet set(n);
                for (std::size_t i = 0; i < n; ++i)
                    if (f.indices.contains(i) || i == j || detail::kills(lat, cols[i])) {
                        set.insert(i);
                        c.members.push_back(i);
                    }
                covered.unite(set);
                c.basis = f.basis;
                c.basis.push_back(j);
                std::sort(c.basis.begin(), c.basis.end());
                c.lattice = std::move(lat);
                found[li].push_back(std::move(c));
            }
        });
        std::map<std::vector<std::size_t>, std::size_t> seen;
        std::vector<std::size_t> next;
        for (auto& list : found)
            for (auto& c : list) {
                if (seen.count(c.members)) continue;
                Flat g;
                g.indices = IndexSet(n);
                for (auto i : c.members) g.indices.insert(i);
                g.members = c.members;
                g.rank = c.basis.size();
                g.dim = a.ell() - g.rank;
                g.basis = c.basis;
                g.lattice = std::move(c.lattice);
                seen[g.members] = flats.size();
                next.push_back(flats.size());
                flats.push_back(std::move(g));
            }
        level = std::move(next);
    }

    std::sort(flats.begin(), flats.end(), [](const Flat& x, const Flat& y) {
        if (x.rank != y.rank) return x.rank < y.rank;
        return x.members < y.members;
    });
    for (std::size_t i = 0; i < flats.size(); ++i) flats[i].id = i;
    parallel_for(flats.size(), threads, [&](std::size_t x, unsigned) {
        for (std::size_t y = 0; y < flats.size() && flats[y].rank < flats[x].rank; ++y)
            if (flats[y].indices.subset_of(flats[x].indices)) {
                flats[x].below.push_back(y);
                if (flats[y].rank + 1 == flats[x].rank) flats[x].covers.push_back(y);
            }
    });
    return flats;
}

/// Characteristic polynomial of the arrangement over K from the Möbius
/// function of the intersection lattice.
inline Polynomial whitney_characteristic_polynomial(const std::vector<Flat>& flats, std::size_t ell) {
    std::vector<Int> mu(flats.size(), 0);
    Polynomial chi;
    for (const auto& f : flats) {
        Int m = f.rank == 0 ? 1 : 0;
        for (auto y : f.below) m = checked_sub(m, mu[y]);
        mu[f.id] = m;
        chi.add_term(ell - f.rank, m);
    }
    return chi;
}

/// A layer: the coset of y/m modulo H_X + O^l, for y in O^l.
struct Layer {
    std::size_t id = 0;
    std::size_t flat = 0;
    std::vector<Int> label;  // y in Z^{deg*l}, reduced modulo M_X
    Ideal tau;
    std::size_t dim = 0;
    Int mobius = 0;
    std::vector<std::size_t> members;  // J_Z
    std::vector<std::size_t> covers;   // layers directly below
};

struct LayerOptions {
    std::optional<Ideal> modulus;         // defaults to <m>, m the least positive integer in the period
    unsigned threads = 0;
    std::size_t max_layers = 20'000'000;
};

/// The poset of layers of the torsion arrangement; T_empty is layer 0.
class LayerPoset {
public:
    LayerPoset(const Arrangement& a, LayerOptions opt = {})
        : ring_(a.ring()), ell_(a.ell()), deg_(static_cast<std::size_t>(a.ring().degree())),
          period_(lcm_period(a, opt.threads)), modulus_(Ideal::unit(a.ring())) {
        denominator_ = period_.min_integer();
        modulus_ = opt.modulus ? *opt.modulus : Ideal::of_integer(ring_, denominator_);
        if (!modulus_.divides(Ideal::of_integer(ring_, denominator_)))
            throw InternalError("layer modulus must divide the denominator");
        flats_ = intersection_lattice(a, opt.threads);
        build_layers(a, opt);
        compute_mobius(opt.threads);
    }

    const Ring& ring() const { return ring_; }
    std::size_t ell() const { return ell_; }
    const Ideal& period() const { return period_; }
    const Ideal& modulus() const { return modulus_; }
    Int denominator() const { return denominator_; }
    const std::vector<Flat>& flats() const { return flats_; }
    const std::vector<Layer>& layers() const { return layers_; }
    const std::vector<std::size_t>& layers_at(std::size_t flat) const { return by_flat_[flat]; }
    const IntMatrix& flat_modulus(std::size_t flat) const { return mod_hnf_[flat]; }

    std::vector<Int> project(std::size_t flat, std::vector<Int> y) const {
        reduce_mod_full_rank(mod_hnf_[flat], y);
        return y;
    }

    std::optional<std::size_t> find(std::size_t flat, const std::vector<Int>& reduced) const {
        auto it = index_[flat].find(reduced);
        if (it == index_[flat].end()) return std::nullopt;
        return it->second;
    }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (const auto& l : layers_) e += l.covers.size();
        return e;
    }

    /// Representative x = y/m as text, e.g. "(1/2, 0)".
    std::string point_string(const Layer& z) const {
        std::string s = "(";
        for (std::size_t k = 0; k < ell_; ++k) {
            if (k) s += ", ";
            Element e = deg_ == 1 ? Element{z.label[k], 0} : Element{z.label[2 * k], z.label[2 * k + 1]};
            s += fraction_string(e, denominator_);
        }
        return s + ")";
    }

private:
    std::string fraction_string(Element e, Int m) const {
        if (e.is_zero()) return "0";
        Int g = gcd_int(gcd_int(e.a, e.b), m);
        e = {e.a / g, e.b / g};
        m /= g;
        std::string num = ring_.format(e);
        if (m == 1) return num;
        bool compound = e.a != 0 && e.b != 0;
        return (compound ? "(" + num + ")" : num) + "/" + std::to_string(m);
    }

    IntMatrix modulus_block(std::size_t copies) const {
        IntMatrix mb(0, deg_ * copies);
        for (std::size_t k = 0; k < copies; ++k)
            for (const auto& e : modulus_.basis()) {
                std::vector<Int> row(deg_ * copies, 0);
                auto co = ring_.coords(e);
                for (std::size_t s = 0; s < deg_; ++s) row[deg_ * k + s] = co[s];
                mb.append_row(row);
            }
        return mb;
    }

    Element dot_column(const std::vector<Int>& y, const Arrangement& a, std::size_t j) const {
        Element acc;
        for (std::size_t k = 0; k < ell_; ++k) {
            Element yk = deg_ == 1 ? Element{y[k], 0} : Element{y[2 * k], y[2 * k + 1]};
            acc = acc + ring_.mul(yk, a.column(j)[k]);
        }
        return acc;
    }

    void build_layers(const Arrangement& a, const LayerOptions& opt) {
        const std::size_t nf = flats_.size(), width = deg_ * ell_;
        MinorTable table(a, opt.threads);
        const IntMatrix mod_all = modulus_block(ell_);
        const Int mod_norm = modulus_.norm();

        mod_hnf_.resize(nf);
        std::vector<std::vector<std::vector<Int>>> labels(nf);
        std::atomic<std::size_t> total{0};
        parallel_for(nf, opt.threads, [&](std::size_t x, unsigned) {
            const Flat& f = flats_[x];
            IntMatrix mx = hnf(IntMatrix::stack(f.lattice, mod_all));
            std::unordered_set<std::vector<Int>, VectorHash> set;
            set.insert(std::vector<Int>(width, 0));
            const std::size_t r = f.rank;
            if (r > 0 && mod_norm > 1) {
                const IntMatrix mod_r = modulus_block(r);
                std::vector<std::size_t> pos(r), b(r);
                for (std::size_t q = 0; q < r; ++q) pos[q] = q;
                do {
                    for (std::size_t q = 0; q < r; ++q) b[q] = f.members[pos[q]];
                    const IdealSlot& top = table.generated(b);
                    if (top.is_zero()) continue;
                    Int top_norm = deg_ == 1 ? top.a : checked_mul(top.a, top.c);
                    if (gcd_int(top_norm, mod_norm) == 1) continue;
                    SubsetInvariants inv = invariants_from_sums(ring_, table.determinantal(b));
                    Int order = m_value(inv, modulus_);
                    if (order == 1) continue;
                    IntMatrix lam = preimage(restriction_of_scalars(a.coefficient_matrix(b)), mod_r);
                    std::vector<std::vector<Int>> gens;
                    for (std::size_t i = 0; i < lam.rows(); ++i) {
                        std::vector<Int> g(lam.row(i).begin(), lam.row(i).end());
                        reduce_mod_full_rank(mx, g);
                        bool zero = std::all_of(g.begin(), g.end(), [](Int v) { return v == 0; });
                        if (!zero) gens.push_back(std::move(g));
                    }
                    std::unordered_set<std::vector<Int>, VectorHash> group;
                    std::deque<std::vector<Int>> queue;
                    group.insert(std::vector<Int>(width, 0));
                    queue.push_back(std::vector<Int>(width, 0));
                    while (!queue.empty()) {
                        auto cur = std::move(queue.front());
                        queue.pop_front();
                        for (const auto& g : gens) {
                            std::vector<Int> nx(width);
                            for (std::size_t k = 0; k < width; ++k) nx[k] = checked_add(cur[k], g[k]);
                            reduce_mod_full_rank(mx, nx);
                            if (group.insert(nx).second) queue.push_back(std::move(nx));
                        }
                        if (group.size() > static_cast<std::size_t>(order)) break;
                    }
                    if (group.size() != static_cast<std::size_t>(order))
                        throw InternalError("layer group order differs from m(B, modulus)");
                    for (const auto& v : group) set.insert(v);
                    if (total.load() + set.size() > opt.max_layers)
                        throw ExponentTooLarge("layer count exceeds budget");
                } while (next_subset(pos, f.members.size()));
            }
            std::vector<std::vector<Int>> sorted(set.begin(), set.end());
            std::sort(sorted.begin(), sorted.end());
            total += sorted.size();
            labels[x] = std::move(sorted);
            mod_hnf_[x] = std::move(mx);
        });

        by_flat_.resize(nf);
        index_.resize(nf);
        for (std::size_t x = 0; x < nf; ++x)
            for (auto& y : labels[x]) {
                Layer z;
                z.id = layers_.size();
                z.flat = x;
                z.dim = flats_[x].dim;
                z.label = std::move(y);
                index_[x][z.label] = z.id;
                by_flat_[x].push_back(z.id);
                layers_.push_back(std::move(z));
            }

        parallel_for(layers_.size(), opt.threads, [&](std::size_t id, unsigned) {
            Layer& z = layers_[id];
            const Flat& f = flats_[z.flat];
            for (auto j : f.members)
                if (modulus_.contains(dot_column(z.label, a, j))) z.members.push_back(j);
            // tau(Z) = {c in O : c*y in M_X}
            IntMatrix act(deg_, width);
            for (std::size_t t = 0; t < deg_; ++t)
                for (std::size_t k = 0; k < ell_; ++k) {
                    Element yk = deg_ == 1 ? Element{z.label[k], 0} : Element{z.label[2 * k], z.label[2 * k + 1]};
                    if (t == 1) yk = ring_.times_omega(yk);
                    auto co = ring_.coords(yk);
                    for (std::size_t s = 0; s < deg_; ++s) act(t, deg_ * k + s) = co[s];
                }
            IntMatrix ann = preimage(act, mod_hnf_[z.flat]);
            std::vector<Element> basis;
            for (std::size_t i = 0; i < ann.rows(); ++i) basis.push_back(ring_.from_coords(ann.row(i)));
            z.tau = Ideal::from_zbasis(ring_, basis);
        });
    }

    void compute_mobius(unsigned threads) {
        std::size_t max_rank = 0;
        for (const auto& f : flats_) max_rank = std::max(max_rank, f.rank);
        for (std::size_t r = 0; r <= max_rank; ++r) {
            std::vector<std::size_t> ids;
            for (const auto& f : flats_)
                if (f.rank == r)
                    for (auto id : by_flat_[f.id]) ids.push_back(id);
            parallel_for(ids.size(), threads, [&](std::size_t k, unsigned) {
                Layer& z = layers_[ids[k]];
                const Flat& f = flats_[z.flat];
                Int mu = r == 0 ? 1 : 0;
                for (auto y : f.below) {
                    auto w = find(y, project(y, z.label));
                    if (!w) continue;
                    mu = checked_sub(mu, layers_[*w].mobius);
                    if (flats_[y].rank + 1 == r) z.covers.push_back(*w);
                }
                std::sort(z.covers.begin(), z.covers.end());
                z.mobius = mu;
            });
        }
    }

    Ring ring_;
    std::size_t ell_, deg_;
    Ideal period_, modulus_;
    Int denominator_ = 1;
    std::vector<Flat> flats_;
    std::vector<Layer> layers_;
    std::vector<std::vector<std::size_t>> by_flat_;
    std::vector<std::unordered_map<std::vector<Int>, std::size_t, VectorHash>> index_;
    std::vector<IntMatrix> mod_hnf_;
};

inline LayerPoset layer_poset(const Arrangement& a, LayerOptions opt = {}) { return LayerPoset(a, std::move(opt)); }

/// Layers Z with kappa contained in tau(Z); throws if not downward closed.
inline std::vector<std::size_t> kappa_torsion_subposet(const LayerPoset& p, const Ideal& kappa) {
    Ideal k = kappa + p.period();
    std::vector<std::size_t> out;
    std::vector<char> in(p.layers().size(), 0);
    for (const auto& z : p.layers())
        if (z.tau.divides(k)) {
            out.push_back(z.id);
            in[z.id] = 1;
        }
    for (auto id : out)
        for (auto w : p.layers()[id].covers)
            if (!in[w]) throw InternalError("torsion subposet is not an order ideal");
    return out;
}

inline Polynomial kappa_characteristic_polynomial(const LayerPoset& p, const Ideal& kappa) {
    Polynomial chi;
    for (auto id : kappa_torsion_subposet(p, kappa)) {
        const Layer& z = p.layers()[id];
        chi.add_term(z.dim, z.mobius);
    }
    return chi;
}

/// Möbius value from signed counts of J inside J_Z spanning the same flat.
/// Exponential in |J_Z|; meant for small cross-checks.
inline Int mobius_by_subsets(const Arrangement& a, const LayerPoset& p, const Layer& z) {
    const std::size_t k = z.members.size();
    if (k > 24) throw BudgetExceeded("too many hyperplanes through the layer");
    const std::size_t target = p.flats()[z.flat].rank;
    Int mu = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::size_t> j;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) j.push_back(z.members[i]);
        std::size_t r = j.empty() ? 0 : rank_over_K(a.coefficient_matrix(j));
        if (r == target) mu += (j.size() % 2 == 0) ? 1 : -1;
    }
    return mu;
}

/// DOT digraph of the (kappa-restricted) Hasse diagram.
inline std::string hasse_dot(const LayerPoset& p, const std::optional<Ideal>& kappa = std::nullopt) {
    std::vector<std::size_t> ids;
    if (kappa) ids = kappa_torsion_subposet(p, *kappa);
    else
        for (const auto& z : p.layers()) ids.push_back(z.id);
    std::sort(ids.begin(), ids.end(), [&](std::size_t x, std::size_t y) {
        const Layer &a = p.layers()[x], &b = p.layers()[y];
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.flat != b.flat) return a.flat < b.flat;
        return a.label < b.label;
    });
    std::unordered_map<std::size_t, std::size_t> node;
    for (std::size_t i = 0; i < ids.size(); ++i) node[ids[i]] = i;
    std::ostringstream os;
    os << "digraph layers {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const Layer& z = p.layers()[ids[i]];
        os << "  n" << i << " [label=\"" << p.point_string(z) << " | " << factored_string(z.tau) << " | " << z.mobius
           << "\"];\n";
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const Layer& z = p.layers()[ids[i]];
        for (auto w : z.covers) os << "  n" << node.at(w) << " -> n" << i << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace quasichar
