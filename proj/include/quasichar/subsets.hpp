#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "arrangement.hpp"
#include "parallel.hpp"

namespace quasichar {

inline Int binom(std::size_t n, std::size_t k) {
    static const auto table = [] {
        std::array<std::array<Int, 65>, 65> t{};
        for (std::size_t i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (std::size_t j = 1; j <= i; ++j) {
                Int v;
                if (__builtin_add_overflow(t[i - 1][j - 1], t[i - 1][j], &v)) v = INT64_MAX;
                t[i][j] = v;
            }
        }
        return t;
    }();
    if (k > n || n > 64) return 0;
    return table[n][k];
}

/// Colex rank of a sorted index set.
inline std::size_t subset_rank(std::span<const std::size_t> s) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += static_cast<std::size_t>(binom(s[i], i + 1));
    return r;
}

inline std::vector<std::size_t> subset_unrank(std::size_t rank, std::size_t k) {
    std::vector<std::size_t> s(k);
    for (std::size_t i = k; i >= 1; --i) {
        std::size_t c = i - 1;
        while (static_cast<std::size_t>(binom(c + 1, i)) <= rank) ++c;
        s[i - 1] = c;
        rank -= static_cast<std::size_t>(binom(c, i));
    }
    return s;
}

/// Advances a sorted k-subset of [n] in colex order; false when exhausted.
inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t limit = (i + 1 < k) ? s[i + 1] : n;
        if (s[i] + 1 < limit) {
            ++s[i];
            for (std::size_t j = 0; j < i; ++j) s[j] = j;
            return true;
        }
    }
    return false;
}

/// HNF triple of an ideal, a = 0 marking the zero ideal.
struct IdealSlot {
    Int a = 0, b = 0, c = 0;

    bool is_zero() const { return a == 0; }
    bool operator==(const IdealSlot&) const = default;
};

/// For every column subset S with |S| <= min(l, n), the ideal G(S)
/// generated by all maximal minors of C_S. Minors of size i are built
/// from those of size i-1 by expansion along the last column.
class MinorTable {
public:
    explicit MinorTable(const Arrangement& a, unsigned threads = 0) : ring_(a.ring()), n_(a.size()), ell_(a.ell()) {
        max_ = std::min(ell_, n_);
        if (ell_ > 16) throw PathInfeasible("ambient rank above 16 is not supported by the minor table");
        generated_.resize(max_ + 1);
        if (max_ == 0) return;

        row_sets_.resize(ell_ + 1);
        row_rank_.assign(std::size_t{1} << ell_, 0);
        for (unsigned mask = 0; mask < (1u << ell_); ++mask) {
            std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < ell_; ++i)
                if (mask & (1u << i)) idx.push_back(i);
            row_rank_[mask] = subset_rank(idx);
            row_sets_[k].push_back(mask);
        }
        for (auto& v : row_sets_)
            std::sort(v.begin(), v.end(), [&](unsigned x, unsigned y) { return row_rank_[x] < row_rank_[y]; });

        std::vector<Element> prev(n_ * ell_);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < ell_; ++i) prev[j * ell_ + i] = a.column(j)[i];
        fill_generated(1, prev);

        for (std::size_t size = 2; size <= max_; ++size) {
            const std::size_t count = static_cast<std::size_t>(binom(n_, size));
            const std::size_t rows = row_sets_[size].size(), prev_rows = row_sets_[size - 1].size();
            std::vector<Element> cur(count * rows);
            const std::size_t chunk = 4096;
            parallel_for((count + chunk - 1) / chunk, threads, [&](std::size_t ci, unsigned) {
                std::size_t begin = ci * chunk, end = std::min(count, begin + chunk);
                auto s = subset_unrank(begin, size);
                for (std::size_t rk = begin; rk < end; ++rk) {
                    std::size_t last = s[size - 1];
                    std::size_t sub = rk - static_cast<std::size_t>(binom(last, size));
                    for (std::size_t ri = 0; ri < rows; ++ri) {
                        unsigned rm = row_sets_[size][ri];
                        Element acc;
                        int pos = 0;
                        for (std::size_t r = 0; r < ell_; ++r) {
                            if (!(rm & (1u << r))) continue;
                            const Element& entry = a.column(last)[r];
                            if (!entry.is_zero()) {
                                const Element& minor = prev[sub * prev_rows + row_rank_[rm & ~(1u << r)]];
                                Element term = ring_.mul(entry, minor);
                                if ((pos + static_cast<int>(size) - 1) % 2 != 0) term = -term;
                                acc = acc + term;
                            }
                            ++pos;
                        }
                        cur[rk * rows + ri] = acc;
                    }
                    next_subset(s, n_);
                }
            });
            prev = std::move(cur);
            fill_generated(size, prev);
        }
    }

    const Ring& ring() const { return ring_; }
    std::size_t max_size() const { return max_; }
    std::size_t columns() const { return n_; }
    std::size_t ell() const { return ell_; }

    const IdealSlot& generated(std::size_t size, std::size_t rank) const { return generated_[size][rank]; }
    const IdealSlot& generated(std::span<const std::size_t> s) const { return generated_[s.size()][subset_rank(s)]; }

    void add_to(IdealSum& sum, const IdealSlot& slot) const {
        if (!slot.is_zero()) sum.add(Ideal::from_trusted_hnf(ring_, slot.a, slot.b, slot.c));
    }

    /// E_1(J), ..., E_min(l,|J|)(J) for an arbitrary sorted J.
    std::vector<IdealSum> determinantal(std::span<const std::size_t> j) const {
        std::vector<IdealSum> e;
        const std::size_t top = std::min(max_, j.size());
        for (std::size_t i = 1; i <= top; ++i) {
            IdealSum sum(ring_);
            std::vector<std::size_t> pos(i);
            for (std::size_t k = 0; k < i; ++k) pos[k] = k;
            std::vector<std::size_t> s(i);
            do {
                for (std::size_t k = 0; k < i; ++k) s[k] = j[pos[k]];
                add_to(sum, generated(s));
            } while (!sum.is_unit() && next_subset(pos, j.size()));
            e.push_back(sum);
        }
        return e;
    }

private:
    void fill_generated(std::size_t size, const std::vector<Element>& minors) {
        const std::size_t count = static_cast<std::size_t>(binom(n_, size));
        const std::size_t rows = row_sets_[size].size();
        generated_[size].assign(count, {});
        for (std::size_t rk = 0; rk < count; ++rk) {
            IdealSum sum(ring_);
            for (std::size_t ri = 0; ri < rows && !sum.is_unit(); ++ri) sum.add_element(minors[rk * rows + ri]);
            if (!sum.is_zero()) {
                Ideal v = sum.value();
                generated_[size][rk] = {v.a(), v.b(), v.c()};
            }
        }
    }

    Ring ring_;
    std::size_t n_, ell_, max_ = 0;
    std::vector<std::vector<unsigned>> row_sets_;
    std::vector<std::size_t> row_rank_;
    std::vector<std::vector<IdealSlot>> generated_;
};

/// Rank and invariant factors from E_1, E_2, ... (zero sums mark the rank).
inline SubsetInvariants invariants_from_sums(const Ring& ring, const std::vector<IdealSum>& e) {
    std::vector<Ideal> nonzero;
    for (const auto& s : e) {
        if (s.is_zero()) break;
        nonzero.push_back(s.value());
    }
    return invariants_from_determinantal(ring, nonzero);
}

/// Depth-first sweep over nonempty J with |J| <= max_size, maintaining E_i(J)
/// incrementally: E_i(J + x) = E_i(J) + sum over (i-1)-subsets S of J of G(S + x).
/// visit(J, E, worker) sees E_1..E_min(l,|J|). Work is split by the two
/// smallest elements of J and distributed over threads.
template <class Visit>
void sweep_subsets(const MinorTable& t, std::size_t max_size, unsigned threads, Visit&& visit) {
    const std::size_t n = t.columns(), levels = t.max_size();
    const Ring ring = t.ring();
    if (n == 0 || max_size == 0) return;

    auto extend = [&](const std::vector<std::size_t>& j, const std::vector<IdealSum>& e, std::size_t x) {
        std::vector<IdealSum> ne = e;
        const std::size_t top = std::min(levels, j.size() + 1);
        while (ne.size() < top) ne.emplace_back(ring);
        for (std::size_t i = 1; i <= top; ++i) {
            IdealSum& sum = ne[i - 1];
            if (sum.is_unit()) continue;
            const std::size_t k = i - 1;
            if (k == 0) {
                t.add_to(sum, t.generated(1, x));
                continue;
            }
            std::vector<std::size_t> pos(k);
            for (std::size_t q = 0; q < k; ++q) pos[q] = q;
            const std::size_t tail = static_cast<std::size_t>(binom(x, i));
            do {
                std::size_t rk = tail;
                for (std::size_t q = 0; q < k; ++q) rk += static_cast<std::size_t>(binom(j[pos[q]], q + 1));
                t.add_to(sum, t.generated(i, rk));
            } while (!sum.is_unit() && next_subset(pos, j.size()));
        }
        return ne;
    };

    std::function<void(std::vector<std::size_t>&, const std::vector<IdealSum>&, unsigned)> descend;
    descend = [&](std::vector<std::size_t>& j, const std::vector<IdealSum>& e, unsigned worker) {
        visit(static_cast<const std::vector<std::size_t>&>(j), e, worker);
        if (j.size() >= max_size) return;
        for (std::size_t x = j.back() + 1; x < n; ++x) {
            auto ne = extend(j, e, x);
            j.push_back(x);
            descend(j, ne, worker);
            j.pop_back();
        }
    };

    const std::size_t pairs = max_size >= 2 ? static_cast<std::size_t>(binom(n, 2)) : 0;
    parallel_for(n + pairs, threads, [&](std::size_t task, unsigned worker) {
        std::vector<std::size_t> j;
        std::vector<IdealSum> e;
        if (task < n) {
            e = extend({}, {}, task);
            j = {task};
            visit(static_cast<const std::vector<std::size_t>&>(j), e, worker);
            return;
        }
        auto pair = subset_unrank(task - n, 2);
        std::vector<std::size_t> first{pair[0]};
        e = extend({}, {}, pair[0]);
        e = extend(first, e, pair[1]);
        j = pair;
        descend(j, e, worker);
    });
}

} // namespace quasichar
