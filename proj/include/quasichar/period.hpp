#pragma once

#include <optional>
#include <vector>

#include "subsets.hpp"

namespace quasichar {

/// Invariants of every J with 1 <= |J| <= min(l, n).
struct SubsetData {
    struct Entry {
        std::vector<std::size_t> indices;
        SubsetInvariants invariants;
    };
    std::vector<Entry> entries;  // ordered by (|J|, lexicographic J)

    const SubsetInvariants* find(const std::vector<std::size_t>& j) const {
        for (const auto& e : entries)
            if (e.indices == j) return &e.invariants;
        return nullptr;
    }

    /// Number of subsets of each rank.
    std::vector<std::size_t> rank_tally(std::size_t ell) const {
        std::vector<std::size_t> t(ell + 1, 0);
        for (const auto& e : entries) ++t[static_cast<std::size_t>(e.invariants.rank)];
        return t;
    }
};

inline SubsetData subset_data(const Arrangement& a, unsigned threads = 0) {
    MinorTable t(a, threads);
    const std::size_t bound = std::min(a.ell(), a.size());
    std::vector<std::vector<SubsetData::Entry>> per(resolve_threads(threads));
    sweep_subsets(t, bound, threads, [&](const std::vector<std::size_t>& j, const std::vector<IdealSum>& e, unsigned w) {
        per[w].push_back({j, invariants_from_sums(a.ring(), e)});
    });
    SubsetData out;
    for (auto& v : per)
        for (auto& e : v) out.entries.push_back(std::move(e));
    std::sort(out.entries.begin(), out.entries.end(), [](const auto& x, const auto& y) {
        if (x.indices.size() != y.indices.size()) return x.indices.size() < y.indices.size();
        return x.indices < y.indices;
    });
    return out;
}

/// lcm of d_{J,r(J)} grouped by r(J), over the bounded subset range.
struct PeriodData {
    Ideal period;
    std::vector<std::optional<Ideal>> by_rank;  // index r(J)
};

inline PeriodData period_data(const Arrangement& a, unsigned threads = 0) {
    const Ring& ring = a.ring();
    PeriodData out{Ideal::unit(ring), std::vector<std::optional<Ideal>>(a.ell() + 1)};
    if (a.size() == 0) return out;
    MinorTable t(a, threads);
    const std::size_t bound = std::min(a.ell(), a.size());
    std::vector<std::vector<std::optional<Ideal>>> per(resolve_threads(threads), std::vector<std::optional<Ideal>>(a.ell() + 1));
    sweep_subsets(t, bound, threads, [&](const std::vector<std::size_t>&, const std::vector<IdealSum>& e, unsigned w) {
        std::size_t r = 0;
        while (r < e.size() && !e[r].is_zero()) ++r;
        Ideal er = e[r - 1].value();
        Ideal d = r == 1 ? er : ideal_quotient(er, e[r - 2].value());
        auto& slot = per[w][r];
        if (!slot) slot = d;
        else if (!d.divides(*slot)) slot = ideal_intersection(*slot, d);
    });
    for (const auto& v : per)
        for (std::size_t r = 0; r < v.size(); ++r) {
            if (!v[r]) continue;
            auto& slot = out.by_rank[r];
            slot = slot ? ideal_intersection(*slot, *v[r]) : *v[r];
        }
    for (const auto& s : out.by_rank)
        if (s) out.period = ideal_intersection(out.period, *s);
    return out;
}

inline Ideal lcm_period(const Arrangement& a, unsigned threads = 0) { return period_data(a, threads).period; }

} // namespace quasichar
