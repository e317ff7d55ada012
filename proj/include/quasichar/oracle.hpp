#pragma once

#include <chrono>
#include <vector>

#include "arrangement.hpp"
#include "parallel.hpp"

namespace quasichar {

struct OracleBudget {
    Int max_points = 10'000'000;
};

namespace detail {

// Residue system of O/a with index arithmetic: add[i][j] is the index of
// r_i + r_j, and mul tables give c * r_i for the needed constants c.
class ResidueIndex {
public:
    explicit ResidueIndex(const Ideal& a) : ideal_(a), reps_(residues(a)) {
        const std::size_t n = reps_.size();
        if (n > 4096) throw BudgetExceeded("residue ring too large for the oracle tables");
        add_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) add_[i * n + j] = index_of(reps_[i] + reps_[j]);
    }

    std::size_t size() const { return reps_.size(); }

    std::size_t index_of(const Element& x) const {
        Element r = ideal_.reduce(x);
        return static_cast<std::size_t>(r.b * ideal_.a() + r.a);
    }

    std::vector<std::size_t> times(const Element& c) const {
        std::vector<std::size_t> t;
        for (const auto& r : reps_) t.push_back(index_of(ideal_.ring().mul(c, r)));
        return t;
    }

    std::size_t add(std::size_t i, std::size_t j) const { return add_[i * reps_.size() + j]; }

private:
    Ideal ideal_;
    std::vector<Element> reps_;
    std::vector<std::size_t> add_;
};

// Streams over (O/a)^l; visit(values) receives x.c_j mod a (as indices) per column.
template <class Predicate>
Int count_points(const Ring& ring, std::size_t ell, const std::vector<std::vector<Element>>& cols, const Ideal& a,
                 OracleBudget budget, unsigned threads, Predicate&& accept) {
    if (!(ring == a.ring())) throw RingMismatch("ideal over a different ring");
    const Int n = a.norm();
    Int points = 1;
    for (std::size_t k = 0; k < ell; ++k) {
        points = checked_mul(points, n);
        if (points > budget.max_points) throw BudgetExceeded("oracle would enumerate more than " + std::to_string(budget.max_points) + " points");
    }
    ResidueIndex res(a);
    const std::size_t m = cols.size(), nn = res.size();
    // tables[k][j][r] = index of r * c_{kj}
    std::vector<std::vector<std::vector<std::size_t>>> tables(ell, std::vector<std::vector<std::size_t>>(m));
    for (std::size_t k = 0; k < ell; ++k)
        for (std::size_t j = 0; j < m; ++j) tables[k][j] = res.times(cols[j][k]);

    std::vector<Int> per(resolve_threads(threads), 0);
    parallel_for(nn, threads, [&](std::size_t first, unsigned w) {
        std::vector<std::vector<std::size_t>> partial(ell + 1, std::vector<std::size_t>(m, 0));
        for (std::size_t j = 0; j < m; ++j) partial[1][j] = tables[0][j][first];
        std::vector<std::size_t> x(ell, 0);
        x[0] = first;
        Int local = 0;
        if (ell == 1) {
            if (accept(partial[1])) ++local;
            per[w] += local;
            return;
        }
        std::size_t depth = 1;
        // odometer over coordinates 1..ell-1
        for (;;) {
            for (std::size_t j = 0; j < m; ++j) partial[depth + 1][j] = res.add(partial[depth][j], tables[depth][j][x[depth]]);
            if (depth + 1 < ell) {
                ++depth;
                x[depth] = 0;
                continue;
            }
            if (accept(partial[ell])) ++local;
            while (depth >= 1 && ++x[depth] == nn) --depth;
            if (depth == 0) break;
        }
        per[w] += local;
    });
    Int total = 0;
    for (Int v : per) total += v;
    return total;
}

} // namespace detail

/// |(O/a)^l minus the union of the reduced hyperplanes|, by enumeration.
inline Int brute_count_complement(const Arrangement& arr, const Ideal& a, OracleBudget budget = {}, unsigned threads = 0) {
    return detail::count_points(arr.ring(), arr.ell(), arr.columns(), a, budget, threads, [](const std::vector<std::size_t>& v) {
        for (auto i : v)
            if (i == 0) return false;
        return true;
    });
}

/// |{x in (O/a)^l : x C = 0}|, by enumeration.
inline Int brute_count_kernel(const CoeffMatrix& c, const Ideal& a, OracleBudget budget = {}, unsigned threads = 0) {
    std::vector<std::vector<Element>> cols(c.cols(), std::vector<Element>(c.rows()));
    for (std::size_t j = 0; j < c.cols(); ++j)
        for (std::size_t i = 0; i < c.rows(); ++i) cols[j][i] = c(i, j);
    return detail::count_points(c.ring(), c.rows(), cols, a, budget, threads, [](const std::vector<std::size_t>& v) {
        for (auto i : v)
            if (i != 0) return false;
        return true;
    });
}

struct CountReport {
    Ideal ideal;
    Int norm = 0;
    Int complement = 0;
    std::vector<std::pair<std::vector<std::size_t>, Int>> kernels;
    double elapsed_ms = 0;
};

inline CountReport oracle_report(const Arrangement& arr, const Ideal& a, const std::vector<std::vector<std::size_t>>& subsets = {},
                                 OracleBudget budget = {}, unsigned threads = 0) {
    auto start = std::chrono::steady_clock::now();
    CountReport rep{a, a.norm(), brute_count_complement(arr, a, budget, threads), {}, 0};
    for (const auto& j : subsets) rep.kernels.push_back({j, brute_count_kernel(arr.coefficient_matrix(j), a, budget, threads)});
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace quasichar
