#pragma once

#include <cstdlib>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace quasichar {

/// Dense row-major integer matrix. Row lattices are the main use: a matrix
/// stands for the Z-span of its rows.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const Int> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void truncate_rows(std::size_t n) {
        rows_ = std::min(rows_, n);
        data_.resize(rows_ * cols_);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Rows of `top` followed by rows of `bottom`; column counts must agree.
    static IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
        IntMatrix m(top.rows_ + bottom.rows_, std::max(top.cols_, bottom.cols_));
        std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
        std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + top.data_.size());
        return m;
    }

    bool operator==(const IntMatrix&) const = default;

    const std::vector<Int>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Int x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
        }
    return c;
}

/// Row-style Hermite normal form. Pivots move strictly right, are positive,
/// and entries above a pivot are reduced into [0, pivot). Zero rows dropped.
inline IntMatrix hnf(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination: the smallest nonzero entry becomes the pivot and
        // reduces the others with rounded quotients, until the column is cleared.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a(i, c) != 0 && (best == rows || std::abs(a(i, c)) < std::abs(a(best, c)))) best = i;
            if (best == rows) break;
            if (best != r) a.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                Int q = a(i, c) / a(r, c);
                Int rem = a(i, c) - q * a(r, c);
                if (2 * std::abs(rem) > std::abs(a(r, c))) q += (rem > 0) == (a(r, c) > 0) ? 1 : -1;
                for (std::size_t k = c; k < cols; ++k) a(i, k) = checked_sub(a(i, k), checked_mul(q, a(r, k)));
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0)
            for (std::size_t k = c; k < cols; ++k) a(r, k) = checked_neg(a(r, k));
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a(i, c), a(r, c));
            if (q == 0) continue;
            for (std::size_t k = c; k < cols; ++k) a(i, k) = checked_sub(a(i, k), checked_mul(q, a(r, k)));
        }
        ++r;
    }
    a.truncate_rows(r);
    return a;
}

inline std::size_t rank(const IntMatrix& m) { return hnf(m).rows(); }

/// Column of the leading nonzero entry of each HNF row.
inline std::vector<std::size_t> pivots(const IntMatrix& h) {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = 0;
        while (c < h.cols() && h(i, c) == 0) ++c;
        p.push_back(c);
    }
    return p;
}

/// Basis (in HNF) of {x : x * m = 0}.
inline IntMatrix left_kernel(const IntMatrix& m) {
    const std::size_t p = m.rows(), n = m.cols();
    IntMatrix aug(p, n + p);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    IntMatrix h = hnf(std::move(aug));
    IntMatrix k(0, p);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < n && zero; ++j) zero = h(i, j) == 0;
        if (zero) k.append_row(h.row(i).subspan(n));
    }
    return hnf(std::move(k));
}

/// Basis of {x in Z^p : x * map lies in the row lattice of `lattice`}.
inline IntMatrix preimage(const IntMatrix& map, const IntMatrix& lattice) {
    IntMatrix neg = lattice;
    for (std::size_t i = 0; i < neg.rows(); ++i)
        for (auto& v : neg.row(i)) v = checked_neg(v);
    IntMatrix k = left_kernel(IntMatrix::stack(map, neg));
    IntMatrix out(0, map.rows());
    for (std::size_t i = 0; i < k.rows(); ++i) out.append_row(k.row(i).first(map.rows()));
    return hnf(std::move(out));
}

/// Intersection of two row lattices in Z^n.
inline IntMatrix intersect(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix u = preimage(a, b);
    return hnf(multiply(u, a));
}

/// Saturation (L tensor Q) intersected with Z^n.
inline IntMatrix saturate(const IntMatrix& l) {
    const std::size_t n = l.cols();
    IntMatrix k = left_kernel(l.transpose());
    if (k.rows() == 0) return IntMatrix::identity(n);
    return left_kernel(k.transpose());
}

/// Coordinates of v in the HNF basis h; empty if v is not in the lattice.
inline std::optional<std::vector<Int>> coordinates(const IntMatrix& h, std::span<const Int> v) {
    std::vector<Int> rest(v.begin(), v.end()), coeff(h.rows(), 0);
    auto piv = pivots(h);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = piv[i];
        for (std::size_t j = (i == 0 ? 0 : piv[i - 1] + 1); j < c; ++j)
            if (rest[j] != 0) return std::nullopt;
        if (rest[c] % h(i, c) != 0) return std::nullopt;
        Int q = rest[c] / h(i, c);
        coeff[i] = q;
        if (q != 0)
            for (std::size_t k = c; k < h.cols(); ++k) rest[k] = checked_sub(rest[k], checked_mul(q, h(i, k)));
    }
    for (Int x : rest)
        if (x != 0) return std::nullopt;
    return coeff;
}

inline bool lattice_contains(const IntMatrix& h, std::span<const Int> v) { return coordinates(h, v).has_value(); }

/// Canonical representative of v modulo a full-rank square HNF lattice:
/// each coordinate lands in [0, h(i,i)).
inline void reduce_mod_full_rank(const IntMatrix& h, std::span<Int> v) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
        Int q = floor_div(v[i], h(i, i));
        if (q == 0) continue;
        for (std::size_t k = i; k < h.cols(); ++k) v[k] = checked_sub(v[k], checked_mul(q, h(i, k)));
    }
}

inline bool is_full_rank_square_hnf(const IntMatrix& h) {
    if (h.rows() != h.cols()) return false;
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (h(i, i) <= 0) return false;
    return true;
}

/// Index |Z^n / L| of a full-rank lattice given in square HNF.
inline Int lattice_index(const IntMatrix& h) {
    Int d = 1;
    for (std::size_t i = 0; i < h.rows(); ++i) d = checked_mul(d, h(i, i));
    return d;
}

/// Nonzero Smith invariants d_1 | d_2 | ... of the row lattice.
inline std::vector<Int> smith_invariants(IntMatrix m) {
    for (;;) {
        m = hnf(std::move(m));
        bool diagonal = true;
        for (std::size_t i = 0; i < m.rows() && diagonal; ++i)
            for (std::size_t j = 0; j < m.cols() && diagonal; ++j)
                if (i != j && m(i, j) != 0) diagonal = false;
        if (diagonal) break;
        m = m.transpose();
    }
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (m(i, i) != 0) d.push_back(abs_int(m(i, i)));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Int g = gcd_int(d[i], d[j]);
            Int l = checked_mul(d[i] / g, d[j]);
            d[i] = g;
            d[j] = l;
        }
    return d;
}

} // namespace quasichar
