#pragma once

#include <string>
#include <vector>

#include "modstruct.hpp"

namespace quasichar {

/// A central arrangement over O: n nonzero columns c_j in O^l.
class Arrangement {
public:
    Arrangement(Ring ring, std::size_t ell, std::vector<std::vector<Element>> columns, std::string name = {})
        : ring_(ring), ell_(ell), columns_(std::move(columns)), name_(std::move(name)) {
        if (ell_ == 0) throw InvalidArrangement("ambient rank must be positive");
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            const auto& c = columns_[j];
            if (c.size() != ell_)
                throw InvalidArrangement("column " + std::to_string(j) + " has length " + std::to_string(c.size()) +
                                         ", expected " + std::to_string(ell_));
            bool zero = true;
            for (const auto& e : c) {
                if (ring_.is_integers() && e.b != 0)
                    throw InvalidArrangement("column " + std::to_string(j) + " has a non-integer entry");
                zero = zero && e.is_zero();
            }
            if (zero) throw InvalidArrangement("column " + std::to_string(j) + " is zero");
        }
    }

    const Ring& ring() const { return ring_; }
    std::size_t ell() const { return ell_; }
    std::size_t size() const { return columns_.size(); }
    const std::string& name() const { return name_; }
    const std::vector<Element>& column(std::size_t j) const { return columns_[j]; }
    const std::vector<std::vector<Element>>& columns() const { return columns_; }

    CoeffMatrix coefficient_matrix(const std::vector<std::size_t>& indices) const {
        CoeffMatrix c(ring_, ell_, indices.size());
        for (std::size_t k = 0; k < indices.size(); ++k)
            for (std::size_t i = 0; i < ell_; ++i) c(i, k) = columns_[indices[k]][i];
        return c;
    }

    CoeffMatrix coefficient_matrix() const {
        std::vector<std::size_t> all(columns_.size());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
        return coefficient_matrix(all);
    }

private:
    Ring ring_;
    std::size_t ell_;
    std::vector<std::vector<Element>> columns_;
    std::string name_;
};

} // namespace quasichar
