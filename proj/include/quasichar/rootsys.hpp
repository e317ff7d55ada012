#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "arrangement.hpp"

namespace quasichar {

/// Positive roots of a non-crystallographic root system as coefficient
/// columns over Z[t], t the golden ratio (ring d = 5, w = t).
struct RootSystemData {
    std::string name;
    Arrangement arrangement;
    Int coxeter_number;
    std::size_t rank;
    std::size_t positive_roots;
    std::vector<Int> exponents;
};

namespace detail {

// Entry notation: sums of terms "k", "t", "kt", "t^2" (t^2 = t + 1).
inline Element parse_golden(const std::string& tok) {
    Element e;
    std::stringstream ss(tok);
    std::string term;
    while (std::getline(ss, term, '+')) {
        if (term == "t^2") {
            e = e + Element{1, 1};
        } else if (!term.empty() && term.back() == 't') {
            std::string k = term.substr(0, term.size() - 1);
            e = e + Element{0, k.empty() ? 1 : std::stoll(k)};
        } else {
            e = e + Element{std::stoll(term), 0};
        }
    }
    return e;
}

// Rows given in blocks of `rank` lines; each block holds consecutive columns.
inline Arrangement golden_arrangement(const std::string& name, std::size_t rank, const std::vector<std::string>& rows) {
    std::vector<std::vector<Element>> cols;
    for (std::size_t blk = 0; blk + rank <= rows.size(); blk += rank) {
        std::vector<std::vector<Element>> block(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            std::stringstream ss(rows[blk + i]);
            std::string tok;
            while (ss >> tok) block[i].push_back(parse_golden(tok));
        }
        for (std::size_t j = 0; j < block[0].size(); ++j) {
            std::vector<Element> c;
            for (std::size_t i = 0; i < rank; ++i) c.push_back(block[i].at(j));
            cols.push_back(std::move(c));
        }
    }
    return Arrangement(Ring::quadratic(5), rank, std::move(cols), name);
}

inline const std::vector<std::string>& h2_rows() {
    static const std::vector<std::string> rows = {
        "1 0 t 1 t",
        "0 1 1 t t",
    };
    return rows;
}

inline const std::vector<std::string>& h3_rows() {
    static const std::vector<std::string> rows = {
        "1 0 t 1 t 0 0 t t t^2 1 t t t^2 t^2",
        "0 1 1 t t 0 1 1 t^2 t^2 t t t^2 t^2 2t",
        "0 0 0 0 0 1 1 1 1 1 t t t t t",
    };
    return rows;
}

inline const std::vector<std::string>& h4_rows() {
    static const std::vector<std::string> rows = {
    // columns 1-10
    "1 0 1 t t 0 0 t t t+1",
    "0 1 t 1 t 0 1 1 t+1 t+1",
    "0 0 0 0 0 1 1 1 1 1",
    "0 0 0 0 0 0 0 0 0 0",
    // columns 11-20
    "1 t t t+1 t+1 0 0 0 t t",
    "t t t+1 t+1 2t 0 0 1 1 t+1",
    "t t t t t 0 1 1 1 1",
    "0 0 0 0 0 1 1 1 1 1",
    // columns 21-30
    "t+1 t t+1 t+1 2t+1 2t+1 2t+1 1 t t",
    "t+1 t+1 t+1 2t+1 2t+1 2t+2 2t+2 t t t+1",
    "1 t+1 t+1 t+1 t+1 t+1 t+2 t t t",
    "1 1 1 1 1 1 1 t t t",
    // columns 31-40
    "t+1 t+1 t t+1 t+1 2t+1 2t+1 t+1 t+1 2t+1",
    "t+1 2t t+1 t+1 2t+1 2t+1 2t+2 2t 2t+1 2t+1",
    "t t t+1 t+1 t+1 t+1 t+1 2t 2t 2t",
    "t t t t t t t t t t",
    // columns 41-50
    "2t+1 2t+2 2t+1 2t+1 2t+2 3t+1 2t+2 2t+1 2t+1 2t+1",
    "3t+1 3t+1 2t+2 3t+1 3t+1 3t+2 3t+2 2t+2 2t+2 3t+1",
    "2t 2t 2t+1 2t+1 2t+1 2t+1 2t+1 t+2 2t+1 2t+1",
    "t t t t t t t t+1 t+1 t+1",
    // columns 51-60
    "2t+2 2t+2 3t+1 2t+2 3t+1 3t+1 3t+2 3t+2 3t+2 3t+2",
    "3t+1 3t+2 3t+2 3t+2 3t+2 3t+3 3t+3 4t+2 4t+2 4t+2",
    "2t+1 2t+1 2t+1 2t+2 2t+2 2t+2 2t+2 2t+2 3t+1 3t+1",
    "t+1 t+1 t+1 t+1 t+1 t+1 t+1 t+1 t+1 2t",
    };
    return rows;
}

} // namespace detail

inline RootSystemData builtin(const std::string& name) {
    if (name == "H2") return {name, detail::golden_arrangement(name, 2, detail::h2_rows()), 5, 2, 5, {1, 4}};
    if (name == "H3") return {name, detail::golden_arrangement(name, 3, detail::h3_rows()), 10, 3, 15, {1, 5, 9}};
    if (name == "H4") return {name, detail::golden_arrangement(name, 4, detail::h4_rows()), 30, 4, 60, {1, 11, 19, 29}};
    throw UnknownName("no built-in root system named '" + name + "' (expected H2, H3 or H4)");
}

} // namespace quasichar
