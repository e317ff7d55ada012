#pragma once

// Shared data sets and their expected constituents.

#include "support.hpp"

namespace qctest {

struct Expected {
    Ideal kappa;
    std::vector<Int> coeffs;  // c_0, ..., c_l
};

inline Ring gaussian() { return Ring::quadratic(-1); }
inline Ring zsqrtm5() { return Ring::quadratic(-5); }
inline Ring golden() { return Ring::quadratic(5); }

inline Ideal ideal(const Ring& r, std::initializer_list<Element> gens) {
    std::vector<Element> g(gens);
    return Ideal::from_generators(r, g);
}

// sqrt5 = 2t - 1 in Z[t], t the golden ratio.
inline Element sqrt5(Int k) { return {-k, 2 * k}; }

inline std::string compare(const QuasiPolynomial& q, const Ideal& period, const std::vector<Expected>& want) {
    if (!(q.period() == period)) return "period " + q.period().hnf_string() + ", expected " + period.hnf_string();
    if (q.constituents().size() != want.size())
        return std::to_string(q.constituents().size()) + " constituents, expected " + std::to_string(want.size());
    for (const auto& w : want) {
        Polynomial f(w.coeffs);
        if (!(q.constituent(w.kappa) == f))
            return "f^" + factored_string(w.kappa) + " = " + q.constituent(w.kappa).to_string() + ", expected " + f.to_string();
    }
    return {};
}

inline Arrangement gaussian_lines() { return load_arrangement(data_path("gaussian_lines.json")); }
inline Arrangement sqrtm5_pair() { return load_arrangement(data_path("sqrtm5_pair.json")); }

inline std::vector<Expected> gaussian_lines_expected() {
    Ring r = gaussian();
    return {{Ideal::unit(r), {3, -4, 1}}, {ideal(r, {{1, 1}}), {6, -4, 1}}, {ideal(r, {{2, 0}}), {10, -4, 1}}};
}

inline Ideal p_two() { return ideal(zsqrtm5(), {{2, 0}, {1, -1}}); }
inline Ideal q_three() { return ideal(zsqrtm5(), {{3, 0}, {1, 1}}); }

inline std::vector<Expected> sqrtm5_pair_expected() {
    Ring r = zsqrtm5();
    return {{Ideal::unit(r), {0, -1, 1}}, {p_two(), {0, -2, 1}}, {q_three(), {0, -3, 1}}, {p_two() * q_three(), {0, -4, 1}}};
}

inline std::vector<Expected> h3_expected() {
    Ring r = golden();
    return {{Ideal::unit(r), {-45, 59, -15, 1}}, {ideal(r, {{2, 0}}), {-60, 59, -15, 1}}};
}

inline std::vector<Expected> h4_expected() {
    Ring r = golden();
    auto f = [](Int c1, Int c0) { return std::vector<Int>{c0, c1, 1138, -60, 1}; };
    return {{Ideal::unit(r), f(-7140, 6061)},           {ideal(r, {{3, 0}}), f(-7140, 9261)},
            {ideal(r, {sqrt5(1)}), f(-7140, 14125)},     {ideal(r, {sqrt5(3)}), f(-7140, 17325)},
            {ideal(r, {{2, 0}}), f(-8040, 17536)},       {ideal(r, {{6, 0}}), f(-8040, 20736)},
            {ideal(r, {sqrt5(2)}), f(-8040, 25600)},     {ideal(r, {sqrt5(6)}), f(-8040, 28800)}};
}

inline const QuasiPolynomial& h4_quasi() {
    static const QuasiPolynomial q = constituents(builtin("H4").arrangement, {ConstituentPath::layer_poset});
    return q;
}

inline QuasiPolynomial quasi_of(const Arrangement& a) { return a.size() > 22 ? h4_quasi() : constituents(a); }

} // namespace qctest
