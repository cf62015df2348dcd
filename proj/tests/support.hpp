#pragma once

#include <random>

#include "groth/poly.hpp"

namespace groth::testing {

inline Poly random_poly(std::mt19937& rng, int m, int max_deg, int terms, bool with_y = true) {
    Poly p(m);
    std::uniform_int_distribution<int> coef(-5, 5), var(0, (with_y ? 2 * m : m) - 1),
        deg(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        Monomial mono{std::vector<int>(2 * m, 0)};
        int d = deg(rng);
        for (int k = 0; k < d; ++k) ++mono.e[var(rng)];
        p.add_term(mono, coef(rng));
    }
    return p;
}

inline Monomial mono_x(int m, std::vector<int> xs, std::vector<int> ys = {}) {
    Monomial mono{std::vector<int>(2 * m, 0)};
    for (std::size_t i = 0; i < xs.size(); ++i) mono.e[i] = xs[i];
    for (std::size_t i = 0; i < ys.size(); ++i) mono.e[m + i] = ys[i];
    return mono;
}

inline Poly X(int m, int i) { return Poly::var(m, Family::x, i); }
inline Poly Y(int m, int i) { return Poly::var(m, Family::y, i); }
inline Poly C(int m, long c) { return Poly::constant(m, c); }

}  // namespace groth::testing
