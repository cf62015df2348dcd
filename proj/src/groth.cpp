#include "groth/groth.hpp"

namespace groth {

namespace {

int resolve_m(const Permutation& w, int m) {
    if (m == 0) return w.size();
    if (m < w.size()) throw std::invalid_argument("need at least n+1 variables");
    return m;
}

}  // namespace

Poly staircase_monomial(int n, int m) {
    if (m < n + 1) throw std::invalid_argument("need at least n+1 variables");
    Monomial mono{std::vector<int>(2 * m, 0)};
    for (int i = 1; i <= n; ++i) mono.x(i) = n + 1 - i;
    return Poly::monomial(std::move(mono));
}

Poly staircase_product(int n, int m) {
    if (m < n + 1) throw std::invalid_argument("need at least n+1 variables");
    Poly r = Poly::constant(m, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n + 1; ++j) {
            Poly xi = Poly::var(m, Family::x, i), yj = Poly::var(m, Family::y, j);
            r = r * (xi + yj + xi * yj);
        }
    return r;
}

HeckeWord operator_word(const Permutation& w) {
    return least_reduced_word(w.inverse().compose(Permutation::longest(w.size())));
}

Poly grothendieck_single(const Permutation& w, const HeckeWord& op_word, int m) {
    m = resolve_m(w, m);
    return pi_word(op_word, staircase_monomial(w.n(), m));
}

Poly grothendieck_single(const Permutation& w, int m) {
    return grothendieck_single(w, operator_word(w), m);
}

Poly grothendieck_double(const Permutation& w, const HeckeWord& op_word, int m) {
    m = resolve_m(w, m);
    return pi_word(op_word, staircase_product(w.n(), m));
}

Poly grothendieck_double(const Permutation& w, int m) {
    return grothendieck_double(w, operator_word(w), m);
}

}  // namespace groth
