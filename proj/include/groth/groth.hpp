#pragma once

#include "groth/hecke.hpp"
#include "groth/poly.hpp"

namespace groth {

// x_1^n x_2^{n-1} ... x_n in m variables (m >= n+1).
Poly staircase_monomial(int n, int m);
// prod_{i+j <= n+1} (x_i + y_j + x_i y_j) in m variables.
Poly staircase_product(int n, int m);

// Operator word: the least reduced word of w^{-1} w0 unless one is supplied.
Poly grothendieck_single(const Permutation& w, int m = 0);
Poly grothendieck_single(const Permutation& w, const HeckeWord& op_word, int m = 0);
Poly grothendieck_double(const Permutation& w, int m = 0);
Poly grothendieck_double(const Permutation& w, const HeckeWord& op_word, int m = 0);

HeckeWord operator_word(const Permutation& w);

}  // namespace groth
