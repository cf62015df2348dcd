#pragma once

#include <map>
#include <string>

#include "groth/exec.hpp"
#include "groth/hecke.hpp"
#include "groth/poly.hpp"
#include "groth/tableau.hpp"

namespace groth {

// m variables per family, total degree <= D. The operator models pad the permutation
// with `shift` fixed points first; a negative shift means m - 1.
struct TruncationSpec {
    int m = 1;
    int D = 0;
    int shift = -1;
    int effective_shift() const { return shift < 0 ? m - 1 : shift; }
};

// Factorization models.
Poly stable_single(const Permutation& w, const TruncationSpec& t, Exec exec = Exec::parallel);
Poly stable_double(const Permutation& w, const TruncationSpec& t, Exec exec = Exec::parallel);
Poly halfweak_stable(const Permutation& w, const TruncationSpec& t, Exec exec = Exec::parallel);

// Operator models: the padded permutation's polynomial with every variable past m set to zero.
Poly stable_single_operator(const Permutation& w, const TruncationSpec& t);
Poly stable_double_operator(const Permutation& w, const TruncationSpec& t);

// Tableau models.
// Hecke tableaux of w counted by shape, up to max_boxes boxes.
std::map<Partition, long> hecke_shape_counts(const Permutation& w, int max_boxes);
Poly stable_single_via_tableaux(const Permutation& w, const TruncationSpec& t,
                                Exec exec = Exec::parallel);
// Sum over Hecke tableaux T and rook strips mu/rho inside T's shape of G_{shape/rho}(x) G_{mu'}(y).
Poly stable_double_via_tableaux(const Permutation& w, const TruncationSpec& t,
                                Exec exec = Exec::parallel);
Poly halfweak_via_tableaux(const Permutation& w, const TruncationSpec& t, Exec exec = Exec::parallel);
// rho inside mu with mu/rho holding no two boxes in a row or column.
bool is_rook_strip(const Partition& mu, const Partition& rho);

// s_lambda in m variables of family f.
Poly schur_poly(const Partition& l, int m, Family f = Family::x);
using SchurExpansion = std::map<Partition, mpz_class>;
// p must involve only family f, be homogeneous of degree d there and symmetric.
SchurExpansion schur_expand(const Poly& p, Family f, int d);
// s_lambda -> s_{lambda'} in family f, linear over the other family. Terms whose image needs
// more than m rows vanish, so the map is an involution only when m >= degree.
Poly omega(const Poly& p, Family f);

Poly weak_symmetric(const Partition& l, const TruncationSpec& t);
Poly weak_stable_double(const Permutation& w, const TruncationSpec& t, Exec exec = Exec::parallel);
// Omega in both families applied term by term to the tableau sum.
Poly weak_stable_double_via_tableaux(const Permutation& w, const TruncationSpec& t,
                                     Exec exec = Exec::parallel);

// Coefficients of Q_lambda for |lambda| <= D in the x = y specialization of the half-weak function.
using QExpansion = std::map<Partition, long>;
QExpansion qschur_expansion(const Permutation& w, int D);
QExpansion degree_stratum(const QExpansion& e, int d);
Poly qschur_sum(const QExpansion& e, int m, int D);
// {"[4]":6,"[3,1]":4}
std::string to_json(const QExpansion& e);

enum class Model { stable_single, stable_double, halfweak, single_operator, double_operator };
Poly compute_model(Model model, const Permutation& w, const TruncationSpec& t);
// Model at (m, shift) versus (m + 1, shift + 1), restricted to the first m variables.
bool stability_check(Model model, const Permutation& w, const TruncationSpec& t);

}  // namespace groth
