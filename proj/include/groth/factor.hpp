#pragma once

#include <string>
#include <utility>
#include <vector>

#include "groth/exec.hpp"
#include "groth/hecke.hpp"
#include "groth/poly.hpp"

namespace groth {

struct Letter {
    int v = 0;
    bool circled = false;

    // ① < 1 < ② < 2 < ...
    int key() const { return 2 * v - (circled ? 1 : 0); }
    auto operator<=>(const Letter&) const = default;
};

inline Letter U(int v) { return {v, false}; }
inline Letter O(int v) { return {v, true}; }

using Factor = std::vector<Letter>;

enum class Kind { plain, bounded_plain, circled_bounded, double_bounded, double_unbounded, hook };

struct Factorization {
    Kind kind = Kind::plain;
    int n = 0;
    std::vector<Factor> factors;
    // Double kinds: factors[0, split) lie left of center.
    int split = 0;

    std::size_t letters() const;
    bool operator==(const Factorization&) const = default;
};

struct WeightPair {
    std::vector<int> x, y;
    bool operator==(const WeightPair&) const = default;
};

HeckeWord flatten(const Factorization& f);
bool is_valid(const Factorization& f);
WeightPair weight(const Factorization& f);
bool is_factorization_of(const Factorization& f, const Permutation& w);

// Canonical order: flattened word, then circle mask, then factor sizes.
bool canonical_less(const Factorization& a, const Factorization& b);

std::vector<Factorization> enumerate_bounded_plain(const Permutation& w, int max_letters,
                                                   Exec exec = Exec::parallel);
std::vector<Factorization> enumerate_circled_bounded(const Permutation& w, int max_letters,
                                                     Exec exec = Exec::parallel);
std::vector<Factorization> enumerate_double_bounded(const Permutation& w, int max_letters,
                                                    Exec exec = Exec::parallel);
std::vector<Factorization> enumerate_double_unbounded(const Permutation& w, int half_parts,
                                                      int max_letters, Exec exec = Exec::parallel);
std::vector<Factorization> enumerate_plain_unbounded(const Permutation& w, int parts,
                                                     int max_letters, Exec exec = Exec::parallel);
std::vector<Factorization> enumerate_hook(const Permutation& w, int parts, int max_letters,
                                          Exec exec = Exec::parallel);

// Sum of x^wt y^wt over the set, in m variables.
Poly genfun(const std::vector<Factorization>& set, int m);

std::vector<std::pair<Permutation, Permutation>> enumerate_X(const Permutation& w);
Poly cauchy_sum(const Permutation& w, int m = 0);

// "(3 3o 2o 1 1o)(3o 2)" in ascii mode, circled digits otherwise; "|" marks the center.
std::string to_text(const Factorization& f, bool ascii = true);
Factorization parse_factorization(const std::string& text, Kind kind, int n);
std::string to_json(const Factorization& f);
Factorization factorization_from_json(const std::string& text, Kind kind, int n);

}  // namespace groth
