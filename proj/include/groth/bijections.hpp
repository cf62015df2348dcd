#pragma once

#include <array>
#include <utility>
#include <vector>

#include "groth/factor.hpp"
#include "groth/hecke.hpp"

namespace groth {

// (a, b, c, d): a, c strictly decreasing, b, d strictly increasing; at threshold k the
// words b, c use letters <= k and a, d letters > k.
struct WQuadruple {
    HeckeWord a, b, c, d;
    int k = 0;
    bool operator==(const WQuadruple&) const = default;
};

// One row of the rewrite table. On the W^{k+1} side, b_tail and c_head are bit sets
// (1 = k present, 2 = K = k+1 present) for the end of b and the start of c. On the W^k
// side the flags say whether a ends in K, b ends in k, c starts with k, d starts with K.
struct LadderRule {
    int b_tail, c_head;
    bool a_K, b_k, c_k, d_K;
};

// All sixteen rows; the four without K are the identity.
const std::array<LadderRule, 16>& ladder_rules();

bool is_valid_quadruple(const WQuadruple& q, int n);
WQuadruple wk_step_down(const WQuadruple& q, int n);
WQuadruple wk_step_up(const WQuadruple& q, int n);

using WordPair = std::pair<HeckeWord, HeckeWord>;

// (increasing, decreasing) -> (decreasing, increasing), letters in 1..n.
WordPair arrow_down(const WordPair& p, int n);
WordPair arrow_up(const WordPair& p, int n);
// Every rung from W^n down to W^0 (or back up for arrow_up_ladder).
std::vector<WQuadruple> arrow_down_ladder(const WordPair& p, int n);
std::vector<WQuadruple> arrow_up_ladder(const WordPair& p, int n);

// (f_j, f_ex) -> (f_ex', f_j') for parameters j, k; letters in 1..n.
std::pair<Factor, Factor> psi(int j, int k, int n, const Factor& fj, const Factor& fex);
// (f_ex', f_j') -> (f_j, f_ex)
std::pair<Factor, Factor> psi_inv(int j, int k, int n, const Factor& fex, const Factor& fj);

// A state of the chain: left factors f_{-(n+1)} .. f_{-(k+1)}, right factors f_1 .. f_{n+1},
// and the extra factor sitting right of f_j.
struct ChainState {
    int j = 0, k = 0;
    std::vector<Factor> left, right;
    Factor extra;
    bool operator==(const ChainState&) const = default;
};

// Bounded circled factorization to bounded double factorization.
Factorization circled_to_double(const Factorization& f);
// Every state visited, from the start state to the final one (k = 0, no extra factor).
std::vector<ChainState> circled_to_double_trace(const Factorization& f);

}  // namespace groth
