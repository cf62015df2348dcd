#include "groth/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace groth {

const std::array<LadderRule, 16>& ladder_rules() {
    static const std::array<LadderRule, 16> rules{{
        {3, 3, true, true, true, true},
        {3, 1, true, true, false, true},
        {1, 3, true, false, true, true},
        {3, 2, false, true, true, true},
        {2, 3, true, true, true, false},
        {2, 2, true, false, false, true},
        {2, 1, true, true, false, false},
        {1, 2, false, false, true, true},
        {3, 0, false, true, false, true},
        {0, 3, true, false, true, false},
        {2, 0, false, false, false, true},
        {0, 2, true, false, false, false},
        {1, 1, false, true, true, false},
        {1, 0, false, true, false, false},
        {0, 1, false, false, true, false},
        {0, 0, false, false, false, false},
    }};
    return rules;
}

namespace {

bool monotone(const HeckeWord& w, bool increasing) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (increasing ? w[i] >= w[i + 1] : w[i] <= w[i + 1]) return false;
    return true;
}

bool within(const HeckeWord& w, int lo, int hi) {
    return std::all_of(w.begin(), w.end(), [&](int v) { return v >= lo && v <= hi; });
}

HeckeWord concat(std::initializer_list<const HeckeWord*> parts) {
    HeckeWord w;
    for (const auto* p : parts) w.insert(w.end(), p->begin(), p->end());
    return w;
}

// Whether the permutation moves something across the gap after position K.
bool involves(const Permutation& mu, int K) {
    for (int i = 1; i <= K && i <= mu.size(); ++i)
        if (mu[i] > K) return true;
    return false;
}

}  // namespace

bool is_valid_quadruple(const WQuadruple& q, int n) {
    return monotone(q.a, false) && monotone(q.c, false) && monotone(q.b, true) &&
           monotone(q.d, true) && within(q.b, 1, q.k) && within(q.c, 1, q.k) &&
           within(q.a, q.k + 1, n) && within(q.d, q.k + 1, n) && q.k >= 0 && q.k <= n;
}

WQuadruple wk_step_down(const WQuadruple& q, int n) {
    if (!is_valid_quadruple(q, n) || q.k < 1) throw std::invalid_argument("wk_step_down: bad quadruple");
    const int K = q.k, k = K - 1;
    WQuadruple r = q;
    r.k = k;
    if (!involves(eval_hecke_word(concat({&q.a, &q.b, &q.c, &q.d}), n), K)) return r;

    int bt = 0, ct = 0;
    if (!r.b.empty() && r.b.back() == K) bt |= 2, r.b.pop_back();
    if (!r.b.empty() && r.b.back() == k) bt |= 1, r.b.pop_back();
    if (!r.c.empty() && r.c.front() == K) ct |= 2, r.c.erase(r.c.begin());
    if (!r.c.empty() && r.c.front() == k) ct |= 1, r.c.erase(r.c.begin());
    for (const auto& rule : ladder_rules()) {
        if (rule.b_tail != bt || rule.c_head != ct) continue;
        if (rule.a_K) r.a.push_back(K);
        if (rule.b_k) r.b.push_back(k);
        if (rule.c_k) r.c.insert(r.c.begin(), k);
        if (rule.d_K) r.d.insert(r.d.begin(), K);
        return r;
    }
    throw std::logic_error("wk_step_down: no matching rule");
}

WQuadruple wk_step_up(const WQuadruple& q, int n) {
    if (!is_valid_quadruple(q, n) || q.k >= n) throw std::invalid_argument("wk_step_up: bad quadruple");
    const int k = q.k, K = k + 1;
    WQuadruple r = q;
    r.k = K;
    if (!involves(eval_hecke_word(concat({&q.a, &q.b, &q.c, &q.d}), n), K)) return r;

    bool aK = false, bk = false, ck = false, dK = false;
    if (!r.a.empty() && r.a.back() == K) aK = true, r.a.pop_back();
    if (k >= 1 && !r.b.empty() && r.b.back() == k) bk = true, r.b.pop_back();
    if (k >= 1 && !r.c.empty() && r.c.front() == k) ck = true, r.c.erase(r.c.begin());
    if (!r.d.empty() && r.d.front() == K) dK = true, r.d.erase(r.d.begin());
    for (const auto& rule : ladder_rules()) {
        if (rule.a_K != aK || rule.b_k != bk || rule.c_k != ck || rule.d_K != dK) continue;
        if (rule.b_tail & 1) r.b.push_back(k);
        if (rule.b_tail & 2) r.b.push_back(K);
        if (rule.c_head & 1) r.c.insert(r.c.begin(), k);
        if (rule.c_head & 2) r.c.insert(r.c.begin(), K);
        return r;
    }
    throw std::logic_error("wk_step_up: no matching rule");
}

std::vector<WQuadruple> arrow_down_ladder(const WordPair& p, int n) {
    if (!monotone(p.first, true) || !monotone(p.second, false) || !within(p.first, 1, n) ||
        !within(p.second, 1, n))
        throw std::invalid_argument("arrow_down needs an (increasing, decreasing) pair");
    std::vector<WQuadruple> out{{{}, p.first, p.second, {}, n}};
    while (out.back().k > 0) out.push_back(wk_step_down(out.back(), n));
    return out;
}

std::vector<WQuadruple> arrow_up_ladder(const WordPair& p, int n) {
    if (!monotone(p.first, false) || !monotone(p.second, true) || !within(p.first, 1, n) ||
        !within(p.second, 1, n))
        throw std::invalid_argument("arrow_up needs a (decreasing, increasing) pair");
    std::vector<WQuadruple> out{{p.first, {}, {}, p.second, 0}};
    while (out.back().k < n) out.push_back(wk_step_up(out.back(), n));
    return out;
}

WordPair arrow_down(const WordPair& p, int n) {
    const auto last = arrow_down_ladder(p, n).back();
    return {last.a, last.d};
}

WordPair arrow_up(const WordPair& p, int n) {
    const auto last = arrow_up_ladder(p, n).back();
    return {last.b, last.c};
}

namespace {

bool factor_decreasing(const Factor& f) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i].key() <= f[i + 1].key()) return false;
    return true;
}

// Uncircled letters in [lo, n], circled letters in [clo, chi].
bool factor_within(const Factor& f, int lo, int n, int clo, int chi) {
    return std::all_of(f.begin(), f.end(), [&](const Letter& l) {
        return l.circled ? l.v >= clo && l.v <= chi : l.v >= lo && l.v <= n;
    });
}

bool plain_increasing(const Factor& f, int lo, int n) {
    HeckeWord w;
    for (const auto& l : f) {
        if (l.circled) return false;
        w.push_back(l.v);
    }
    return monotone(w, true) && within(w, lo, n);
}

HeckeWord values(const Factor& f) {
    HeckeWord w;
    for (const auto& l : f) w.push_back(l.v);
    return w;
}

Factor uncircled(const HeckeWord& w) {
    Factor f;
    for (int v : w) f.push_back(U(v));
    return f;
}

}  // namespace

std::pair<Factor, Factor> psi(int j, int k, int n, const Factor& fj, const Factor& fex) {
    const int s = j + k - 1;
    if (j < 1 || k < 1 || !factor_decreasing(fj) || !factor_within(fj, j, n, j, s) ||
        !plain_increasing(fex, j + k, n))
        throw std::invalid_argument("psi: pair outside the domain");
    Factor gt, lt;
    bool eq = false;
    for (const auto& l : fj) {
        if (l.key() > O(s).key()) gt.push_back(l);
        else if (l.key() == O(s).key()) eq = true;
        else lt.push_back(l);
    }
    HeckeWord plus = values(fex);
    if (eq) plus.insert(plus.begin(), s);
    auto [g1, g2] = arrow_up({values(gt), plus}, n);
    Factor fj2 = uncircled(g2);
    fj2.insert(fj2.end(), lt.begin(), lt.end());
    return {uncircled(g1), fj2};
}

std::pair<Factor, Factor> psi_inv(int j, int k, int n, const Factor& fex, const Factor& fj) {
    const int s = j + k - 1;
    if (j < 1 || k < 1 || !factor_decreasing(fj) || !factor_within(fj, j, n, j, s - 1) ||
        !plain_increasing(fex, s, n))
        throw std::invalid_argument("psi_inv: pair outside the domain");
    Factor gt, lt;
    for (const auto& l : fj) (l.key() > O(s).key() ? gt : lt).push_back(l);
    auto [h1, h2] = arrow_down({values(fex), values(gt)}, n);
    Factor out_j = uncircled(h1);
    HeckeWord rest;
    bool eq = false;
    for (int v : h2) {
        if (v == s) eq = true;
        else if (v > s) rest.push_back(v);
        else throw std::logic_error("psi_inv: letter below the threshold");
    }
    if (eq) out_j.push_back(O(s));
    out_j.insert(out_j.end(), lt.begin(), lt.end());
    return {out_j, uncircled(rest)};
}

std::vector<ChainState> circled_to_double_trace(const Factorization& f) {
    if (f.kind != Kind::circled_bounded || !is_valid(f))
        throw std::invalid_argument("circled_to_double needs a bounded circled factorization");
    const int n = f.n;
    ChainState st;
    st.k = n;
    st.j = n >= 1 ? 1 : 0;
    st.left.assign(1, Factor{});
    st.right = f.factors;
    std::vector<ChainState> out{st};
    for (int k = n; k >= 1; --k) {
        for (int j = st.j; j >= 1; --j) {
            auto [ex, fj] = psi(j, k, n, st.right[j - 1], st.extra);
            st.right[j - 1] = fj;
            st.extra = ex;
            st.j = j - 1;
            out.push_back(st);
        }
        // The extra factor becomes the left factor f_{-k}.
        st.left.push_back(st.extra);
        st.extra.clear();
        st.k = k - 1;
        st.j = k - 1 >= 1 ? n - k + 2 : 0;
        out.push_back(st);
    }
    return out;
}

Factorization circled_to_double(const Factorization& f) {
    const auto last = circled_to_double_trace(f).back();
    Factorization d{Kind::double_bounded, f.n, last.left, static_cast<int>(last.left.size())};
    d.factors.insert(d.factors.end(), last.right.begin(), last.right.end());
    return d;
}

}  // namespace groth
