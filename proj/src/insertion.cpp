#include "groth/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace groth {

RowResult insert_row(const std::vector<int>* above, const std::vector<int>& row, int a) {
    const int j = static_cast<int>(row.size());
    // The step assumes x_1 < a and x_h <= a < y_h for some h (y_h = infinity past the end).
    if (above) {
        const auto& x = *above;
        int h = 0;
        while (h < j && row[h] <= a) ++h;
        if (x.empty() || a <= x[0] || h >= static_cast<int>(x.size()) || x[h] > a)
            throw std::logic_error("insert_row: letter " + std::to_string(a) +
                                   " outside the assumed interval");
    }
    auto x_at = [&](int i) -> const int* {
        return above && i < static_cast<int>(above->size()) ? &(*above)[i] : nullptr;
    };

    RowResult res{row};
    if (j == 0 || a >= row[j - 1]) {
        const int* xn = x_at(j);
        if ((j > 0 && a == row[j - 1]) || (xn && *xn == a)) {
            res.outcome = RowOutcome::disappeared;
        } else {
            res.row.push_back(a);
            res.outcome = RowOutcome::appended;
        }
        return res;
    }
    int h = 0;
    while (a > row[h]) ++h;
    res.outcome = RowOutcome::bumped;
    if (a == row[h]) {
        res.bumped = row[h + 1];
        return res;
    }
    const int* xh = x_at(h);
    res.bumped = row[h];
    if (!xh || a > *xh) res.row[h] = a;
    return res;
}

InsertionState::InsertionState(const Tableau& p, const Tableau& q) {
    if (!p.shape.inner.empty() || p.shape != q.shape)
        throw std::invalid_argument("insertion state needs two tableaux of one straight shape");
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        std::vector<int> row;
        for (const auto& b : p.rows[r]) {
            if (b.size() != 1) throw std::invalid_argument("insertion tableau needs single entries");
            row.push_back(b[0].v);
        }
        p_.push_back(row);
        q_.push_back(q.rows[r]);
    }
}

void InsertionState::insert(int a, Entry label) {
    for (std::size_t r = 0;; ++r) {
        if (r == p_.size()) {
            if (r > 0 && a <= p_[r - 1][0])
                throw std::logic_error("insert: letter cannot start a new row");
            p_.push_back({a});
            q_.push_back({Box{label}});
            return;
        }
        auto res = insert_row(r ? &p_[r - 1] : nullptr, p_[r], a);
        p_[r] = std::move(res.row);
        if (res.outcome == RowOutcome::appended) {
            q_[r].push_back(Box{label});
            return;
        }
        if (res.outcome == RowOutcome::disappeared) {
            // Label goes to the lowest box in the column of this row's last box.
            const std::size_t c = p_[r].size() - 1;
            std::size_t low = r;
            while (low + 1 < p_.size() && p_[low + 1].size() > c) ++low;
            q_[low][c].push_back(label);
            return;
        }
        a = res.bumped;
    }
}

Tableau InsertionState::p() const {
    SkewShape s;
    for (const auto& row : p_) s.outer.push_back(static_cast<int>(row.size()));
    Tableau t = Tableau::blank(s);
    for (std::size_t r = 0; r < p_.size(); ++r)
        for (std::size_t c = 0; c < p_[r].size(); ++c) t.rows[r][c] = {E(p_[r][c])};
    return t;
}

Tableau InsertionState::q() const {
    SkewShape s;
    for (const auto& row : q_) s.outer.push_back(static_cast<int>(row.size()));
    Tableau t = Tableau::blank(s);
    t.rows = q_;
    for (auto& row : t.rows)
        for (auto& b : row)
            std::sort(b.begin(), b.end(), [](const Entry& x, const Entry& y) {
                return entry_key(x, Alphabet::primes_first) < entry_key(y, Alphabet::primes_first);
            });
    return t;
}

TableauPair insert_word(const HeckeWord& w) {
    InsertionState st;
    for (std::size_t i = 0; i < w.size(); ++i) st.insert(w[i], E(static_cast<int>(i) + 1));
    return {st.p(), st.q()};
}

TableauPair semistandard_insert(const Factorization& f) {
    if (f.kind != Kind::plain && f.kind != Kind::bounded_plain)
        throw std::invalid_argument("semistandard_insert needs a plain factorization");
    InsertionState st;
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        for (const auto& l : f.factors[i]) st.insert(l.v, E(static_cast<int>(i) + 1));
    return {st.p(), st.q()};
}

TableauPair phi(const Factorization& f) {
    if (f.kind != Kind::double_bounded && f.kind != Kind::double_unbounded)
        throw std::invalid_argument("phi needs a double factorization");
    Factorization left{Kind::plain, f.n, {}, 0};
    for (int i = f.split - 1; i >= 0; --i) {
        Factor fac = f.factors[i];
        std::reverse(fac.begin(), fac.end());
        left.factors.push_back(fac);
    }
    auto [pl, ql] = semistandard_insert(left);
    InsertionState st(transpose(pl), prime_all(transpose(ql)));
    for (std::size_t i = f.split; i < f.factors.size(); ++i)
        for (const auto& l : f.factors[i]) st.insert(l.v, E(static_cast<int>(i - f.split) + 1));
    return {st.p(), st.q()};
}

}  // namespace groth
