#include "doctest.h"
#include "groth/factor.hpp"
#include "groth/stable.hpp"
#include "support.hpp"

#include <random>

using namespace groth;
using namespace groth::testing;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// Oracle: every filling of l by 1..m, kept when rows weakly and columns strictly increase.
Poly schur_brute(const Partition& l, int m) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(l.size()); ++r)
        for (int c = 0; c < l[r]; ++c) cells.push_back({r, c});
    const int N = static_cast<int>(cells.size());
    Poly out(m);
    std::vector<int> fill(N, 1);
    while (true) {
        std::map<std::pair<int, int>, int> at;
        for (int i = 0; i < N; ++i) at[cells[i]] = fill[i];
        bool ok = true;
        for (const auto& [rc, v] : at) {
            auto left = at.find({rc.first, rc.second - 1});
            auto up = at.find({rc.first - 1, rc.second});
            if (left != at.end() && left->second > v) ok = false;
            if (up != at.end() && up->second >= v) ok = false;
        }
        if (ok) {
            Monomial mono{std::vector<int>(2 * m, 0)};
            for (int v : fill) ++mono.x(v);
            out.add_term(mono, 1);
        }
        int i = 0;
        while (i < N && fill[i] == m) fill[i++] = 1;
        if (i == N) break;
        ++fill[i];
    }
    return out;
}

const TruncationSpec T33{3, 3};

}  // namespace

TEST_CASE("Schur polynomials match the semistandard oracle") {
    for (int m = 1; m <= 3; ++m)
        for (int d = 0; d <= 4; ++d)
            for (const auto& l : partitions_of(d)) CHECK(schur_poly(l, m) == schur_brute(l, m));
    CHECK(swap_families(schur_poly({2, 1}, 3)) == schur_poly({2, 1}, 3, Family::y));
}

TEST_CASE("Schur expansion") {
    CHECK(schur_expand(X(2, 1) + X(2, 2), Family::x, 1) == SchurExpansion{{{1}, 1}});
    CHECK(schur_expand(X(2, 1) * X(2, 2), Family::x, 2) == SchurExpansion{{{1, 1}, 1}});
    Poly h2 = X(2, 1) * X(2, 1) + X(2, 1) * X(2, 2) + X(2, 2) * X(2, 2);
    CHECK(schur_expand(h2, Family::x, 2) == SchurExpansion{{{2}, 1}});
    CHECK_THROWS_AS(schur_expand(X(2, 1), Family::x, 1), std::invalid_argument);
    CHECK_THROWS_AS(schur_expand(X(2, 1) * Y(2, 1), Family::x, 1), std::invalid_argument);
    // Random combinations expand back to themselves.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 1 + trial % 4;
        SchurExpansion want;
        Poly p(3);
        for (const auto& l : partitions_of(d)) {
            if (l.size() > 3) continue;
            int c = static_cast<int>(rng() % 7) - 3;
            if (c == 0) continue;
            want[l] = c;
            p += schur_poly(l, 3) * mpz_class(c);
        }
        CHECK(schur_expand(p, Family::x, d) == want);
    }
}

TEST_CASE("Omega conjugates Schur functions and is an involution when m covers the degree") {
    CHECK(omega(schur_poly({2}, 2), Family::x) == schur_poly({1, 1}, 2));
    CHECK(omega(schur_poly({2, 1}, 3, Family::y), Family::y) == schur_poly({2, 1}, 3, Family::y));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p(4);
        for (int d = 0; d <= 4; ++d)
            for (const auto& l : partitions_of(d)) {
                int c = static_cast<int>(rng() % 5) - 2;
                if (c == 0) continue;
                Poly other = schur_poly(partitions_of(trial % 3)[0], 4, Family::y);
                p += schur_poly(l, 4) * other * mpz_class(c);
            }
        Poly q = omega(p, Family::x);
        CHECK(omega(q, Family::x) == p);
        CHECK(omega(omega(p, Family::y), Family::y) == p);
        CHECK(omega(omega(p, Family::x), Family::y) == omega(omega(p, Family::y), Family::x));
    }
    // With too few variables the conjugate can vanish.
    CHECK(omega(schur_poly({3}, 2), Family::x).is_zero());
}

TEST_CASE("identity gives 1 in every model") {
    auto id = Permutation::identity(3);
    const Poly one = C(3, 1);
    CHECK(stable_single(id, T33) == one);
    CHECK(stable_double(id, T33) == one);
    CHECK(halfweak_stable(id, T33) == one);
    CHECK(stable_double_via_tableaux(id, T33) == one);
    CHECK(weak_stable_double(id, T33) == one);
    CHECK(qschur_expansion(id, 4) == QExpansion{{{}, 1}});
}

TEST_CASE("stable single: factorizations, operator and Hecke tableaux agree") {
    TruncationSpec t{2, 2};
    Poly g = stable_single(P({2, 1}), t);
    CHECK(g == stable_single_operator(P({2, 1}), t));
    CHECK(pretty(g) == "x1*x2 + x1 + x2");
    for (int s = 1; s <= 3; ++s)
        for (const auto& w : all_permutations(s)) {
            for (int m = 1; m + w.n() <= 4; ++m) {
                TruncationSpec tm{m, 4};
                CHECK(stable_single(w, tm) == stable_single_operator(w, tm));
            }
        }
    for (const auto& w : all_permutations(4)) {
        TruncationSpec t35{3, 5};
        CHECK(stable_single(w, t35) == stable_single_via_tableaux(w, t35));
    }
}

TEST_CASE("stable double: y = 0, operator and tableau models") {
    for (int s = 1; s <= 3; ++s)
        for (const auto& w : all_permutations(s)) {
            TruncationSpec t{3, 5};
            Poly g = stable_double(w, t);
            CHECK(substitute_zero(g, Family::y, 0) == stable_single(w, t));
            CHECK(g == stable_double_via_tableaux(w, t));
            CHECK(is_symmetric(g, Family::x));
            CHECK(is_symmetric(g, Family::y));
            for (int m = 1; m + w.n() <= 4; ++m) {
                TruncationSpec tm{m, 4};
                CHECK(stable_double(w, tm) == stable_double_operator(w, tm));
            }
        }
}

TEST_CASE("weak stable double through Omega matches the term by term tableau sum") {
    for (const auto& w : all_permutations(3)) {
        TruncationSpec t{3, 4};
        CHECK(weak_stable_double(w, t) == weak_stable_double_via_tableaux(w, t));
    }
    TruncationSpec t{3, 3};
    Poly g1 = genfun_svt({{1}, {}}, 3, 3);
    CHECK(weak_symmetric({1}, t) == omega(g1, Family::x));
    CHECK(homogeneous_component(weak_symmetric({1}, t), 1) == schur_poly({1}, 3));
    CHECK(homogeneous_component(weak_symmetric({1}, t), 2) == schur_poly({2}, 3));
}

TEST_CASE("half-weak: hook factorizations against Hecke tableaux") {
    for (int s = 1; s <= 3; ++s)
        for (const auto& w : all_permutations(s)) {
            TruncationSpec t{2, 4};
            CHECK(halfweak_stable(w, t) == halfweak_via_tableaux(w, t));
        }
    Poly xx = set_y_equal_x(halfweak_stable(P({2, 3, 1, 5, 4}), {2, 4}));
    Monomial x14{{4, 0, 0, 0}};
    CHECK(xx.coefficient(x14) == 12);
}

TEST_CASE("half-weak lowest degree comes from reduced words") {
    for (int s = 1; s <= 4; ++s)
        for (const auto& w : all_permutations(s)) {
            const int l = inversions(w);
            auto all = enumerate_hook(w, 2, l + 1);
            std::vector<Factorization> reduced;
            for (const auto& f : all)
                if (static_cast<int>(f.letters()) == l) reduced.push_back(f);
            Poly g = genfun(all, 2);
            for (int d = 0; d < l; ++d) CHECK(homogeneous_component(g, d).is_zero());
            CHECK(homogeneous_component(g, l) == genfun(reduced, 2));
        }
}

TEST_CASE("Q-Schur expansion") {
    auto e = qschur_expansion(P({2, 3, 1, 5, 4}), 4);
    CHECK(degree_stratum(e, 4) == QExpansion{{{4}, 6}, {{3, 1}, 4}});
    CHECK(to_json(degree_stratum(e, 4)) == R"({"[4]":6,"[3,1]":4})");
    std::vector<Permutation> ws = all_permutations(3);
    ws.push_back(P({2, 3, 1, 5, 4}));
    for (const auto& w : ws) {
        auto q = qschur_expansion(w, 4);
        for (const auto& [l, c] : q) CHECK(c > 0);
        TruncationSpec t{2, 4};
        CHECK(qschur_sum(q, 2, 4) == set_y_equal_x(halfweak_stable(w, t)));
    }
}

TEST_CASE("stability in the number of variables") {
    CHECK(stability_check(Model::stable_single, P({2, 1}), {2, 2}));
    CHECK(stability_check(Model::single_operator, P({2, 1}), {2, 2}));
    for (const auto& w : all_permutations(3)) CHECK(stability_check(Model::stable_double, w, {4, 4}));
    CHECK(stability_check(Model::double_operator, P({2, 1}), {2, 3}));
    // Padding with too few fixed points leaves the polynomial unstable.
    CHECK_FALSE(stability_check(Model::single_operator, P({2, 1}), {2, 2, 0}));
    CHECK_FALSE(stability_check(Model::double_operator, P({2, 1}), {2, 2, 0}));
}

TEST_CASE("serial and parallel agree") {
    for (const auto& w : all_permutations(3)) {
        TruncationSpec t{3, 4};
        CHECK(stable_double_via_tableaux(w, t, Exec::serial) ==
              stable_double_via_tableaux(w, t, Exec::parallel));
        CHECK(stable_double(w, t, Exec::serial) == stable_double(w, t, Exec::parallel));
    }
}
