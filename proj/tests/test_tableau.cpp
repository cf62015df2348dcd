#include "doctest.h"
#include "groth/tableau.hpp"
#include "support.hpp"

#include <set>

using namespace groth;
using namespace groth::testing;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

Poly x_power(int m, std::vector<int> xs) { return Poly::monomial(mono_x(m, xs)); }

// The PT from the starting/lattice example, shape (6,4,4,4,3).
Tableau lattice_example() {
    return Tableau::parse({{"1'", "1", "1", "1", "1", "1"},
                           {"1", "2'", "2", "2"},
                           {"2'", "2", "3'", "3"},
                           {"2", "3'", "3", "4"},
                           {"3", "4'", "4"}});
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({}) == Partition{});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_in_box(2, 2).size() == 6);
    CHECK(is_strict({3, 1}));
    CHECK_FALSE(is_strict({2, 2}));
    CHECK(contains({3, 2}, {2, 2}));
    CHECK_FALSE(contains({3}, {1, 1}));
}

TEST_CASE("two-letter SVT with two columns match pi on a monomial") {
    for (int l1 = 0; l1 <= 4; ++l1)
        for (int l2 = 0; l2 <= l1; ++l2) {
            Partition cols;
            if (l1) cols.push_back(l1);
            if (l2) cols.push_back(l2);
            Partition shape = conjugate(cols);
            Poly lhs = genfun_svt({shape, {}}, 2, 2 * size(shape));
            Poly rhs = pi(1, x_power(2, {l1 + 1, l2}));
            CHECK_MESSAGE(lhs == rhs, "columns " << l1 << "," << l2);
        }
}

TEST_CASE("genfun_svt small cases") {
    CHECK(genfun_svt({{1}, {}}, 2, 2) == X(2, 1) + X(2, 2) + X(2, 1) * X(2, 2));
    CHECK(genfun_svt({{}, {}}, 2, 2) == C(2, 1));
    // Columns are weak, so a column of two boxes may repeat a letter.
    CHECK(genfun_svt({{1, 1}, {}}, 2, 2) ==
          X(2, 1) * X(2, 1) + X(2, 1) * X(2, 2) + X(2, 2) * X(2, 2));
    CHECK(genfun_svt({{2}, {}}, 2, 2) == X(2, 1) * X(2, 2));
    CHECK(genfun_svt({{3}, {}}, 2, 2).is_zero());
}

TEST_CASE("PSVT example") {
    auto t = Tableau::parse({{"1'2'", "2'3'", "123"}, {"3'1", "23", "4"}, {"12", "34"}});
    CHECK(is_psvt(t));
    CHECK(weight_of(t) == WeightPair{{3, 3, 3, 2}, {1, 2, 2, 0}});
    // Unprimed 2 twice in the first row.
    CHECK_FALSE(is_psvt(Tableau::parse({{"1'2", "2"}})));
    // 1' twice in a column.
    CHECK_FALSE(is_psvt(Tableau::parse({{"1'"}, {"1'"}})));
    CHECK(is_psvt(Tableau::parse({{"1'", "1'"}})));
    CHECK(genfun_psvt({1}, 1, 2) == X(1, 1) + Y(1, 1) + X(1, 1) * Y(1, 1));
}

TEST_CASE("PSMT, PT and OFT examples") {
    auto q = Tableau::parse({{"1'11", "12'", "23'"}, {"2'", "2", "3'33"}, {"2'3'", "3"}});
    CHECK(is_psmt(q));
    CHECK(weight_of(q) == WeightPair{{3, 2, 3}, {1, 3, 3}});
    CHECK_FALSE(is_pt(q));
    CHECK_FALSE(is_psmt(Tableau::parse({{"1'1'"}})));
    CHECK_FALSE(is_psmt(Tableau::parse({{"1"}, {"1"}})));
    CHECK_FALSE(is_psmt(Tableau::parse({{"1'", "1'"}})));

    auto o = Tableau::parse({{"4", "2"}, {"3", "2", "1"}, {"2", "2", "1"}, {"1", "1", "1"}},
                            {4, 3, 2, 1});
    CHECK(o.shape.outer == Partition{6, 6, 5, 4});
    CHECK(is_oft(o, {4, 3, 2, 1}));
    auto big = Tableau::parse({{"4", "2"}, {"3", "2", "1"}, {"2", "2", "1"}, {"2", "1", "1"}},
                              {4, 3, 2, 1});
    CHECK_FALSE(is_oft(big, {4, 3, 2, 1}));
    CHECK(oft_count({6, 6, 5, 4}, {4, 3, 2, 1}) > 0);

    CHECK(is_pt(lattice_example()));
}

TEST_CASE("starting and lattice verdicts on the example") {
    auto t = lattice_example();
    for (int i = 1; i <= 3; ++i) {
        CHECK(has_i_starting(t, i));
        CHECK(has_i_lattice(t, i));
    }
    CHECK_FALSE(has_i_starting(t, 4));
    CHECK_FALSE(has_i_lattice(t, 4));
    Tableau empty = Tableau::blank({{}, {}});
    for (int i = 1; i <= 3; ++i) {
        CHECK(has_i_starting(empty, i));
        CHECK(has_i_lattice(empty, i));
    }
}

TEST_CASE("OFT counts") {
    CHECK(oft_count({2, 1}, {2, 1}) == 1);
    CHECK(oft_count({2}, {1}) == 1);
    CHECK(oft_count({1, 1}, {1}) == 0);
    CHECK(oft_count({3, 1}, {2, 1}) == 2);
    CHECK(oft_count({2, 2}, {2, 1}) == 1);
    CHECK(oft_count({4}, {3}) == 3);
    CHECK(oft_count({3, 1}, {3}) == 0);
    for (const auto& t : enumerate_oft({4, 3}, {2, 1})) CHECK(is_oft(t, {2, 1}));
}

TEST_CASE("Hecke tableaux") {
    // The displayed tableaux 12/4, 124/4, 124 read to Hecke words for (2,3,1,5,4).
    const auto w = P({2, 3, 1, 5, 4});
    auto ht = enumerate_hecke_tableaux(w, 16);
    REQUIRE(ht.size() == 3);
    std::set<Partition> shapes;
    for (const auto& t : ht) shapes.insert(t.shape.outer);
    CHECK(shapes == std::set<Partition>{{2, 1}, {3, 1}, {3}});
    auto want = {Tableau::parse({{"1", "2"}, {"4"}}), Tableau::parse({{"1", "2", "4"}, {"4"}}),
                 Tableau::parse({{"1", "2", "4"}})};
    for (const auto& t : want) {
        CHECK(std::find(ht.begin(), ht.end(), t) != ht.end());
        CHECK(is_hecke_tableau(t, w));
    }
    // Inverting the permutation transposes every Hecke tableau.
    auto inv = enumerate_hecke_tableaux(w.inverse(), 16);
    REQUIRE(inv.size() == 3);
    for (const auto& t : inv) CHECK(std::find(ht.begin(), ht.end(), transpose(t)) != ht.end());

    auto id = enumerate_hecke_tableaux(Permutation::identity(3), 9);
    REQUIRE(id.size() == 1);
    CHECK(id[0].box_count() == 0);
    auto s1 = enumerate_hecke_tableaux(P({2, 1}), 4);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].shape.outer == Partition{1});
}

TEST_CASE("row and column reading words of Hecke tableaux agree, S_4") {
    for (const auto& w : all_permutations(4))
        for (const auto& t : enumerate_hecke_tableaux(w, 9)) {
            CHECK(is_hecke_tableau(t, w));
            CHECK(eval_hecke_word(column_reading_word(t), 3) == w);
        }
}

TEST_CASE("enumerated tableaux pass their validators") {
    for (const auto& l : partitions_in_box(3, 3)) {
        if (size(l) > 4) continue;
        for (const auto& t : enumerate_svt({l, {}}, 3, 5)) CHECK(is_svt(t));
        for (const auto& t : enumerate_psvt(l, 2, 5)) CHECK(is_psvt(t));
        for (const auto& t : enumerate_psmt(l, 2, 5)) CHECK(is_psmt(t));
        for (const auto& t : enumerate_pt(l, 3)) CHECK(is_pt(t));
    }
    for (const auto& t : enumerate_svt({{3, 2}, {1}}, 3, 6)) CHECK(is_svt(t));
}

TEST_CASE("validators agree with enumeration counts on all fillings of tiny shapes") {
    // Oracle: every assignment of nonempty subsets of a 2m-letter alphabet to the boxes of (2,1).
    const int m = 2;
    std::vector<Entry> ls{Ep(1), Ep(2), E(1), E(2)};
    std::vector<Box> boxes;
    for (int mask = 1; mask < 16; ++mask) {
        Box b;
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) b.push_back(ls[i]);
        boxes.push_back(b);
    }
    long psvt = 0, svt = 0;
    Tableau t = Tableau::blank({{2, 1}, {}});
    for (const auto& a : boxes)
        for (const auto& b : boxes)
            for (const auto& c : boxes) {
                t.at(0, 0) = a;
                t.at(0, 1) = b;
                t.at(1, 0) = c;
                psvt += is_psvt(t);
                svt += is_svt(t);
            }
    CHECK(psvt == static_cast<long>(enumerate_psvt({2, 1}, m, 12).size()));
    CHECK(svt == static_cast<long>(enumerate_svt({{2, 1}, {}}, m, 12).size()));
}

TEST_CASE("PSVT with y = 0 is SVT") {
    for (const auto& l : partitions_in_box(3, 3)) {
        if (size(l) > 4) continue;
        Poly d = genfun_psvt(l, 2, 5);
        CHECK(substitute_zero(d, Family::y, 0) == genfun_svt({l, {}}, 2, 5));
    }
}

TEST_CASE("serial and parallel generating functions agree") {
    CHECK(genfun_psvt({2, 1}, 3, 5, Exec::serial) == genfun_psvt({2, 1}, 3, 5, Exec::parallel));
    CHECK(genfun_psmt({2, 1}, 2, 5, Exec::serial) == genfun_psmt({2, 1}, 2, 5, Exec::parallel));
}

TEST_CASE("Schur Q functions") {
    CHECK(q_schur({1}, 2, 1) == X(2, 1) * C(2, 2) + X(2, 2) * C(2, 2));
    CHECK(q_schur({4}, 1, 4).coefficient(mono_x(1, {4})) == 2);
    CHECK(q_schur({3, 1}, 1, 4).coefficient(mono_x(1, {4})) == 0);
    CHECK(q_schur({}, 2, 3) == C(2, 1));
    CHECK(q_schur({3}, 2, 2).is_zero());
    CHECK_THROWS(q_schur({2, 2}, 2, 4));
    for (const auto& l : std::vector<Partition>{{2}, {2, 1}, {3, 1}})
        CHECK(is_symmetric(q_schur(l, 3, 4), Family::x));
}

TEST_CASE("R_mu(x,x) expands in Schur Q functions with F coefficients") {
    const int m = 4;
    for (int n = 0; n <= 4; ++n)
        for (const auto& mu : partitions_of(n)) {
            Poly lhs = set_y_equal_x(genfun_pt(mu, m));
            Poly rhs(m);
            for (const auto& [l, f] : f_coefficients(mu)) rhs += q_schur(l, m, n) * mpz_class(f);
            CHECK_MESSAGE(lhs == rhs, "mu = " << partition_str(mu));
        }
    CHECK(f_coefficient({}, {}) == 1);
    CHECK(f_coefficient({2, 1}, {2}) == 0);
    // Diagram values from the degree-four example.
    CHECK(f_coefficient({3, 1}, {4}) == 1);
    CHECK(f_coefficient({3, 1}, {3, 1}) == 1);
    CHECK(f_coefficient({2, 2}, {3, 1}) == 1);
    CHECK(f_coefficient({2, 2}, {4}) == 0);
    CHECK(f_coefficient({4}, {4}) == 1);
}

TEST_CASE("raising the PT value cap changes no F coefficient") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(f_coefficients(mu, n + 2) == f_coefficients(mu));
}

TEST_CASE("PSMT splits into PT times OFT counts") {
    const int m = 2, D = 4;
    for (const auto& mu : partitions_in_box(2, 2)) {
        if (size(mu) > D) continue;
        Poly rhs(m);
        for (const auto& l : partitions_in_box(static_cast<int>(mu.size()), D)) {
            if (size(l) > D || l.size() != mu.size() || !contains(l, mu)) continue;
            long k = oft_count(l, mu);
            if (k) rhs += genfun_pt(l, m) * mpz_class(k);
        }
        CHECK_MESSAGE(genfun_psmt(mu, m, D) == rhs, "mu = " << partition_str(mu));
    }
}

TEST_CASE("tableau text and json") {
    auto t = Tableau::parse({{"1'2'", "2'3'", "123"}, {"3'1", "23", "4"}, {"12", "34"}});
    CHECK(tableau_from_json(to_json(t)) == t);
    auto o = Tableau::parse({{"4", "2"}, {"1"}}, {1, 1});
    CHECK(tableau_from_json(to_json(o)) == o);
    CHECK(pretty(Tableau::parse({{"1", "2"}, {"4"}})) == "[1][2]\n[4]\n");
    CHECK(pretty(o) == "[.][4][2]\n[.][1]\n");
    CHECK(Tableau::parse({{"10 11'"}}).at(0, 0) == Box{E(10), Ep(11)});
    CHECK_THROWS(tableau_from_json(R"({"outer":[1],"inner":[],"boxes":[]})"));
}
