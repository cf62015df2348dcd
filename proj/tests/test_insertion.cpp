#include "doctest.h"
#include "groth/insertion.hpp"

#include <map>
#include <set>

using namespace groth;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// Oracle: standard set-valued tableaux of shape l with letters 1..N, placing letters in
// increasing order. A box may take the next letter once its left and upper neighbours are
// nonempty and its right and lower neighbours are still empty.
long count_standard_svt(const Partition& l, int N) {
    Tableau t = Tableau::blank({l, {}});
    auto filled = [&](int r, int c) { return !t.in_shape(r, c) || !t.at(r, c).empty(); };
    auto empty = [&](int r, int c) { return !t.in_shape(r, c) || t.at(r, c).empty(); };
    long count = 0;
    auto rec = [&](auto&& self, int k) -> void {
        if (k > N) {
            bool full = true;
            for (std::size_t r = 0; r < l.size(); ++r)
                for (int c = 0; c < l[r]; ++c) full = full && !t.at(r, c).empty();
            count += full;
            return;
        }
        for (std::size_t r = 0; r < l.size(); ++r)
            for (int c = 0; c < l[r]; ++c) {
                if (!filled(r, c - 1) || !filled(r - 1, c) || !empty(r, c + 1) || !empty(r + 1, c))
                    continue;
                t.at(r, c).push_back(E(k));
                self(self, k + 1);
                t.at(r, c).pop_back();
            }
    };
    rec(rec, 1);
    return count;
}

std::vector<HeckeWord> all_words(int n, int len) {
    std::vector<HeckeWord> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<HeckeWord> next;
        for (const auto& w : out)
            for (int a = 1; a <= n; ++a) {
                auto v = w;
                v.push_back(a);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

// Standard tableau from rows of label lists.
Tableau labels(const std::vector<std::vector<std::vector<int>>>& rows) {
    SkewShape s;
    for (const auto& r : rows) s.outer.push_back(static_cast<int>(r.size()));
    Tableau t = Tableau::blank(s);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            for (int v : rows[r][c]) t.at(r, c).push_back(E(v));
    return t;
}

int row_of(const Tableau& q, int label) {
    for (std::size_t r = 0; r < q.rows.size(); ++r)
        for (const auto& b : q.rows[r])
            for (const auto& e : b)
                if (e.v == label) return static_cast<int>(r);
    return -1;
}

}  // namespace

TEST_CASE("row insertion cases") {
    std::vector<int> r1{1, 2, 4, 5};
    auto a = insert_row(nullptr, r1, 3);
    CHECK(a.outcome == RowOutcome::bumped);
    CHECK(a.bumped == 4);
    CHECK(a.row == std::vector<int>{1, 2, 3, 5});

    std::vector<int> r2{2, 4, 6, 8};
    auto b = insert_row(&a.row, r2, 4);
    CHECK(b.outcome == RowOutcome::bumped);
    CHECK(b.bumped == 6);
    CHECK(b.row == r2);

    std::vector<int> r3{3, 5, 7};
    auto c = insert_row(&r2, r3, 6);
    CHECK(c.outcome == RowOutcome::bumped);
    CHECK(c.bumped == 7);
    CHECK(c.row == r3);

    std::vector<int> r4{4, 7};
    auto d = insert_row(&r3, r4, 7);
    CHECK(d.outcome == RowOutcome::disappeared);
    CHECK(d.row == r4);

    auto e = insert_row(nullptr, {1, 3}, 4);
    CHECK(e.outcome == RowOutcome::appended);
    CHECK(e.row == std::vector<int>{1, 3, 4});

    // Below the first entry of the row above: outside the assumed interval.
    CHECK_THROWS_AS(insert_row(&r1, {2, 4}, 1), std::logic_error);
}

TEST_CASE("one insertion step in the middle of a long word") {
    auto p16 = Tableau::parse({{"1", "2", "4", "5"},
                               {"2", "4", "6", "8"},
                               {"3", "5", "7"},
                               {"4", "7"},
                               {"6", "8"},
                               {"9"}});
    auto q16 = labels({{{1}, {2}, {3}, {4}},
                       {{5}, {6}, {7}, {8}},
                       {{9}, {10}, {11}},
                       {{12}, {13}},
                       {{14}, {15}},
                       {{16}}});
    InsertionState st(p16, q16);
    st.insert(3, E(17));
    auto p17 = Tableau::parse({{"1", "2", "3", "5"},
                               {"2", "4", "6", "8"},
                               {"3", "5", "7"},
                               {"4", "7"},
                               {"6", "8"},
                               {"9"}});
    auto q17 = labels({{{1}, {2}, {3}, {4}},
                       {{5}, {6}, {7}, {8}},
                       {{9}, {10}, {11}},
                       {{12}, {13}},
                       {{14}, {15, 17}},
                       {{16}}});
    CHECK(st.p() == p17);
    CHECK(st.q() == q17);
}

TEST_CASE("the two traces where ascents are not detected") {
    InsertionState st;
    std::vector<std::pair<Tableau, Tableau>> want = {
        {Tableau::parse({{"1"}}), Tableau::parse({{"1"}})},
        {Tableau::parse({{"1", "3"}}), Tableau::parse({{"1", "2"}})},
        {Tableau::parse({{"1", "2"}, {"3"}}), Tableau::parse({{"1", "2"}, {"3"}})},
        {Tableau::parse({{"1", "2"}, {"3"}}), Tableau::parse({{"1", "24"}, {"3"}})}};
    HeckeWord w{1, 3, 2, 2};
    for (int i = 0; i < 4; ++i) {
        st.insert(w[i], E(i + 1));
        CHECK(st.p() == want[i].first);
        CHECK(st.q() == want[i].second);
    }

    InsertionState st2;
    std::vector<std::pair<Tableau, Tableau>> want2 = {
        {Tableau::parse({{"1"}}), Tableau::parse({{"1"}})},
        {Tableau::parse({{"1", "3"}}), Tableau::parse({{"1", "2"}})},
        {Tableau::parse({{"1", "3"}, {"3"}}), Tableau::parse({{"1", "2"}, {"3"}})},
        {Tableau::parse({{"1", "2"}, {"3"}}), Tableau::parse({{"1", "2"}, {"34"}})}};
    HeckeWord w2{1, 3, 1, 2};
    for (int i = 0; i < 4; ++i) {
        st2.insert(w2[i], E(i + 1));
        CHECK(st2.p() == want2[i].first);
        CHECK(st2.q() == want2[i].second);
    }
}

TEST_CASE("descents land strictly lower in the recording tableau") {
    for (int n = 1; n <= 3; ++n)
        for (int len = 0; len <= 6; ++len)
            for (const auto& w : all_words(n, len)) {
                auto [p, q] = insert_word(w);
                for (int i = 0; i + 1 < len; ++i)
                    CHECK((w[i] > w[i + 1]) == (row_of(q, i + 2) > row_of(q, i + 1)));
            }
}

TEST_CASE("insertion is a bijection onto Hecke tableau and standard SVT pairs") {
    std::map<std::pair<Partition, int>, long> svt_memo;
    for (int s = 1; s <= 4; ++s)
        for (const auto& w : all_permutations(s)) {
            const int n = w.n();
            std::map<int, std::set<std::pair<std::string, std::string>>> images;
            for (const auto& word : enumerate_hecke_words(w, 7)) {
                auto [p, q] = insert_word(word);
                CHECK(is_hecke_tableau(p, w));
                CHECK(is_standard_svt(q));
                CHECK(p.shape == q.shape);
                CHECK(q.entry_count() == static_cast<int>(word.size()));
                images[static_cast<int>(word.size())].insert({to_json(p), to_json(q)});
            }
            auto ht = enumerate_hecke_tableaux(w, n * n);
            for (int N = 0; N <= 7; ++N) {
                long expect = 0;
                for (const auto& t : ht) {
                    auto key = std::make_pair(t.shape.outer, N);
                    if (!svt_memo.count(key)) svt_memo[key] = count_standard_svt(t.shape.outer, N);
                    expect += svt_memo[key];
                }
                const long words = static_cast<long>(images[N].size());
                long total = 0;
                for (const auto& word : enumerate_hecke_words(w, N)) total += word.size() == std::size_t(N);
                CHECK_MESSAGE(words == total, w.str() << " N=" << N);
                CHECK_MESSAGE(words == expect, w.str() << " N=" << N);
            }
        }
}

TEST_CASE("semistandard insertion") {
    auto f = parse_factorization("(31)(421)", Kind::plain, 4);
    auto [p, q] = semistandard_insert(f);
    CHECK(p == Tableau::parse({{"1", "2"}, {"2", "4"}, {"3"}}));
    CHECK(q == Tableau::parse({{"1", "2"}, {"1", "2"}, {"2"}}));
    CHECK(transpose(p) == Tableau::parse({{"1", "2", "3"}, {"2", "4"}}));

    auto [p0, q0] = semistandard_insert(parse_factorization("()()", Kind::plain, 2));
    CHECK(p0.box_count() == 0);
    CHECK(q0.box_count() == 0);
    CHECK_THROWS(semistandard_insert(parse_factorization("(1)|(1)", Kind::double_unbounded, 1)));
}

TEST_CASE("semistandard insertion is a weight preserving bijection, S_3") {
    const int parts = 3, max_letters = 5;
    for (const auto& w : all_permutations(3)) {
        std::set<std::pair<std::string, std::string>> images;
        auto fs = enumerate_plain_unbounded(w, parts, max_letters);
        for (const auto& f : fs) {
            auto [p, q] = semistandard_insert(f);
            CHECK(is_hecke_tableau(p, w));
            CHECK(is_svt(q));
            CHECK(weight_of(q, parts).x == weight(f).x);
            images.insert({to_json(p), to_json(q)});
        }
        CHECK(images.size() == fs.size());
        long expect = 0;
        for (const auto& t : enumerate_hecke_tableaux(w, 4))
            expect += static_cast<long>(enumerate_svt({t.shape.outer, {}}, parts, max_letters).size());
        CHECK(static_cast<long>(fs.size()) == expect);
    }
}

TEST_CASE("phi on the worked example") {
    auto f = parse_factorization("(124)(13)|(432)(3)", Kind::double_unbounded, 4);
    auto [p, q] = phi(f);
    CHECK(p == Tableau::parse({{"1", "2", "3", "4"}, {"2", "3", "4"}, {"4"}}));
    CHECK(q == Tableau::parse({{"1'", "1'", "2'", "1"}, {"2'", "2'1", "2"}, {"1"}}));
    CHECK(is_psvt(q));
    CHECK(weight_of(q) == WeightPair{{3, 1}, {2, 3}});
    CHECK(weight(f) == weight_of(q, 2));

    auto [p0, q0] = phi(parse_factorization("()|()", Kind::double_unbounded, 2));
    CHECK(p0.box_count() == 0);
    CHECK(q0.box_count() == 0);
}

TEST_CASE("phi is a weight preserving bijection onto Hecke tableau and PSVT pairs, S_3") {
    const int half = 3, max_letters = 6;
    for (const auto& w : all_permutations(3)) {
        std::set<std::pair<std::string, std::string>> images;
        auto fs = enumerate_double_unbounded(w, half, max_letters);
        for (const auto& f : fs) {
            auto [p, q] = phi(f);
            CHECK(is_hecke_tableau(p, w));
            CHECK(is_psvt(q));
            CHECK(p.shape == q.shape);
            CHECK(weight_of(q, half) == weight(f));
            images.insert({to_json(p), to_json(q)});
        }
        CHECK(images.size() == fs.size());
        long expect = 0;
        for (const auto& t : enumerate_hecke_tableaux(w, 4))
            expect += static_cast<long>(enumerate_psvt(t.shape.outer, half, max_letters).size());
        CHECK_MESSAGE(static_cast<long>(fs.size()) == expect, w.str());
    }
}

TEST_CASE("transpose") {
    auto t = Tableau::parse({{"1", "2"}, {"2", "4"}, {"3"}});
    CHECK(transpose(transpose(t)) == t);
    auto one = Tableau::parse({{"5"}});
    CHECK(transpose(one) == one);
}
