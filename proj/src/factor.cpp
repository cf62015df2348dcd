#include "groth/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "groth/groth.hpp"
#include "json.hpp"

namespace groth {

std::size_t Factorization::letters() const {
    std::size_t c = 0;
    for (const auto& f : factors) c += f.size();
    return c;
}

HeckeWord flatten(const Factorization& f) {
    HeckeWord w;
    for (const auto& fac : f.factors)
        for (const auto& l : fac) w.push_back(l.v);
    return w;
}

namespace {

bool is_double(Kind k) { return k == Kind::double_bounded || k == Kind::double_unbounded; }

bool strictly(const Factor& f, bool decreasing) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        int a = f[i].key(), b = f[i + 1].key();
        if (decreasing ? a <= b : a >= b) return false;
    }
    return true;
}

bool all_uncircled(const Factor& f) {
    return std::none_of(f.begin(), f.end(), [](const Letter& l) { return l.circled; });
}

bool min_value_at_least(const Factor& f, int lo) {
    return std::all_of(f.begin(), f.end(), [lo](const Letter& l) { return l.v >= lo; });
}

bool hook_factor(const Factor& f) {
    std::size_t k = 0;
    while (k < f.size() && f[k].circled) ++k;
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (f[i].v <= f[i + 1].v) return false;
    for (std::size_t i = k; i < f.size(); ++i) {
        if (f[i].circled) return false;
        if (i > k && f[i].v < f[i - 1].v) return false;
    }
    return true;
}

}  // namespace

bool is_valid(const Factorization& f) {
    for (const auto& fac : f.factors)
        for (const auto& l : fac)
            if (l.v < 1 || l.v > f.n) return false;
    const int F = static_cast<int>(f.factors.size());
    switch (f.kind) {
        case Kind::plain:
        case Kind::bounded_plain:
            if (f.kind == Kind::bounded_plain && F != f.n + 1) return false;
            for (int i = 0; i < F; ++i) {
                const auto& fac = f.factors[i];
                if (!all_uncircled(fac) || !strictly(fac, true)) return false;
                if (f.kind == Kind::bounded_plain && !min_value_at_least(fac, i + 1)) return false;
            }
            return true;
        case Kind::circled_bounded:
            if (F != f.n + 1) return false;
            for (int i = 0; i < F; ++i) {
                const auto& fac = f.factors[i];
                if (!strictly(fac, true)) return false;
                for (const auto& l : fac)
                    if (l.key() < O(i + 1).key()) return false;
            }
            return true;
        case Kind::double_bounded:
        case Kind::double_unbounded: {
            if (f.split < 0 || f.split > F) return false;
            int right = F - f.split;
            if (f.kind == Kind::double_bounded && (f.split != f.n + 1 || right != f.n + 1))
                return false;
            for (int i = 0; i < F; ++i) {
                const auto& fac = f.factors[i];
                bool left = i < f.split;
                if (!all_uncircled(fac) || !strictly(fac, !left)) return false;
                // Index counted outward from the center on each side.
                int idx = left ? f.split - i : i - f.split + 1;
                if (f.kind == Kind::double_bounded && !min_value_at_least(fac, idx)) return false;
            }
            return true;
        }
        case Kind::hook:
            return std::all_of(f.factors.begin(), f.factors.end(), hook_factor);
    }
    return false;
}

bool is_factorization_of(const Factorization& f, const Permutation& w) {
    return f.n == w.n() && is_valid(f) && eval_hecke_word(flatten(f), f.n) == w;
}

WeightPair weight(const Factorization& f) {
    if (!is_valid(f)) throw std::invalid_argument("invalid factorization");
    const int F = static_cast<int>(f.factors.size());
    WeightPair w;
    switch (f.kind) {
        case Kind::plain:
        case Kind::bounded_plain:
            w.x.resize(F);
            w.y.assign(F, 0);
            for (int i = 0; i < F; ++i) w.x[i] = static_cast<int>(f.factors[i].size());
            break;
        case Kind::circled_bounded:
            w.x.assign(F, 0);
            w.y.assign(F, 0);
            for (int k = 1; k <= F; ++k)
                for (const auto& l : f.factors[k - 1]) {
                    if (l.circled)
                        ++w.y[l.v - k];
                    else
                        ++w.x[k - 1];
                }
            break;
        case Kind::double_bounded:
        case Kind::double_unbounded: {
            int right = F - f.split;
            int half = std::max(right, f.split);
            w.x.assign(half, 0);
            w.y.assign(half, 0);
            for (int i = 0; i < right; ++i) w.x[i] = static_cast<int>(f.factors[f.split + i].size());
            for (int i = 0; i < f.split; ++i)
                w.y[i] = static_cast<int>(f.factors[f.split - 1 - i].size());
            break;
        }
        case Kind::hook:
            w.x.assign(F, 0);
            w.y.assign(F, 0);
            for (int i = 0; i < F; ++i)
                for (const auto& l : f.factors[i]) ++(l.circled ? w.y[i] : w.x[i]);
            break;
    }
    return w;
}

bool canonical_less(const Factorization& a, const Factorization& b) {
    auto key = [](const Factorization& f) {
        std::vector<int> word, mask, sizes;
        for (const auto& fac : f.factors) {
            sizes.push_back(static_cast<int>(fac.size()));
            for (const auto& l : fac) {
                word.push_back(l.v);
                mask.push_back(l.circled);
            }
        }
        return std::make_tuple(word.size(), word, mask, f.split, sizes);
    };
    return key(a) < key(b);
}

namespace {

// Candidate factors for one slot of the factorization.
using Slot = std::vector<Factor>;

Slot subsets_of(const std::vector<Letter>& alphabet_desc, bool decreasing) {
    Slot out;
    const int k = static_cast<int>(alphabet_desc.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
        Factor f;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) f.push_back(alphabet_desc[i]);
        if (!decreasing) std::reverse(f.begin(), f.end());
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Letter> plain_alphabet(int lo, int n) {
    std::vector<Letter> a;
    for (int v = n; v >= lo; --v) a.push_back(U(v));
    return a;
}

Slot circled_slot(int lo, int n) {
    std::vector<Letter> a;
    for (int v = n; v >= lo; --v) {
        a.push_back(U(v));
        a.push_back(O(v));
    }
    return subsets_of(a, true);
}

// Circled strictly decreasing set, then distinct uncircled letters increasing.
// Repeats of an uncircled letter do not change the value (s_i s_i = s_i), so they are
// added afterwards by expand_repeats.
Slot hook_skeleton_slot(int n) {
    Slot out;
    Slot circ = subsets_of(plain_alphabet(1, n), true);
    Slot plain = subsets_of(plain_alphabet(1, n), false);
    for (auto c : circ) {
        for (auto& l : c) l.circled = true;
        for (const auto& u : plain) {
            Factor f = c;
            f.insert(f.end(), u.begin(), u.end());
            out.push_back(std::move(f));
        }
    }
    return out;
}

void expand_repeats(const Factorization& skel, int spare, std::vector<Factorization>& out) {
    // Positions (factor, index) of uncircled letters, each may be repeated.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < static_cast<int>(skel.factors.size()); ++i)
        for (int k = 0; k < static_cast<int>(skel.factors[i].size()); ++k)
            if (!skel.factors[i][k].circled) slots.emplace_back(i, k);
    std::vector<int> extra(slots.size(), 0);
    auto emit = [&] {
        Factorization f = skel;
        for (int i = 0; i < static_cast<int>(f.factors.size()); ++i) {
            Factor g;
            for (int k = 0; k < static_cast<int>(skel.factors[i].size()); ++k) {
                g.push_back(skel.factors[i][k]);
                auto it = std::find(slots.begin(), slots.end(), std::make_pair(i, k));
                if (it != slots.end())
                    for (int r = 0; r < extra[it - slots.begin()]; ++r) g.push_back(skel.factors[i][k]);
            }
            f.factors[i] = std::move(g);
        }
        out.push_back(std::move(f));
    };
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == slots.size()) {
            emit();
            return;
        }
        for (int e = 0; e <= left; ++e) {
            extra[pos] = e;
            self(self, pos + 1, left - e);
        }
        extra[pos] = 0;
    };
    rec(rec, 0, spare);
}

Permutation apply_factor(Permutation p, const Factor& f) {
    for (auto it = f.rbegin(); it != f.rend(); ++it) p = hecke_apply(p, it->v);
    return p;
}

struct Search {
    const Permutation& target;
    const std::vector<Slot>& slots;
    Factorization proto;
    int max_letters;
    Reachability reach;
    std::vector<Factor> chosen;
    std::vector<Factorization> out;

    Search(const Permutation& t, const std::vector<Slot>& s, Factorization p, int ml)
        : target(t), slots(s), proto(std::move(p)), max_letters(ml), reach(t), chosen(s.size()) {}

    void run(int pos, const Permutation& state, int used) {
        if (pos < 0) {
            if (state == target) {
                Factorization f = proto;
                f.factors = chosen;
                out.push_back(std::move(f));
            }
            return;
        }
        for (const auto& cand : slots[pos]) {
            int u = used + static_cast<int>(cand.size());
            if (u > max_letters) continue;
            Permutation next = apply_factor(state, cand);
            if (!reach.reachable(next)) continue;
            chosen[pos] = cand;
            run(pos - 1, next, u);
        }
    }
};

std::vector<Factorization> search(const Permutation& w, const std::vector<Slot>& slots,
                                  const Factorization& proto, int max_letters, Exec exec) {
    const int F = static_cast<int>(slots.size());
    std::vector<Factorization> all;
    if (F == 0) {
        if (w.is_identity()) all.push_back(proto);
        return all;
    }
    const Permutation id = Permutation::identity(w.size());
    const Slot& last = slots[F - 1];
    auto parts = indexed_map<std::vector<Factorization>>(
        static_cast<int>(last.size()), exec, [&](int c) {
            Search s(w, slots, proto, max_letters);
            const Factor& cand = last[c];
            int used = static_cast<int>(cand.size());
            if (used > max_letters) return std::vector<Factorization>{};
            Permutation state = apply_factor(id, cand);
            if (!s.reach.reachable(state)) return std::vector<Factorization>{};
            s.chosen[F - 1] = cand;
            s.run(F - 2, state, used);
            return std::move(s.out);
        });
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()),
                                     std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
}

Factorization proto_of(Kind kind, int n, int split = 0) {
    Factorization f;
    f.kind = kind;
    f.n = n;
    f.split = split;
    return f;
}

}  // namespace

std::vector<Factorization> enumerate_bounded_plain(const Permutation& w, int max_letters,
                                                   Exec exec) {
    const int n = w.n();
    std::vector<Slot> slots;
    for (int i = 1; i <= n + 1; ++i) slots.push_back(subsets_of(plain_alphabet(i, n), true));
    return search(w, slots, proto_of(Kind::bounded_plain, n), max_letters, exec);
}

std::vector<Factorization> enumerate_circled_bounded(const Permutation& w, int max_letters,
                                                     Exec exec) {
    const int n = w.n();
    std::vector<Slot> slots;
    for (int i = 1; i <= n + 1; ++i) slots.push_back(circled_slot(i, n));
    return search(w, slots, proto_of(Kind::circled_bounded, n), max_letters, exec);
}

std::vector<Factorization> enumerate_double_bounded(const Permutation& w, int max_letters,
                                                    Exec exec) {
    const int n = w.n();
    std::vector<Slot> slots;
    for (int i = n + 1; i >= 1; --i) slots.push_back(subsets_of(plain_alphabet(i, n), false));
    for (int i = 1; i <= n + 1; ++i) slots.push_back(subsets_of(plain_alphabet(i, n), true));
    return search(w, slots, proto_of(Kind::double_bounded, n, n + 1), max_letters, exec);
}

std::vector<Factorization> enumerate_double_unbounded(const Permutation& w, int half_parts,
                                                      int max_letters, Exec exec) {
    const int n = w.n();
    std::vector<Slot> slots;
    for (int i = 0; i < half_parts; ++i) slots.push_back(subsets_of(plain_alphabet(1, n), false));
    for (int i = 0; i < half_parts; ++i) slots.push_back(subsets_of(plain_alphabet(1, n), true));
    return search(w, slots, proto_of(Kind::double_unbounded, n, half_parts), max_letters, exec);
}

std::vector<Factorization> enumerate_plain_unbounded(const Permutation& w, int parts,
                                                     int max_letters, Exec exec) {
    const int n = w.n();
    std::vector<Slot> slots(parts, subsets_of(plain_alphabet(1, n), true));
    return search(w, slots, proto_of(Kind::plain, n), max_letters, exec);
}

std::vector<Factorization> enumerate_hook(const Permutation& w, int parts, int max_letters,
                                          Exec exec) {
    const int n = w.n();
    std::vector<Slot> slots(parts, hook_skeleton_slot(n));
    auto skeletons = search(w, slots, proto_of(Kind::hook, n), max_letters, exec);
    auto parts_out = indexed_map<std::vector<Factorization>>(
        static_cast<int>(skeletons.size()), exec, [&](int i) {
            std::vector<Factorization> out;
            expand_repeats(skeletons[i], max_letters - static_cast<int>(skeletons[i].letters()), out);
            return out;
        });
    std::vector<Factorization> all;
    for (auto& p : parts_out)
        all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
}

Poly genfun(const std::vector<Factorization>& set, int m) {
    Poly p(m);
    if (set.empty()) return p;
    const Kind kind = set.front().kind;
    for (const auto& f : set) {
        if (f.kind != kind) throw std::invalid_argument("mixed factorization kinds");
        WeightPair w = weight(f);
        Monomial mono{std::vector<int>(2 * m, 0)};
        for (std::size_t i = 0; i < w.x.size(); ++i) {
            if (static_cast<int>(i) < m)
                mono.x(static_cast<int>(i) + 1) = w.x[i];
            else if (w.x[i] || w.y[i])
                throw std::invalid_argument("weight does not fit in the variable count");
            if (static_cast<int>(i) < m) mono.y(static_cast<int>(i) + 1) = w.y[i];
        }
        p.add_term(mono, 1);
    }
    return p;
}

std::vector<std::pair<Permutation, Permutation>> enumerate_X(const Permutation& w) {
    std::vector<std::pair<Permutation, Permutation>> out;
    auto perms = all_permutations(w.size());
    for (const auto& u : perms)
        for (const auto& v : perms)
            if (demazure_product(u, v) == w) out.emplace_back(u, v);
    return out;
}

Poly cauchy_sum(const Permutation& w, int m) {
    if (m == 0) m = w.size();
    Poly total(m);
    for (const auto& [u, v] : enumerate_X(w))
        total += swap_families(grothendieck_single(u.inverse(), m)) * grothendieck_single(v, m);
    return total;
}

namespace {

std::string circled_glyph(int v) {
    // U+2460 + v - 1, valid for v <= 20.
    unsigned cp = 0x2460 + static_cast<unsigned>(v - 1);
    std::string s;
    s += static_cast<char>(0xE0 | (cp >> 12));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
    return s;
}

}  // namespace

std::string to_text(const Factorization& f, bool ascii) {
    std::string s;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (is_double(f.kind) && static_cast<int>(i) == f.split) s += '|';
        s += '(';
        for (std::size_t k = 0; k < f.factors[i].size(); ++k) {
            const Letter& l = f.factors[i][k];
            if (k) s += ' ';
            if (l.circled && !ascii && l.v <= 20)
                s += circled_glyph(l.v);
            else
                s += std::to_string(l.v) + (l.circled ? "o" : "");
        }
        s += ')';
    }
    if (is_double(f.kind) && f.split == static_cast<int>(f.factors.size())) s += '|';
    return s;
}

Factorization parse_factorization(const std::string& text, Kind kind, int n) {
    Factorization f = proto_of(kind, n);
    bool saw_bar = false;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad factorization text: " + why);
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ') {
            ++i;
        } else if (c == '|') {
            if (saw_bar) fail("two centers");
            saw_bar = true;
            f.split = static_cast<int>(f.factors.size());
            ++i;
        } else if (c == '(') {
            std::size_t close = text.find(')', i);
            if (close == std::string::npos) fail("unclosed factor");
            std::string body = text.substr(i + 1, close - i - 1);
            bool spaced = body.find(' ') != std::string::npos;
            Factor fac;
            std::size_t k = 0;
            while (k < body.size()) {
                unsigned char b = static_cast<unsigned char>(body[k]);
                if (b == ' ') {
                    ++k;
                } else if (b >= '0' && b <= '9') {
                    std::size_t e = k + 1;
                    if (spaced)
                        while (e < body.size() && body[e] >= '0' && body[e] <= '9') ++e;
                    fac.push_back(U(std::stoi(body.substr(k, e - k))));
                    k = e;
                } else if (b == 'o') {
                    if (fac.empty() || fac.back().circled) fail("stray circle marker");
                    fac.back().circled = true;
                    ++k;
                } else if (b == 0xE2 && k + 2 < body.size()) {
                    unsigned cp = ((b & 0x0F) << 12) |
                                  ((static_cast<unsigned char>(body[k + 1]) & 0x3F) << 6) |
                                  (static_cast<unsigned char>(body[k + 2]) & 0x3F);
                    if (cp < 0x2460 || cp > 0x2473) fail("unknown glyph");
                    fac.push_back(O(static_cast<int>(cp - 0x2460) + 1));
                    k += 3;
                } else {
                    fail("unexpected character");
                }
            }
            f.factors.push_back(std::move(fac));
            i = close + 1;
        } else {
            fail("unexpected character outside factors");
        }
    }
    if (is_double(kind) && !saw_bar) fail("missing center");
    if (!is_double(kind) && saw_bar) fail("center in a one-sided kind");
    if (!is_valid(f)) fail("constraints violated");
    return f;
}

std::string to_json(const Factorization& f) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& fac : f.factors) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& l : fac) arr.push_back({{"v", l.v}, {"c", l.circled}});
        j.push_back(std::move(arr));
    }
    if (is_double(f.kind)) return nlohmann::ordered_json{{"split", f.split}, {"factors", j}}.dump();
    return j.dump();
}

Factorization factorization_from_json(const std::string& text, Kind kind, int n) {
    auto j = nlohmann::json::parse(text);
    Factorization f = proto_of(kind, n);
    const nlohmann::json* arr = &j;
    if (is_double(kind)) {
        f.split = j.at("split").get<int>();
        arr = &j.at("factors");
    }
    for (const auto& fac : *arr) {
        Factor g;
        for (const auto& l : fac) g.push_back({l.at("v").get<int>(), l.at("c").get<bool>()});
        f.factors.push_back(std::move(g));
    }
    if (!is_valid(f)) throw std::invalid_argument("factorization constraints violated");
    return f;
}

}  // namespace groth
