#include "groth/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace groth {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

bool is_strict(const Partition& p) {
    if (!is_partition(p)) return false;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] == p[i - 1]) return false;
    return true;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
    Partition c(p.empty() ? 0 : p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++c[j];
    return c;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

namespace {

void partitions_rec(int rows, int cap, Partition& cur, std::vector<Partition>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int part = cap; part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(rows, part, cur, out);
        cur.pop_back();
    }
}

bool partition_order(const Partition& a, const Partition& b) {
    int sa = size(a), sb = size(b);
    if (sa != sb) return sa < sb;
    return a > b;
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(rows, cols, cur, out);
    std::sort(out.begin(), out.end(), partition_order);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_in_box(n, n))
        if (size(p) == n) out.push_back(p);
    return out;
}

std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

long entry_key(const Entry& e, Alphabet a) {
    if (a == Alphabet::interleaved) return 2L * e.v - (e.primed ? 1 : 0);
    // Primes sit below every unprimed letter.
    return e.primed ? e.v : e.v + (1L << 30);
}

Tableau Tableau::blank(const SkewShape& s) {
    Tableau t;
    t.shape = s;
    for (int len : s.outer) t.rows.emplace_back(std::max(len, 0));
    return t;
}

namespace {

Box parse_box(const std::string& text) {
    Box b;
    const bool spaced = text.find(' ') != std::string::npos;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad tableau entry: " + text);
        std::size_t j = i + 1;
        if (spaced)
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        Entry e{std::stoi(text.substr(i, j - i)), false};
        if (e.v < 1) throw std::invalid_argument("bad tableau entry: " + text);
        if (j < text.size() && text[j] == '\'') {
            e.primed = true;
            ++j;
        }
        b.push_back(e);
        i = j;
    }
    return b;
}

}  // namespace

Tableau Tableau::parse(const std::vector<std::vector<std::string>>& rows, Partition inner) {
    SkewShape s;
    s.inner = inner;
    s.inner.resize(std::max(inner.size(), rows.size()), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) s.outer.push_back(s.inner[r] + rows[r].size());
    while (!s.inner.empty() && s.inner.back() == 0) s.inner.pop_back();
    Tableau t = blank(s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int off = r < inner.size() ? inner[r] : 0;
        for (std::size_t c = 0; c < rows[r].size(); ++c) t.rows[r][off + c] = parse_box(rows[r][c]);
    }
    return t;
}

bool Tableau::in_shape(int r, int c) const {
    if (r < 0 || r >= static_cast<int>(shape.outer.size()) || c < 0) return false;
    int lo = r < static_cast<int>(shape.inner.size()) ? shape.inner[r] : 0;
    return c >= lo && c < shape.outer[r];
}

int Tableau::box_count() const {
    int n = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) n += in_shape(r, c);
    return n;
}

int Tableau::entry_count() const {
    int n = 0;
    for (const auto& row : rows)
        for (const auto& b : row) n += static_cast<int>(b.size());
    return n;
}

namespace {

struct Cell {
    int r, c;
};

std::vector<Cell> cells_of(const Tableau& t) {
    std::vector<Cell> out;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c)
            if (t.in_shape(r, c)) out.push_back({int(r), int(c)});
    return out;
}

long min_key(const Box& b, Alphabet a) {
    long k = LONG_MAX;
    for (const auto& e : b) k = std::min(k, entry_key(e, a));
    return k;
}

long max_key(const Box& b, Alphabet a) {
    long k = LONG_MIN;
    for (const auto& e : b) k = std::max(k, entry_key(e, a));
    return k;
}

bool shares(const Box& a, const Box& b, bool primed) {
    for (const auto& e : a)
        if (e.primed == primed && std::find(b.begin(), b.end(), e) != b.end()) return true;
    return false;
}

bool has_duplicates(const Box& b) {
    std::set<Entry> s(b.begin(), b.end());
    return s.size() != b.size();
}

bool well_formed(const Tableau& t) {
    if (!is_partition(t.shape.outer) || !is_partition(t.shape.inner) ||
        !contains(t.shape.outer, t.shape.inner))
        return false;
    if (t.rows.size() != t.shape.outer.size()) return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (static_cast<int>(t.rows[r].size()) != t.shape.outer[r]) return false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            const Box& b = t.rows[r][c];
            if (t.in_shape(r, c) == b.empty()) return false;
            for (const auto& e : b)
                if (e.v < 1) return false;
        }
    }
    return true;
}

bool any_primed(const Tableau& t) {
    for (const auto& row : t.rows)
        for (const auto& b : row)
            for (const auto& e : b)
                if (e.primed) return true;
    return false;
}

// Box-to-right and box-below comparisons: max(b) rel min(b').
template <class RowOk, class ColOk>
bool neighbours_ok(const Tableau& t, RowOk row_ok, ColOk col_ok) {
    for (const auto& [r, c] : cells_of(t)) {
        if (t.in_shape(r, c + 1) && !row_ok(t.at(r, c), t.at(r, c + 1))) return false;
        if (t.in_shape(r + 1, c) && !col_ok(t.at(r, c), t.at(r + 1, c))) return false;
    }
    return true;
}

// Every letter with the given primedness appears in at most one box of each row (or column).
bool once_per_line(const Tableau& t, bool primed, bool by_row) {
    std::map<std::pair<int, Entry>, int> seen;
    for (const auto& [r, c] : cells_of(t)) {
        std::set<Entry> here(t.at(r, c).begin(), t.at(r, c).end());
        for (const auto& e : here)
            if (e.primed == primed && ++seen[{by_row ? r : c, e}] > 1) return false;
    }
    return true;
}

}  // namespace

bool is_svt(const Tableau& t) {
    if (!well_formed(t) || any_primed(t)) return false;
    for (const auto& [r, c] : cells_of(t))
        if (has_duplicates(t.at(r, c))) return false;
    const auto A = Alphabet::interleaved;
    return neighbours_ok(
        t, [&](const Box& a, const Box& b) { return max_key(a, A) < min_key(b, A); },
        [&](const Box& a, const Box& b) { return max_key(a, A) <= min_key(b, A); });
}

bool is_standard_svt(const Tableau& t) {
    if (!is_svt(t)) return false;
    std::vector<int> all;
    for (const auto& row : t.rows)
        for (const auto& b : row)
            for (const auto& e : b) all.push_back(e.v);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) return false;
    // Distinct letters make the weak column condition strict.
    return true;
}

bool is_psvt(const Tableau& t) {
    if (!well_formed(t) || !t.shape.inner.empty()) return false;
    for (const auto& [r, c] : cells_of(t))
        if (has_duplicates(t.at(r, c))) return false;
    const auto A = Alphabet::primes_first;
    auto le = [&](const Box& a, const Box& b) { return max_key(a, A) <= min_key(b, A); };
    return neighbours_ok(t, le, le) && once_per_line(t, false, true) &&
           once_per_line(t, true, false);
}

bool is_psmt(const Tableau& t) {
    if (!well_formed(t) || !t.shape.inner.empty()) return false;
    for (const auto& [r, c] : cells_of(t)) {
        std::map<Entry, int> mult;
        for (const auto& e : t.at(r, c))
            if (e.primed && ++mult[e] > 1) return false;
    }
    const auto A = Alphabet::interleaved;
    auto le = [&](const Box& a, const Box& b) { return max_key(a, A) <= min_key(b, A); };
    return neighbours_ok(t, le, le) && once_per_line(t, false, false) &&
           once_per_line(t, true, true);
}

bool is_pt(const Tableau& t) {
    if (!is_psmt(t)) return false;
    for (const auto& [r, c] : cells_of(t))
        if (t.at(r, c).size() != 1) return false;
    return true;
}

bool is_oft(const Tableau& t, const Partition& inner) {
    if (t.shape.inner != inner || !well_formed(t) || any_primed(t)) return false;
    if (t.shape.outer.size() != inner.size()) return false;
    for (const auto& [r, c] : cells_of(t)) {
        const Box& b = t.at(r, c);
        if (b.size() != 1 || b[0].v > inner[r]) return false;
        if (t.in_shape(r, c + 1) && t.at(r, c + 1)[0].v > b[0].v) return false;
        if (t.in_shape(r + 1, c) && t.at(r + 1, c)[0].v >= b[0].v) return false;
    }
    return true;
}

HeckeWord row_reading_word(const Tableau& t) {
    HeckeWord w;
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r)
        for (const auto& b : t.rows[r])
            for (const auto& e : b) w.push_back(e.v);
    return w;
}

HeckeWord column_reading_word(const Tableau& t) {
    HeckeWord w;
    const int cols = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
    for (int c = 0; c < cols; ++c)
        for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r)
            if (c < static_cast<int>(t.rows[r].size()))
                for (const auto& e : t.rows[r][c]) w.push_back(e.v);
    return w;
}

bool is_hecke_tableau(const Tableau& t, const Permutation& w) {
    if (!well_formed(t) || !t.shape.inner.empty() || any_primed(t)) return false;
    for (const auto& [r, c] : cells_of(t)) {
        const Box& b = t.at(r, c);
        if (b.size() != 1 || b[0].v > w.n()) return false;
        if (t.in_shape(r, c + 1) && t.at(r, c + 1)[0].v <= b[0].v) return false;
        if (t.in_shape(r + 1, c) && t.at(r + 1, c)[0].v <= b[0].v) return false;
    }
    return eval_hecke_word(row_reading_word(t), w.n()) == w;
}

Tableau transpose(const Tableau& t) {
    Tableau u = Tableau::blank({conjugate(t.shape.outer), conjugate(t.shape.inner)});
    for (const auto& [r, c] : cells_of(t)) u.at(c, r) = t.at(r, c);
    return u;
}

Tableau prime_all(const Tableau& t) {
    Tableau u = t;
    for (auto& row : u.rows)
        for (auto& b : row)
            for (auto& e : b) e.primed = true;
    return u;
}

WeightPair weight_of(const Tableau& t, int m) {
    int top = m;
    for (const auto& row : t.rows)
        for (const auto& b : row)
            for (const auto& e : b) top = std::max(top, e.v);
    WeightPair w{std::vector<int>(top, 0), std::vector<int>(top, 0)};
    for (const auto& row : t.rows)
        for (const auto& b : row)
            for (const auto& e : b) ++(e.primed ? w.y : w.x)[e.v - 1];
    return w;
}

namespace {

bool tableau_less(const Tableau& a, const Tableau& b) {
    int na = a.box_count(), nb = b.box_count();
    if (na != nb) return na < nb;
    if (a.shape.outer != b.shape.outer) return a.shape.outer < b.shape.outer;
    return a.rows < b.rows;
}

// Box-by-box backtracking in row-major order. Candidates are sorted by size so the
// remaining-budget check can stop the scan early.
template <class Ok, class Emit>
void fill(Tableau& t, const std::vector<Cell>& cells, std::size_t k, const std::vector<Box>& cands,
          int budget, const Ok& ok, Emit& emit) {
    if (k == cells.size()) {
        emit(t);
        return;
    }
    const int rest = static_cast<int>(cells.size() - k - 1);
    const auto [r, c] = cells[k];
    for (const Box& b : cands) {
        if (static_cast<int>(b.size()) + rest > budget) break;
        if (!ok(t, r, c, b)) continue;
        t.at(r, c) = b;
        fill(t, cells, k + 1, cands, budget - static_cast<int>(b.size()), ok, emit);
    }
    t.at(r, c).clear();
}

// Splits on the first cell's candidates and runs each branch as one task.
template <class Acc, class Ok, class Emit>
std::vector<Acc> run_split(const SkewShape& s, const std::vector<Box>& cands, int budget,
                           const Ok& ok, Exec exec, const Emit& emit) {
    Tableau t0 = Tableau::blank(s);
    auto cells = cells_of(t0);
    if (cells.empty()) {
        Acc acc{};
        emit(acc, t0);
        return {acc};
    }
    std::vector<const Box*> first;
    for (const Box& b : cands)
        if (static_cast<int>(b.size()) + static_cast<int>(cells.size()) - 1 <= budget &&
            ok(t0, cells[0].r, cells[0].c, b))
            first.push_back(&b);
    return indexed_map<Acc>(static_cast<int>(first.size()), exec, [&](int i) {
        Acc acc{};
        Tableau t = t0;
        const Box& b = *first[i];
        t.at(cells[0].r, cells[0].c) = b;
        auto sink = [&](const Tableau& done) { emit(acc, done); };
        fill(t, cells, 1, cands, budget - static_cast<int>(b.size()), ok, sink);
        return acc;
    });
}

template <class Ok>
std::vector<Tableau> collect(const SkewShape& s, const std::vector<Box>& cands, int budget,
                             const Ok& ok, Exec exec = Exec::parallel) {
    auto parts = run_split<std::vector<Tableau>>(
        s, cands, budget, ok, exec,
        [](std::vector<Tableau>& acc, const Tableau& t) { acc.push_back(t); });
    std::vector<Tableau> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end(), tableau_less);
    return out;
}

using MonoCounts = std::map<std::vector<int>, long>;

template <class Ok>
Poly weigh(const SkewShape& s, const std::vector<Box>& cands, int budget, const Ok& ok, int m,
           Exec exec) {
    auto parts = run_split<MonoCounts>(s, cands, budget, ok, exec, [m](MonoCounts& acc, const Tableau& t) {
        std::vector<int> e(2 * m, 0);
        for (const auto& row : t.rows)
            for (const auto& b : row)
                for (const auto& x : b) ++e[(x.primed ? m : 0) + x.v - 1];
        ++acc[e];
    });
    Poly p(m);
    for (const auto& part : parts)
        for (const auto& [e, c] : part) p.add_term(Monomial{e}, c);
    return p;
}

std::vector<Box> subsets(const std::vector<Entry>& letters, int max_size) {
    std::vector<Box> out;
    const int L = static_cast<int>(letters.size());
    for (long mask = 1; mask < (1L << L); ++mask) {
        Box b;
        for (int i = 0; i < L; ++i)
            if (mask >> i & 1) b.push_back(letters[i]);
        if (static_cast<int>(b.size()) <= max_size) out.push_back(b);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Box& a, const Box& b) { return a.size() < b.size(); });
    return out;
}

// Primed letters at most once, unprimed with multiplicity; at most max_size entries.
std::vector<Box> psmt_boxes(int m, int max_size) {
    std::vector<Box> out;
    Box cur;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > m) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        for (int p = 0; p <= 1; ++p) {
            if (p && static_cast<int>(cur.size()) >= max_size) break;
            if (p) cur.push_back(Ep(v));
            const std::size_t base = cur.size();
            while (true) {
                self(self, v + 1);
                if (static_cast<int>(cur.size()) >= max_size) break;
                cur.push_back(E(v));
            }
            cur.resize(base - p);
        }
    };
    rec(rec, 1);
    std::stable_sort(out.begin(), out.end(),
                     [](const Box& a, const Box& b) { return a.size() < b.size(); });
    return out;
}

std::vector<Entry> letters(int m, bool with_primes) {
    std::vector<Entry> out;
    if (with_primes)
        for (int v = 1; v <= m; ++v) out.push_back(Ep(v));
    for (int v = 1; v <= m; ++v) out.push_back(E(v));
    return out;
}

std::vector<Box> singles(const std::vector<Entry>& ls) {
    std::vector<Box> out;
    for (const auto& e : ls) out.push_back({e});
    return out;
}

// Neighbour tests for the cell being placed, against its left and upper boxes.
auto svt_ok = [](const Tableau& t, int r, int c, const Box& b) {
    const auto A = Alphabet::interleaved;
    if (t.in_shape(r, c - 1) && max_key(t.at(r, c - 1), A) >= min_key(b, A)) return false;
    if (t.in_shape(r - 1, c) && max_key(t.at(r - 1, c), A) > min_key(b, A)) return false;
    return true;
};

auto psvt_ok = [](const Tableau& t, int r, int c, const Box& b) {
    const auto A = Alphabet::primes_first;
    if (t.in_shape(r, c - 1)) {
        const Box& l = t.at(r, c - 1);
        if (max_key(l, A) > min_key(b, A) || shares(l, b, false)) return false;
    }
    if (t.in_shape(r - 1, c)) {
        const Box& u = t.at(r - 1, c);
        if (max_key(u, A) > min_key(b, A) || shares(u, b, true)) return false;
    }
    return true;
};

auto psmt_ok = [](const Tableau& t, int r, int c, const Box& b) {
    const auto A = Alphabet::interleaved;
    if (t.in_shape(r, c - 1)) {
        const Box& l = t.at(r, c - 1);
        if (max_key(l, A) > min_key(b, A) || shares(l, b, true)) return false;
    }
    if (t.in_shape(r - 1, c)) {
        const Box& u = t.at(r - 1, c);
        if (max_key(u, A) > min_key(b, A) || shares(u, b, false)) return false;
    }
    return true;
};

auto strict_ok = [](const Tableau& t, int r, int c, const Box& b) {
    if (t.in_shape(r, c - 1) && t.at(r, c - 1)[0].v >= b[0].v) return false;
    if (t.in_shape(r - 1, c) && t.at(r - 1, c)[0].v >= b[0].v) return false;
    return true;
};

SkewShape straight(const Partition& l) { return {l, {}}; }

}  // namespace

std::vector<Tableau> enumerate_hecke_tableaux(const Permutation& w, int max_boxes) {
    const int n = w.n();
    std::vector<Tableau> out;
    auto cands = singles(letters(n, false));
    for (const auto& shape : partitions_in_box(n, n)) {
        if (size(shape) > max_boxes) continue;
        for (auto& t : collect(straight(shape), cands, size(shape), strict_ok, Exec::serial))
            if (eval_hecke_word(row_reading_word(t), n) == w) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), tableau_less);
    return out;
}

std::vector<Tableau> enumerate_svt(const SkewShape& s, int m, int D) {
    return collect(s, subsets(letters(m, false), D), D, svt_ok);
}

std::vector<Tableau> enumerate_psvt(const Partition& l, int m, int D) {
    return collect(straight(l), subsets(letters(m, true), D), D, psvt_ok);
}

std::vector<Tableau> enumerate_psmt(const Partition& l, int m, int D) {
    return collect(straight(l), psmt_boxes(m, D), D, psmt_ok);
}

std::vector<Tableau> enumerate_pt(const Partition& l, int m) {
    return collect(straight(l), singles(letters(m, true)), size(l), psmt_ok);
}

Poly genfun_svt(const SkewShape& s, int m, int D, Exec exec) {
    return weigh(s, subsets(letters(m, false), D), D, svt_ok, m, exec);
}

Poly genfun_psvt(const Partition& l, int m, int D, Exec exec) {
    return weigh(straight(l), subsets(letters(m, true), D), D, psvt_ok, m, exec);
}

Poly genfun_psmt(const Partition& l, int m, int D, Exec exec) {
    return weigh(straight(l), psmt_boxes(m, D), D, psmt_ok, m, exec);
}

Poly genfun_pt(const Partition& l, int m, Exec exec) {
    return weigh(straight(l), singles(letters(m, true)), size(l), psmt_ok, m, exec);
}

namespace {

std::vector<Box> oft_cands(const Partition& inner) {
    int top = inner.empty() ? 0 : inner[0];
    std::vector<Box> out;
    for (int v = top; v >= 1; --v) out.push_back({E(v)});
    return out;
}

auto oft_ok = [](const Tableau& t, int r, int c, const Box& b) {
    const auto& inner = t.shape.inner;
    if (r >= static_cast<int>(inner.size()) || b[0].v > inner[r]) return false;
    if (t.in_shape(r, c - 1) && t.at(r, c - 1)[0].v < b[0].v) return false;
    if (t.in_shape(r - 1, c) && t.at(r - 1, c)[0].v <= b[0].v) return false;
    return true;
};

}  // namespace

std::vector<Tableau> enumerate_oft(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner) || outer.size() != inner.size()) return {};
    SkewShape s{outer, inner};
    return collect(s, oft_cands(inner), size(outer) - size(inner), oft_ok, Exec::serial);
}

long oft_count(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner) || outer.size() != inner.size()) return 0;
    SkewShape s{outer, inner};
    auto parts = run_split<long>(s, oft_cands(inner), size(outer) - size(inner), oft_ok,
                                 Exec::serial, [](long& acc, const Tableau&) { ++acc; });
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

Poly q_schur(const Partition& l, int m, int D) {
    if (!is_strict(l)) throw std::invalid_argument("q_schur needs a strict partition");
    if (size(l) > D) return Poly(m);
    // Shifted diagram as a skew shape: row r spans columns r .. r + l_r - 1.
    SkewShape s;
    for (std::size_t r = 0; r < l.size(); ++r) {
        s.outer.push_back(l[r] + static_cast<int>(r));
        s.inner.push_back(static_cast<int>(r));
    }
    auto ok = [](const Tableau& t, int r, int c, const Box& b) {
        const auto A = Alphabet::interleaved;
        const Entry e = b[0];
        if (t.in_shape(r, c - 1)) {
            const Entry f = t.at(r, c - 1)[0];
            if (entry_key(f, A) > entry_key(e, A) || (f == e && e.primed)) return false;
        }
        if (t.in_shape(r - 1, c)) {
            const Entry f = t.at(r - 1, c)[0];
            if (entry_key(f, A) > entry_key(e, A) || (f == e && !e.primed)) return false;
        }
        return true;
    };
    Poly p = weigh(s, singles(letters(m, true)), size(l), ok, m, Exec::serial);
    // Fold primed letters onto x.
    Poly out(m);
    for (const auto& [mono, c] : p.terms()) {
        Monomial x{std::vector<int>(2 * m, 0)};
        for (int i = 1; i <= m; ++i) x.x(i) = mono.x(i) + mono.y(i);
        out.add_term(x, c);
    }
    return out;
}

bool has_i_starting(const Tableau& t, int i) {
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r)
        for (const auto& b : t.rows[r])
            for (const auto& e : b)
                if (e.v == i) return !e.primed;
    return true;
}

bool has_i_lattice(const Tableau& t, int i) {
    // There is no letter 0, so the 1-lattice property holds outright.
    if (i <= 1) return true;
    int above = 0, below = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (int c = static_cast<int>(t.rows[r].size()) - 1; c >= 0; --c)
            for (const auto& e : t.rows[r][c]) {
                if (!e.primed && e.v == i) ++above;
                if (!e.primed && e.v == i - 1) ++below;
                if (above > below) return false;
                if (above == below && e.primed && e.v == i) return false;
            }
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r)
        for (const auto& b : t.rows[r])
            for (const auto& e : b) {
                if (e.primed && e.v == i) ++above;
                if (e.primed && e.v == i - 1) ++below;
                if (above > below) return false;
                if (above == below && !e.primed && e.v == i - 1) return false;
            }
    return true;
}

std::map<Partition, long> f_coefficients(const Partition& mu, int cap) {
    if (cap <= 0) cap = size(mu);
    std::map<Partition, long> out;
    for (const auto& t : enumerate_pt(mu, cap)) {
        bool good = true;
        for (int i = 1; i <= cap && good; ++i) good = has_i_starting(t, i) && has_i_lattice(t, i);
        if (!good) continue;
        auto w = weight_of(t, cap);
        Partition l;
        for (int i = 0; i < cap; ++i) l.push_back(w.x[i] + w.y[i]);
        while (!l.empty() && l.back() == 0) l.pop_back();
        if (!is_strict(l))
            throw std::logic_error("qualifying tableau with non-strict weight " + partition_str(l) +
                                   ":\n" + pretty(t));
        ++out[l];
    }
    return out;
}

long f_coefficient(const Partition& mu, const Partition& l) {
    if (size(mu) != size(l)) return 0;
    auto all = f_coefficients(mu);
    auto it = all.find(l);
    return it == all.end() ? 0 : it->second;
}

std::string entry_str(const Entry& e) { return std::to_string(e.v) + (e.primed ? "'" : ""); }

namespace {

std::string box_str(const Box& b) {
    bool wide = std::any_of(b.begin(), b.end(), [](const Entry& e) { return e.v >= 10; });
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) s += (wide && i ? " " : "") + entry_str(b[i]);
    return s;
}

}  // namespace

std::string pretty(const Tableau& t) {
    std::size_t width = 1;
    for (const auto& row : t.rows)
        for (const auto& b : row) width = std::max(width, box_str(b).size());
    std::string out;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            std::string s = t.in_shape(r, c) ? box_str(t.rows[r][c]) : ".";
            out += "[" + s + std::string(width - s.size(), ' ') + "]";
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Tableau& t) {
    nlohmann::json j;
    j["outer"] = t.shape.outer;
    j["inner"] = t.shape.inner;
    j["boxes"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        auto jr = nlohmann::json::array();
        for (const auto& b : row) {
            auto jb = nlohmann::json::array();
            for (const auto& e : b) jb.push_back(entry_str(e));
            jr.push_back(jb);
        }
        j["boxes"].push_back(jr);
    }
    return j.dump();
}

Tableau tableau_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Tableau t = Tableau::blank({j.at("outer").get<Partition>(), j.at("inner").get<Partition>()});
    const auto& rows = j.at("boxes");
    if (rows.size() != t.rows.size()) throw std::invalid_argument("row count does not match shape");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != t.rows[r].size())
            throw std::invalid_argument("row length does not match shape");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            for (const auto& s : rows[r][c]) {
                Box b = parse_box(s.get<std::string>());
                if (b.size() != 1) throw std::invalid_argument("bad entry in json");
                t.rows[r][c].push_back(b[0]);
            }
    }
    return t;
}

}  // namespace groth
