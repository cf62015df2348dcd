#include "groth/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace groth {

Permutation::Permutation(std::vector<int> oneline) : v_(std::move(oneline)) {
    std::vector<char> seen(v_.size() + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
            throw std::invalid_argument("not a permutation of 1..size");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int size) {
    std::vector<int> v(size);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int size) {
    std::vector<int> v(size);
    for (int i = 0; i < size; ++i) v[i] = size - i;
    return Permutation(std::move(v));
}

int Permutation::position_of(int value) const {
    auto it = std::find(v_.begin(), v_.end(), value);
    return static_cast<int>(it - v_.begin()) + 1;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) inv[v_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("size mismatch in compose");
    std::vector<int> r(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) r[j] = v_[other.v_[j] - 1];
    return Permutation(std::move(r));
}

Permutation Permutation::extended(int sz) const {
    if (sz < size()) throw std::invalid_argument("cannot shrink a permutation");
    std::vector<int> r = v_;
    for (int x = size() + 1; x <= sz; ++x) r.push_back(x);
    return Permutation(std::move(r));
}

Permutation Permutation::shifted(int k) const {
    std::vector<int> r(k);
    std::iota(r.begin(), r.end(), 1);
    for (int x : v_) r.push_back(x + k);
    return Permutation(std::move(r));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (v_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v_[i]);
    }
    return s;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in permutation");
        std::size_t used = 0;
        int x = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad permutation entry: " + tok);
        v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(v));
}

Permutation hecke_apply(const Permutation& p, int i) {
    if (i < 1 || i > p.n()) throw BadIndex("generator index out of range");
    int a = p.position_of(i), b = p.position_of(i + 1);
    if (a > b) return p;
    std::vector<int> v = p.oneline();
    std::swap(v[a - 1], v[b - 1]);
    return Permutation(std::move(v));
}

Permutation eval_hecke_word(const HeckeWord& w, int n) {
    Permutation p = Permutation::identity(n + 1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) p = hecke_apply(p, *it);
    return p;
}

bool hecke_equivalent(const HeckeWord& a, const HeckeWord& b, int n) {
    return eval_hecke_word(a, n) == eval_hecke_word(b, n);
}

int inversions(const Permutation& p) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p[i] > p[j]) ++c;
    return c;
}

Reachability::Reachability(const Permutation& target)
    : target_(target), target_inv_(inversions(target)) {
    std::size_t total = 1;
    for (int k = 2; k <= target.size(); ++k) total *= static_cast<std::size_t>(k);
    memo_.assign(total, -1);
}

std::size_t Reachability::index(const Permutation& p) const {
    // Lehmer code rank.
    std::size_t r = 0;
    int sz = p.size();
    for (int i = 1; i <= sz; ++i) {
        int smaller = 0;
        for (int j = i + 1; j <= sz; ++j)
            if (p[j] < p[i]) ++smaller;
        r = r * static_cast<std::size_t>(sz - i + 1) + static_cast<std::size_t>(smaller);
    }
    return r;
}

bool Reachability::reachable(const Permutation& p) {
    std::size_t k = index(p);
    if (memo_[k] >= 0) return memo_[k];
    bool ok = false;
    if (p == target_) {
        ok = true;
    } else if (inversions(p) < target_inv_) {
        for (int i = 1; i <= p.n() && !ok; ++i) {
            Permutation q = hecke_apply(p, i);
            if (q != p && reachable(q)) ok = true;
        }
    }
    memo_[k] = ok ? 1 : 0;
    return ok;
}

namespace {

bool word_less(const HeckeWord& a, const HeckeWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::vector<HeckeWord> enumerate_hecke_words(const Permutation& w, int max_len) {
    // Words grow leftward; the state is the value of the current suffix.
    const int n = w.n();
    const int target_inv = inversions(w);
    Reachability reach(w);
    std::vector<HeckeWord> out;
    struct Node {
        HeckeWord suffix;
        Permutation state;
    };
    std::vector<Node> layer{{{}, Permutation::identity(n + 1)}};
    for (int len = 0; len <= max_len && !layer.empty(); ++len) {
        std::vector<Node> next;
        for (auto& node : layer) {
            if (node.state == w) out.push_back(node.suffix);
            if (len == max_len) continue;
            for (int i = 1; i <= n; ++i) {
                Permutation q = hecke_apply(node.state, i);
                if (target_inv - inversions(q) > max_len - len - 1) continue;
                if (!reach.reachable(q)) continue;
                HeckeWord s;
                s.reserve(node.suffix.size() + 1);
                s.push_back(i);
                s.insert(s.end(), node.suffix.begin(), node.suffix.end());
                next.push_back({std::move(s), std::move(q)});
            }
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

std::vector<HeckeWord> enumerate_hecke_words_brute(const Permutation& w, int max_len) {
    const int n = w.n();
    std::vector<HeckeWord> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int len = 0; len <= max_len; ++len) {
        HeckeWord cur(len, 1);
        while (true) {
            if (eval_hecke_word(cur, n) == w) out.push_back(cur);
            int pos = len - 1;
            while (pos >= 0 && cur[pos] == n) cur[pos--] = 1;
            if (pos < 0) break;
            ++cur[pos];
        }
    }
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

std::vector<HeckeWord> reduced_words(const Permutation& w) {
    return enumerate_hecke_words(w, inversions(w));
}

HeckeWord least_reduced_word(const Permutation& w) {
    // Greedy: smallest first letter that still leaves a reduced completion.
    // Peeling from the left: w = s_i * w' with l(w') = l(w)-1 iff value i+1 precedes i.
    HeckeWord out;
    Permutation cur = w;
    while (!cur.is_identity()) {
        for (int i = 1; i <= cur.n(); ++i) {
            if (cur.position_of(i + 1) < cur.position_of(i)) {
                std::vector<int> v = cur.oneline();
                std::swap(v[cur.position_of(i) - 1], v[cur.position_of(i + 1) - 1]);
                cur = Permutation(std::move(v));
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

Permutation demazure_product(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("size mismatch in demazure_product");
    HeckeWord w = least_reduced_word(u);
    HeckeWord wv = least_reduced_word(v);
    w.insert(w.end(), wv.begin(), wv.end());
    return eval_hecke_word(w, u.n());
}

std::vector<Permutation> all_permutations(int size) {
    std::vector<int> v(size);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::string word_str(const HeckeWord& w, int n) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (n > 9 && i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

HeckeWord parse_word(const std::string& text) {
    HeckeWord w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad letter in word");
            w.push_back(c - '0');
        }
    }
    return w;
}

}  // namespace groth
