#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace groth {

// One-line notation, 1-based values. size() = n+1.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity(int size);
    static Permutation longest(int size);

    int size() const { return static_cast<int>(v_.size()); }
    int n() const { return size() - 1; }
    int operator[](int pos) const { return v_[pos - 1]; }
    int position_of(int value) const;
    const std::vector<int>& oneline() const { return v_; }

    Permutation inverse() const;
    // (this ∘ other)(j) = this(other(j))
    Permutation compose(const Permutation& other) const;
    // Embeds into S_size, fixing the new values.
    Permutation extended(int size) const;
    // Shifts by k: fixes 1..k and sends k+j to k+this(j).
    Permutation shifted(int k) const;

    bool is_identity() const;
    std::string str() const;
    static Permutation parse(const std::string& text);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> v_;
};

using HeckeWord = std::vector<int>;

struct BadIndex : std::out_of_range {
    using std::out_of_range::out_of_range;
};

Permutation hecke_apply(const Permutation& p, int i);
Permutation eval_hecke_word(const HeckeWord& w, int n);
bool hecke_equivalent(const HeckeWord& a, const HeckeWord& b, int n);
int inversions(const Permutation& p);

// Canonical order: by length, then lexicographic.
std::vector<HeckeWord> enumerate_hecke_words(const Permutation& w, int max_len);
std::vector<HeckeWord> enumerate_hecke_words_brute(const Permutation& w, int max_len);
std::vector<HeckeWord> reduced_words(const Permutation& w);
HeckeWord least_reduced_word(const Permutation& w);
Permutation demazure_product(const Permutation& u, const Permutation& v);

std::vector<Permutation> all_permutations(int size);

// Answers "can some prefix word carry state p to target?" with memoization.
class Reachability {
public:
    explicit Reachability(const Permutation& target);
    bool reachable(const Permutation& p);
    const Permutation& target() const { return target_; }

private:
    Permutation target_;
    int target_inv_;
    std::vector<signed char> memo_;
    std::size_t index(const Permutation& p) const;
};

std::string word_str(const HeckeWord& w, int n);
HeckeWord parse_word(const std::string& text);

}  // namespace groth
