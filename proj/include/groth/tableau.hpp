#pragma once

#include <map>
#include <string>
#include <vector>

#include "groth/exec.hpp"
#include "groth/factor.hpp"
#include "groth/hecke.hpp"
#include "groth/poly.hpp"

namespace groth {

using Partition = std::vector<int>;

bool is_partition(const Partition& p);
bool is_strict(const Partition& p);
int size(const Partition& p);
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);
// Every partition fitting inside rows x cols, by size then reverse lex.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> partitions_of(int n);
std::string partition_str(const Partition& p);

struct SkewShape {
    Partition outer, inner;
    bool operator==(const SkewShape&) const = default;
};

struct Entry {
    int v = 0;
    bool primed = false;
    auto operator<=>(const Entry&) const = default;
};

inline Entry E(int v) { return {v, false}; }
inline Entry Ep(int v) { return {v, true}; }

// primes_first: 1' < 2' < ... < 1 < 2 < ...;  interleaved: 1' < 1 < 2' < 2 < ...
enum class Alphabet { primes_first, interleaved };
long entry_key(const Entry& e, Alphabet a);

using Box = std::vector<Entry>;

struct Tableau {
    SkewShape shape;
    // rows[r] has outer[r] boxes; the first inner[r] stay empty.
    std::vector<std::vector<Box>> rows;

    static Tableau blank(const SkewShape& s);
    // Rows of box strings. "1'2'" is two entries; with spaces ("10 11'") tokens are whole numbers.
    static Tableau parse(const std::vector<std::vector<std::string>>& rows, Partition inner = {});

    bool in_shape(int r, int c) const;
    Box& at(int r, int c) { return rows[r][c]; }
    const Box& at(int r, int c) const { return rows[r][c]; }
    int box_count() const;
    int entry_count() const;
    bool operator==(const Tableau&) const = default;
};

bool is_svt(const Tableau& t);
bool is_standard_svt(const Tableau& t);
bool is_psvt(const Tableau& t);
bool is_psmt(const Tableau& t);
bool is_pt(const Tableau& t);
bool is_oft(const Tableau& t, const Partition& inner);
bool is_hecke_tableau(const Tableau& t, const Permutation& w);

// Rows left to right, bottom row to top.
HeckeWord row_reading_word(const Tableau& t);
// Columns bottom to top, left column to right.
HeckeWord column_reading_word(const Tableau& t);

Tableau transpose(const Tableau& t);
Tableau prime_all(const Tableau& t);

WeightPair weight_of(const Tableau& t, int m = 0);

std::vector<Tableau> enumerate_hecke_tableaux(const Permutation& w, int max_boxes);
std::vector<Tableau> enumerate_svt(const SkewShape& s, int m, int D);
std::vector<Tableau> enumerate_psvt(const Partition& l, int m, int D);
std::vector<Tableau> enumerate_psmt(const Partition& l, int m, int D);
std::vector<Tableau> enumerate_pt(const Partition& l, int m);
std::vector<Tableau> enumerate_oft(const Partition& outer, const Partition& inner);

Poly genfun_svt(const SkewShape& s, int m, int D, Exec exec = Exec::parallel);
Poly genfun_psvt(const Partition& l, int m, int D, Exec exec = Exec::parallel);
Poly genfun_psmt(const Partition& l, int m, int D, Exec exec = Exec::parallel);
Poly genfun_pt(const Partition& l, int m, Exec exec = Exec::parallel);

long oft_count(const Partition& outer, const Partition& inner);
// Marked shifted tableaux, primes allowed on the diagonal. Throws on non-strict l.
Poly q_schur(const Partition& l, int m, int D);

bool has_i_starting(const Tableau& t, int i);
bool has_i_lattice(const Tableau& t, int i);
// Qualifying PT(mu) counted by combined weight. Throws std::logic_error on a non-strict weight.
std::map<Partition, long> f_coefficients(const Partition& mu, int cap = 0);
long f_coefficient(const Partition& mu, const Partition& l);

std::string entry_str(const Entry& e);
std::string pretty(const Tableau& t);
std::string to_json(const Tableau& t);
Tableau tableau_from_json(const std::string& text);

}  // namespace groth
