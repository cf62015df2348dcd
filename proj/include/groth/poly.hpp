#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "groth/hecke.hpp"

namespace groth {

enum class Family { x, y };

// Exponents of x_1..x_m followed by y_1..y_m.
struct Monomial {
    std::vector<int> e;

    int m() const { return static_cast<int>(e.size() / 2); }
    int degree() const;
    int degree(Family f) const;
    int& x(int i) { return e[i - 1]; }
    int& y(int i) { return e[m() + i - 1]; }
    int x(int i) const { return e[i - 1]; }
    int y(int i) const { return e[m() + i - 1]; }

    bool operator==(const Monomial&) const = default;
};

// Graded lex: higher total degree first, then lexicographically larger exponents (x block first).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    using Terms = std::map<Monomial, mpz_class, MonomialOrder>;

    explicit Poly(int m = 0) : m_(m) {}
    static Poly constant(int m, const mpz_class& c);
    static Poly var(int m, Family f, int i);
    static Poly monomial(Monomial mono, const mpz_class& c = 1);

    int m() const { return m_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& mono, const mpz_class& c);
    mpz_class coefficient(const Monomial& mono) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const mpz_class& c) const;

    bool operator==(const Poly& o) const { return m_ == o.m_ && terms_ == o.terms_; }

    // Re-embeds into a different variable count; shrinking drops terms using removed variables.
    Poly with_m(int m) const;
    int degree() const;

private:
    int m_;
    Terms terms_;
    void check_same_m(const Poly& o) const;
};

Poly swap_x(const Poly& p, int i);
Poly swap_vars(const Poly& p, Family f, int i);
Poly delta(int i, const Poly& f);
Poly pi(int i, const Poly& f);
// pi_{w_1}( pi_{w_2}( ... f ))
Poly pi_word(const HeckeWord& w, const Poly& f);

Poly substitute_zero(const Poly& p, Family f, int keep);
Poly set_y_equal_x(const Poly& p);
// Replaces every x_i by y_i and vice versa.
Poly swap_families(const Poly& p);
Poly truncate_degree(const Poly& p, int D);
Poly homogeneous_component(const Poly& p, int d);
bool is_symmetric(const Poly& p, Family f);

std::string pretty(const Poly& p);
std::string to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

}  // namespace groth
