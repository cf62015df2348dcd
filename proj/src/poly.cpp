#include "groth/poly.hpp"

#include <algorithm>
#include "json.hpp"
#include <numeric>
#include <stdexcept>

namespace groth {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

int Monomial::degree(Family f) const {
    auto b = e.begin() + (f == Family::x ? 0 : m());
    return std::accumulate(b, b + m(), 0);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
}

Poly Poly::constant(int m, const mpz_class& c) {
    Poly p(m);
    p.add_term(Monomial{std::vector<int>(2 * m, 0)}, c);
    return p;
}

Poly Poly::var(int m, Family f, int i) {
    if (i < 1 || i > m) throw BadIndex("variable index out of range");
    Monomial mono{std::vector<int>(2 * m, 0)};
    (f == Family::x ? mono.x(i) : mono.y(i)) = 1;
    return monomial(std::move(mono));
}

Poly Poly::monomial(Monomial mono, const mpz_class& c) {
    Poly p(mono.m());
    p.add_term(mono, c);
    return p;
}

void Poly::add_term(const Monomial& mono, const mpz_class& c) {
    if (mono.m() != m_ || mono.e.size() != static_cast<std::size_t>(2 * m_))
        throw std::invalid_argument("monomial size does not match polynomial");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class Poly::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Poly::check_same_m(const Poly& o) const {
    if (m_ != o.m_) throw std::invalid_argument("mixed variable counts");
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_m(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_m(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r(m_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_m(o);
    Poly r(m_);
    Monomial prod{std::vector<int>(2 * m_)};
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t k = 0; k < prod.e.size(); ++k) prod.e[k] = ma.e[k] + mb.e[k];
            r.add_term(prod, ca * cb);
        }
    return r;
}

Poly Poly::operator*(const mpz_class& c) const {
    Poly r(m_);
    if (c == 0) return r;
    for (const auto& [mono, a] : terms_) r.terms_.emplace(mono, a * c);
    return r;
}

Poly Poly::with_m(int m) const {
    Poly r(m);
    for (const auto& [mono, c] : terms_) {
        Monomial t{std::vector<int>(2 * m, 0)};
        bool keep = true;
        for (int i = 1; i <= m_; ++i) {
            if (i <= m) {
                t.x(i) = mono.x(i);
                t.y(i) = mono.y(i);
            } else if (mono.x(i) || mono.y(i)) {
                keep = false;
            }
        }
        if (keep) r.add_term(t, c);
    }
    return r;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

Poly swap_vars(const Poly& p, Family f, int i) {
    if (i < 1 || i >= p.m()) throw BadIndex("swap index out of range");
    int off = f == Family::x ? 0 : p.m();
    Poly r(p.m());
    for (const auto& [mono, c] : p.terms()) {
        Monomial t = mono;
        std::swap(t.e[off + i - 1], t.e[off + i]);
        r.add_term(t, c);
    }
    return r;
}

Poly swap_x(const Poly& p, int i) { return swap_vars(p, Family::x, i); }

Poly delta(int i, const Poly& f) {
    if (i < 1 || i >= f.m()) throw BadIndex("delta index out of range");
    // (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1}), a > b, is
    // x_i^b x_{i+1}^b * sum_{k=0}^{a-b-1} x_i^{a-b-1-k} x_{i+1}^k.
    Poly r(f.m());
    for (const auto& [mono, c] : f.terms()) {
        int a = mono.x(i), b = mono.x(i + 1);
        if (a == b) continue;
        mpz_class sign = a > b ? 1 : -1;
        int hi = std::max(a, b), lo = std::min(a, b);
        Monomial t = mono;
        for (int k = 0; k < hi - lo; ++k) {
            t.x(i) = lo + (hi - lo - 1 - k);
            t.x(i + 1) = lo + k;
            r.add_term(t, sign * c);
        }
    }
    return r;
}

Poly pi(int i, const Poly& f) {
    return delta(i, f) + delta(i, Poly::var(f.m(), Family::x, i + 1) * f);
}

Poly pi_word(const HeckeWord& w, const Poly& f) {
    Poly r = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = pi(*it, r);
    return r;
}

Poly substitute_zero(const Poly& p, Family f, int keep) {
    if (keep < 0 || keep > p.m()) throw BadIndex("keep out of range");
    Poly r(p.m());
    for (const auto& [mono, c] : p.terms()) {
        bool dead = false;
        for (int i = keep + 1; i <= p.m() && !dead; ++i)
            dead = (f == Family::x ? mono.x(i) : mono.y(i)) > 0;
        if (!dead) r.add_term(mono, c);
    }
    return r;
}

Poly set_y_equal_x(const Poly& p) {
    Poly r(p.m());
    for (const auto& [mono, c] : p.terms()) {
        Monomial t = mono;
        for (int i = 1; i <= p.m(); ++i) {
            t.x(i) += t.y(i);
            t.y(i) = 0;
        }
        r.add_term(t, c);
    }
    return r;
}

Poly swap_families(const Poly& p) {
    Poly r(p.m());
    for (const auto& [mono, c] : p.terms()) {
        Monomial t = mono;
        for (int i = 1; i <= p.m(); ++i) std::swap(t.x(i), t.y(i));
        r.add_term(t, c);
    }
    return r;
}

Poly truncate_degree(const Poly& p, int D) {
    Poly r(p.m());
    for (const auto& [mono, c] : p.terms())
        if (mono.degree() <= D) r.add_term(mono, c);
    return r;
}

Poly homogeneous_component(const Poly& p, int d) {
    Poly r(p.m());
    for (const auto& [mono, c] : p.terms())
        if (mono.degree() == d) r.add_term(mono, c);
    return r;
}

bool is_symmetric(const Poly& p, Family f) {
    for (int i = 1; i < p.m(); ++i)
        if (!(swap_vars(p, f, i) == p)) return false;
    return true;
}

std::string pretty(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        std::string body;
        auto put = [&](char name, int i, int e) {
            if (e == 0) return;
            if (!body.empty()) body += '*';
            body += name + std::to_string(i);
            if (e > 1) body += '^' + std::to_string(e);
        };
        for (int i = 1; i <= p.m(); ++i) put('x', i, mono.x(i));
        for (int i = 1; i <= p.m(); ++i) put('y', i, mono.y(i));
        mpz_class a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) s += '-';
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (body.empty()) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + '*';
            s += body;
        }
    }
    return s;
}

std::string to_json(const Poly& p) {
    nlohmann::ordered_json j;
    j["m"] = p.m();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : p.terms()) {
        nlohmann::ordered_json t;
        if (c.fits_slong_p())
            t["c"] = c.get_si();
        else
            t["c"] = c.get_str();
        t["x"] = std::vector<int>(mono.e.begin(), mono.e.begin() + p.m());
        t["y"] = std::vector<int>(mono.e.begin() + p.m(), mono.e.end());
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

Poly poly_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int m = j.at("m").get<int>();
    Poly p(m);
    for (const auto& t : j.at("terms")) {
        auto x = t.at("x").get<std::vector<int>>();
        auto y = t.at("y").get<std::vector<int>>();
        if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != m)
            throw std::invalid_argument("exponent vector length mismatch");
        Monomial mono{x};
        mono.e.insert(mono.e.end(), y.begin(), y.end());
        mpz_class c = t.at("c").is_string() ? mpz_class(t.at("c").get<std::string>())
                                            : mpz_class(t.at("c").get<long>());
        p.add_term(mono, c);
    }
    return p;
}

}  // namespace groth
