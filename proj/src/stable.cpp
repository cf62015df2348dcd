#include "groth/stable.hpp"

#include <mutex>
#include <stdexcept>

#include "groth/factor.hpp"
#include "groth/groth.hpp"
#include "json.hpp"

namespace groth {

Poly stable_single(const Permutation& w, const TruncationSpec& t, Exec exec) {
    return truncate_degree(genfun(enumerate_plain_unbounded(w, t.m, t.D, exec), t.m), t.D);
}

Poly stable_double(const Permutation& w, const TruncationSpec& t, Exec exec) {
    return truncate_degree(genfun(enumerate_double_unbounded(w, t.m, t.D, exec), t.m), t.D);
}

Poly halfweak_stable(const Permutation& w, const TruncationSpec& t, Exec exec) {
    return truncate_degree(genfun(enumerate_hook(w, t.m, t.D, exec), t.m), t.D);
}

namespace {

Poly restrict_vars(Poly p, int m) {
    const int keep = std::min(m, p.m());
    p = substitute_zero(substitute_zero(p, Family::x, keep), Family::y, keep);
    return p.with_m(m);
}

}  // namespace

Poly stable_single_operator(const Permutation& w, const TruncationSpec& t) {
    return truncate_degree(restrict_vars(grothendieck_single(w.shifted(t.effective_shift())), t.m), t.D);
}

Poly stable_double_operator(const Permutation& w, const TruncationSpec& t) {
    return truncate_degree(restrict_vars(grothendieck_double(w.shifted(t.effective_shift())), t.m), t.D);
}

std::map<Partition, long> hecke_shape_counts(const Permutation& w, int max_boxes) {
    std::map<Partition, long> out;
    for (const auto& t : enumerate_hecke_tableaux(w, max_boxes)) ++out[t.shape.outer];
    return out;
}

bool is_rook_strip(const Partition& mu, const Partition& rho) {
    if (!contains(mu, rho)) return false;
    auto gaps_ok = [](const Partition& a, const Partition& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] - (i < b.size() ? b[i] : 0) > 1) return false;
        return true;
    };
    return gaps_ok(mu, rho) && gaps_ok(conjugate(mu), conjugate(rho));
}

namespace {

// Sub-partitions of l, smallest first.
std::vector<Partition> subpartitions(const Partition& l) {
    std::vector<Partition> out;
    for (const auto& p : partitions_in_box(static_cast<int>(l.size()), l.empty() ? 0 : l[0]))
        if (contains(l, p)) out.push_back(p);
    return out;
}

struct TabTerm {
    long count;
    Partition shape, mu, rho;
};

std::vector<TabTerm> tabt_terms(const Permutation& w, int D) {
    std::vector<TabTerm> out;
    for (const auto& [shape, count] : hecke_shape_counts(w, D))
        for (const auto& mu : subpartitions(shape))
            for (const auto& rho : subpartitions(mu))
                if (is_rook_strip(mu, rho)) out.push_back({count, shape, mu, rho});
    return out;
}

Poly sum_of(const std::vector<Poly>& parts, int m) {
    Poly s(m);
    for (const auto& p : parts) s += p;
    return s;
}

Poly tabt_sum(const Permutation& w, const TruncationSpec& t, Exec exec, bool weak) {
    auto terms = tabt_terms(w, t.D);
    auto parts = indexed_map<Poly>(static_cast<int>(terms.size()), exec, [&](int i) {
        const auto& term = terms[i];
        Poly gx = genfun_svt({term.shape, term.rho}, t.m, t.D, Exec::serial);
        Poly gy = swap_families(genfun_svt({conjugate(term.mu), {}}, t.m, t.D, Exec::serial));
        if (weak) {
            gx = omega(gx, Family::x);
            gy = omega(gy, Family::y);
        }
        return truncate_degree(gx * gy, t.D) * mpz_class(term.count);
    });
    return sum_of(parts, t.m);
}

}  // namespace

Poly stable_single_via_tableaux(const Permutation& w, const TruncationSpec& t, Exec exec) {
    std::vector<std::pair<Partition, long>> counts;
    for (const auto& c : hecke_shape_counts(w, t.D)) counts.push_back(c);
    auto parts = indexed_map<Poly>(static_cast<int>(counts.size()), exec, [&](int i) {
        return genfun_svt({counts[i].first, {}}, t.m, t.D, Exec::serial) * mpz_class(counts[i].second);
    });
    return sum_of(parts, t.m);
}

Poly stable_double_via_tableaux(const Permutation& w, const TruncationSpec& t, Exec exec) {
    return tabt_sum(w, t, exec, false);
}

Poly weak_stable_double_via_tableaux(const Permutation& w, const TruncationSpec& t, Exec exec) {
    return tabt_sum(w, t, exec, true);
}

Poly halfweak_via_tableaux(const Permutation& w, const TruncationSpec& t, Exec exec) {
    std::vector<std::pair<Partition, long>> counts;
    for (const auto& c : hecke_shape_counts(w, t.D)) counts.push_back(c);
    auto parts = indexed_map<Poly>(static_cast<int>(counts.size()), exec, [&](int i) {
        return genfun_psmt(counts[i].first, t.m, t.D, Exec::serial) * mpz_class(counts[i].second);
    });
    return sum_of(parts, t.m);
}

Poly schur_poly(const Partition& l, int m, Family f) {
    if (static_cast<int>(l.size()) > m) return Poly(m);
    // Single-entry set-valued fillings of the conjugate shape are transposed semistandard tableaux.
    const int d = size(l);
    Poly s = homogeneous_component(genfun_svt({conjugate(l), {}}, m, d, Exec::serial), d);
    return f == Family::x ? s : swap_families(s);
}

namespace {

int exponent(const Monomial& mono, Family f, int i) { return f == Family::x ? mono.x(i) : mono.y(i); }

const Poly& cached_schur(const Partition& l, int m, Family f) {
    static std::mutex mu;
    static std::map<std::tuple<Partition, int, Family>, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(l, m, f);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, schur_poly(l, m, f)).first;
    return it->second;
}

}  // namespace

SchurExpansion schur_expand(const Poly& p, Family f, int d) {
    const Family other = f == Family::x ? Family::y : Family::x;
    for (const auto& [mono, c] : p.terms())
        if (mono.degree(other) != 0 || mono.degree(f) != d)
            throw std::invalid_argument("schur_expand: input is not homogeneous in one family");
    if (!is_symmetric(p, f)) throw std::invalid_argument("schur_expand: input is not symmetric");
    SchurExpansion out;
    Poly rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().begin();
        Partition l;
        for (int i = 1; i <= p.m(); ++i) l.push_back(exponent(lead, f, i));
        while (!l.empty() && l.back() == 0) l.pop_back();
        if (!is_partition(l)) throw std::logic_error("schur_expand: leading exponent is not a partition");
        const mpz_class coeff = c;
        out[l] += coeff;
        rest -= cached_schur(l, p.m(), f) * coeff;
    }
    return out;
}

Poly omega(const Poly& p, Family f) {
    const int m = p.m();
    // Split by the other family's monomial and by degree in f.
    std::map<std::pair<std::vector<int>, int>, Poly> pieces;
    for (const auto& [mono, c] : p.terms()) {
        Monomial own = mono, rest = mono;
        for (int i = 1; i <= m; ++i) {
            if (f == Family::x) own.y(i) = 0, rest.x(i) = 0;
            else own.x(i) = 0, rest.y(i) = 0;
        }
        auto [it, _] = pieces.try_emplace({rest.e, own.degree(f)}, Poly(m));
        it->second.add_term(own, c);
    }
    Poly out(m);
    for (const auto& [key, piece] : pieces) {
        const Poly rest = Poly::monomial(Monomial{key.first});
        for (const auto& [l, c] : schur_expand(piece, f, key.second))
            out += cached_schur(conjugate(l), m, f) * rest * c;
    }
    return out;
}

Poly weak_symmetric(const Partition& l, const TruncationSpec& t) {
    return omega(genfun_svt({l, {}}, t.m, t.D), Family::x);
}

Poly weak_stable_double(const Permutation& w, const TruncationSpec& t, Exec exec) {
    return omega(omega(stable_double(w, t, exec), Family::x), Family::y);
}

QExpansion qschur_expansion(const Permutation& w, int D) {
    QExpansion out;
    std::map<Partition, std::map<Partition, long>> f_cache;
    for (const auto& [rho, h] : hecke_shape_counts(w, D))
        for (int d = size(rho); d <= D; ++d)
            for (const auto& mu : partitions_of(d)) {
                if (mu.size() != rho.size() || !contains(mu, rho)) continue;
                const long k = oft_count(mu, rho);
                if (k == 0) continue;
                auto it = f_cache.find(mu);
                if (it == f_cache.end()) it = f_cache.emplace(mu, f_coefficients(mu)).first;
                for (const auto& [l, f] : it->second) out[l] += h * k * f;
            }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

QExpansion degree_stratum(const QExpansion& e, int d) {
    QExpansion out;
    for (const auto& [l, c] : e)
        if (size(l) == d) out[l] = c;
    return out;
}

Poly qschur_sum(const QExpansion& e, int m, int D) {
    Poly s(m);
    for (const auto& [l, c] : e)
        if (size(l) <= D) s += q_schur(l, m, D) * mpz_class(c);
    return s;
}

std::string to_json(const QExpansion& e) {
    // Larger degree first, then reverse lex, so (4) precedes (3,1).
    std::vector<std::pair<Partition, long>> items(e.begin(), e.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (size(a.first) != size(b.first)) return size(a.first) > size(b.first);
        return a.first > b.first;
    });
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [l, c] : items) j[nlohmann::json(l).dump()] = c;
    return j.dump();
}

Poly compute_model(Model model, const Permutation& w, const TruncationSpec& t) {
    switch (model) {
        case Model::stable_single: return stable_single(w, t);
        case Model::stable_double: return stable_double(w, t);
        case Model::halfweak: return halfweak_stable(w, t);
        case Model::single_operator: return stable_single_operator(w, t);
        case Model::double_operator: return stable_double_operator(w, t);
    }
    throw std::invalid_argument("unknown model");
}

bool stability_check(Model model, const Permutation& w, const TruncationSpec& t) {
    TruncationSpec next = t;
    ++next.m;
    if (t.shift >= 0) ++next.shift;
    return compute_model(model, w, t) == restrict_vars(compute_model(model, w, next), t.m);
}

}  // namespace groth
