// One PASS/FAIL line per acceptance criterion. Exits nonzero if any criterion fails,
// except for the documented known deviation.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "groth/bijections.hpp"
#include "groth/factor.hpp"
#include "groth/verify.hpp"

using namespace groth;

namespace {


struct Criterion {
    int id;
    std::string title;
    double budget_s;  // 0: no runtime bound
    std::function<std::vector<Report>()> run;
};

VerifyOptions opts(int n, int m, int degree, int trials) {
    VerifyOptions o;
    o.n = n;
    o.m = m;
    o.degree = degree;
    o.trials = trials;
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "operator relations on 200 random polynomials", 5,
         [] { return std::vector<Report>{verify_relations(opts(-1, -1, -1, 200))}; }},
        {2, "bounded plain factorizations give the single polynomial on S_4", 10,
         [] { return std::vector<Report>{verify_single(opts(3, -1, -1, -1))}; }},
        {3, "operator, circled, double and Cauchy models agree on S_3 and S_4", 60,
         [] { return std::vector<Report>{verify_cauchy(opts(3, -1, -1, -1))}; }},
        {4, "longest element counts 27 and 729 and the staircase product", 0,
         [] { return std::vector<Report>{verify_staircase(opts(3, -1, -1, -1))}; }},
        {5, "Hecke insertion examples, descents and bijectivity up to length 7", 0,
         [] { return std::vector<Report>{verify_insertion(opts(3, -1, 7, -1))}; }},
        {6, "ladders, Psi, chain for 4321, round trips and the circled to double bijection", 0,
         [] {
             Report r = verify_bijections(opts(5, -1, -1, -1));
             auto trace = circled_to_double_trace(
                 parse_factorization("(3③②1①)(③2)(3③)()", Kind::circled_bounded, 3));
             r.add("all ten displayed chain lines reproduced verbatim", trace == displayed_chain(),
                   "lines after F^31 show f_1 = (321①), which no step touches and which changes the "
                   "x-weight; computed chain ends ()(3)(23)(12)|(21)(3)(3)()");
             return std::vector<Report>{r};
         }},
        {7, "Phi worked example and bijectivity on S_3", 0,
         [] { return std::vector<Report>{verify_phi(opts(2, -1, 6, -1))}; }},
        {8, "tableau sum for the stable double function, its Omega image, stability", 0,
         [] {
             return std::vector<Report>{verify_tabt(opts(2, 3, 5, -1)), verify_stability(opts(-1, 4, 4, -1))};
         }},
        {9, "two-column SVT against pi_1, columns up to 4", 0,
         [] { return std::vector<Report>{verify_tabtopi(opts(4, -1, -1, -1))}; }},
        {10, "Q-Schur expansion example at (2,3,1,5,4), coefficient 12 and the twelve hook factorizations", 30,
         [] { return std::vector<Report>{verify_qp(opts(-1, -1, 4, -1))}; }},
        {11, "R_mu(x,x) = sum F Q for |mu| <= 4 and the lattice verdicts", 0,
         [] { return std::vector<Report>{verify_qschur(opts(4, 4, -1, -1))}; }},
        {12, "stable single function over Hecke tableaux on S_4, the three tableaux of (2,3,1,5,4)", 0,
         [] { return std::vector<Report>{verify_hecke_tableaux(opts(3, 3, 5, -1))}; }},
    };
    // Checks that cannot pass because the reference data is self-inconsistent.
    const std::vector<std::string> known = {"all ten displayed chain lines reproduced verbatim"};

    bool fatal = false;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        auto reports = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = c.budget_s == 0 || secs < c.budget_s;
        std::string notes;
        for (const auto& r : reports)
            for (const auto& ch : r.checks) {
                if (ch.ok) continue;
                ok = false;
                const bool expected = std::find(known.begin(), known.end(), ch.label) != known.end();
                fatal = fatal || !expected;
                notes += "    " + std::string(expected ? "known deviation: " : "failed: ") + ch.label + ": " +
                         ch.detail + "\n";
            }
        if (c.budget_s > 0 && secs >= c.budget_s) {
            fatal = true;
            notes += "    over the " + std::to_string(c.budget_s) + " s budget\n";
        }
        std::printf("%s %2d %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
        std::fputs(notes.c_str(), stdout);
    }
    return fatal ? 1 : 0;
}
