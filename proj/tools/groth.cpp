// Command-line front end: compute polynomials and expansions, run verification suites.
#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "groth/groth.hpp"
#include "groth/stable.hpp"
#include "groth/verify.hpp"

using namespace groth;

namespace {

constexpr int kMalformed = 2, kInternal = 1, kVerifyFailed = 3;

Permutation read_perm(const std::string& text, int n) {
    Permutation w = [&] {
        try {
            return Permutation::parse(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed permutation: " + text);
        }
    }();
    if (n >= 0) {
        if (w.size() > n + 1) throw std::invalid_argument("permutation does not fit in S_" + std::to_string(n + 1));
        w = w.extended(n + 1);
    }
    return w;
}

std::string q_text(const QExpansion& e) {
    if (e.empty()) return "0";
    std::string s;
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += std::to_string(it->second) + "*Q" + partition_str(it->first);
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grothendieck polynomials, factorizations and tableaux"};
    app.require_subcommand(1);

    std::string what, perm, suite;
    int n = -1, m = 3, degree = 4;
    bool json = false;
    VerifyOptions vo;

    auto* compute = app.add_subcommand("compute", "Compute a polynomial or expansion");
    compute->add_option("object", what, "single | double | stable-single | stable-double | halfweak | qschur")
        ->required()
        ->check(CLI::IsMember({"single", "double", "stable-single", "stable-double", "halfweak", "qschur"}));
    compute->add_option("--perm", perm, "one-line permutation, comma separated")->required();
    compute->add_option("--n", n, "work in S_{n+1}");
    compute->add_option("--m", m, "variables per family for stable objects")->check(CLI::PositiveNumber);
    compute->add_option("--degree", degree, "total degree bound (qschur: the degree stratum)")
        ->check(CLI::NonNegativeNumber);
    compute->add_flag("--json", json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite,--suite", suite, "suite name or 'all'");
    verify->add_option("--n", vo.n, "size bound");
    verify->add_option("--m", vo.m, "variable count");
    verify->add_option("--degree", vo.degree, "degree or length bound");
    verify->add_option("--trials", vo.trials, "random trials or sample size");
    verify->add_option("--seed", vo.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kMalformed;
    }

    try {
        if (*compute) {
            const Permutation w = read_perm(perm, n);
            if (what == "qschur") {
                auto e = degree_stratum(qschur_expansion(w, degree), degree);
                std::cout << (json ? to_json(e) : q_text(e)) << '\n';
                return 0;
            }
            const TruncationSpec t{m, degree};
            Poly p;
            if (what == "single") p = grothendieck_single(w);
            else if (what == "double") p = grothendieck_double(w);
            else if (what == "stable-single") p = stable_single(w, t);
            else if (what == "stable-double") p = stable_double(w, t);
            else p = halfweak_stable(w, t);
            std::cout << (json ? to_json(p) : pretty(p)) << '\n';
            return 0;
        }
        if (suite.empty()) throw std::invalid_argument("no suite given");
        bool ok = true;
        for (const auto& r : run_suite(suite, vo)) {
            std::cout << r.text();
            ok = ok && r.ok();
        }
        std::cout << (ok ? "all checks passed" : "some checks failed") << '\n';
        return ok ? 0 : kVerifyFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMalformed;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
