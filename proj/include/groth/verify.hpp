#pragma once

#include <string>
#include <vector>

#include "groth/bijections.hpp"

namespace groth {

struct Check {
    std::string label;
    bool ok = true;
    std::string detail;  // first counterexample, or a note
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    bool ok() const;
    void add(std::string label, bool ok, std::string detail = {});
    // One line per check: "PASS label" or "FAIL label: detail".
    std::string text() const;
};

// Negative values pick the suite's default bounds.
struct VerifyOptions {
    int n = -1;
    int m = -1;
    int degree = -1;
    int trials = -1;
    unsigned seed = 1;
};

Report verify_relations(const VerifyOptions& o);   // operator relations on random polynomials
Report verify_single(const VerifyOptions& o);      // bounded plain factorizations vs operator
Report verify_cauchy(const VerifyOptions& o);      // operator, circled, double and Cauchy sum
Report verify_staircase(const VerifyOptions& o);   // longest element counts and product
Report verify_insertion(const VerifyOptions& o);
Report verify_bijections(const VerifyOptions& o);
Report verify_phi(const VerifyOptions& o);
Report verify_tabt(const VerifyOptions& o);
Report verify_tabtopi(const VerifyOptions& o);
Report verify_qp(const VerifyOptions& o);
Report verify_qschur(const VerifyOptions& o);      // R = sum F Q and the lattice example
Report verify_hecke_tableaux(const VerifyOptions& o);
Report verify_stability(const VerifyOptions& o);

// Transcribed worked-example chain for (3③②1①)(③2)(3③)(), ten states from F^13 to the end.
const std::vector<ChainState>& displayed_chain();

std::vector<std::string> suite_names();
// Throws std::invalid_argument on an unknown name; "all" runs every suite.
std::vector<Report> run_suite(const std::string& name, const VerifyOptions& o);

}  // namespace groth
