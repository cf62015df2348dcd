#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "groth/factor.hpp"
#include "groth/tableau.hpp"

namespace groth {

enum class RowOutcome { appended, disappeared, bumped };

struct RowResult {
    std::vector<int> row;
    RowOutcome outcome = RowOutcome::appended;
    int bumped = 0;
};

// One row step. `above` is the row over `row` (none for the first row).
// Throws std::logic_error if the letter is outside the interval the step assumes.
RowResult insert_row(const std::vector<int>* above, const std::vector<int>& row, int a);

// Insertion tableau as plain rows, recording tableau as boxes of labels.
class InsertionState {
public:
    InsertionState() = default;
    // Resumes from a Hecke tableau and a recording tableau of the same straight shape.
    InsertionState(const Tableau& p, const Tableau& q);

    void insert(int a, Entry label);
    Tableau p() const;
    Tableau q() const;

private:
    std::vector<std::vector<int>> p_;
    std::vector<std::vector<Box>> q_;
};

using TableauPair = std::pair<Tableau, Tableau>;

TableauPair insert_word(const HeckeWord& w);
// Plain factorization; the recording entry of a letter is the index of its factor.
TableauPair semistandard_insert(const Factorization& f);
// Double factorization to (Hecke tableau, PSVT).
TableauPair phi(const Factorization& f);

}  // namespace groth
