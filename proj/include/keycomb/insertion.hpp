#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "keycomb/composition.hpp"
#include "keycomb/diagram.hpp"

namespace keycomb {

struct RectificationTrace {
    std::vector<std::pair<Cell, Cell>> steps; // (source, destination)
    Diagram result;
};

struct RemovableReport {
    std::vector<Cell> removable_cells;
    std::optional<int> removable_column; // unique column for weak non-generic input
    std::optional<Cell> highest;
    std::optional<Cell> lowest;
};

// Adds a cell at the leftmost empty position of row 1.
Diagram bottom_insert(const Diagram& t);
// Inverse over the k=1 target space of a; throws NotMember.
Diagram bottom_remove(const Diagram& u, const Composition& a);

// One correcting push; no move for generic input.
std::pair<Diagram, std::optional<Cell>> rho_step(const Diagram& t);
RectificationTrace rectify(const Diagram& t);

// Appends one cell in row j just past the rightmost occupied column, then
// rectifies.
Diagram top_insert(const Diagram& t, int j);

RemovableReport removable_analysis(const Diagram& t);

// Reverses rectification: lifts cells right, tracking y, until y sits in
// target_column. Throws NotMember when the loop gets stuck.
Diagram un_rectify(const Diagram& u, Cell y, int target_column);

enum class StripMode { bottom, top };

Diagram insert_strip(const Diagram& t, const std::vector<int>& rows, StripMode mode);

} // namespace keycomb
