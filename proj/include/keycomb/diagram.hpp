#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "keycomb/composition.hpp"

namespace keycomb {

// 1-indexed Cartesian coordinates, rows counted from the bottom.
struct Cell {
    int col = 0;
    int row = 0;
    auto operator<=>(const Cell&) const = default;
};

// Finite cell set kept sorted by (col,row); that order is the canonical form.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const;

    Diagram with(Cell c) const;    // insert (must be absent)
    Diagram without(Cell c) const; // erase (must be present)

    int max_col() const; // 0 when empty
    int max_row() const;

    std::vector<Cell> column(int c) const; // cells of column c, bottom to top

    auto operator<=>(const Diagram&) const = default;

private:
    std::vector<Cell> cells_;
};

Diagram key_diagram(const Composition& a);

Composition row_weight(const Diagram& t, std::size_t n);
Composition row_weight(const Diagram& t); // n = max occupied row
Composition column_weight(const Diagram& t);

std::set<Diagram> kohnert_successors(const Diagram& t);

int deficiency(const Diagram& t, int c, int r);
bool is_generic(const Diagram& t);

// Source (column i+1) -> target (column i) edges over the cells of one host
// diagram. Isolated host cells still count for path lengths and anchors.
struct MatchingSequence {
    std::map<Cell, Cell> edges;
    std::set<Cell> cells;
};

using Labeling = std::map<Cell, int>;

struct ThreadDecomposition {
    MatchingSequence matching;
    Composition weight;  // weight[i-1] = length of the thread anchored at (1,i)
    bool anchored = true; // every thread reached column 1
};

ThreadDecomposition thread_decomposition(const Diagram& t);
Composition thread_weight(const Diagram& t);

struct KohnertLabeling {
    Labeling labels;
    MatchingSequence matching;
};

// Canonical labeling of T as a Kohnert diagram for a; throws NotMember.
KohnertLabeling kohnert_labeling(const Diagram& t, const Composition& a);

Composition anchor_weight(const MatchingSequence& m);
int path_length(const MatchingSequence& m, Cell x);
bool validate_matching(const Diagram& t, const MatchingSequence& m);

} // namespace keycomb
