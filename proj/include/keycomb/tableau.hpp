#pragma once

#include <vector>

#include "keycomb/diagram.hpp"
#include "keycomb/polynomial.hpp"

namespace keycomb {

// Semistandard Young tableau; rows[0] is the top row. Rows weakly increase
// left to right, columns strictly increase top to bottom.
struct SSYT {
    std::vector<std::vector<int>> rows;

    Composition shape() const;
    Composition weight(std::size_t n) const;
    auto operator<=>(const SSYT&) const = default;
};

bool is_ssyt(const SSYT& t, int n);

std::vector<SSYT> enumerate_ssyt(const Composition& lambda, int n);
Polynomial schur_polynomial(const Composition& lambda, int n);

// Classical row insertion of entry j.
SSYT rsk_insert(const SSYT& t, int j);

// Column-preserving bijection with diagrams: entry r in column c of the
// tableau corresponds to the cell (c, n+1-r).
Diagram diagram_of_tableau(const SSYT& t, int n);
SSYT tableau_of_diagram(const Diagram& d, int n); // throws NotGenericDiagram

} // namespace keycomb
