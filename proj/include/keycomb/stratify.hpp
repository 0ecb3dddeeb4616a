#pragma once

#include <optional>
#include <set>
#include <vector>

#include "keycomb/composition.hpp"
#include "keycomb/diagram.hpp"

namespace keycomb {

struct StratumSplit {
    Composition excised;         // b, with labeling composition b + e_k
    int added_col = 0;           // c = b_k + 1
    Diagram u_plus;              // cells with path length >= c
    Diagram u_minus;             // the rest
    std::vector<Cell> u_eq_k;    // label-k cells w_1..w_c, left to right
    Diagram u_plus_star;         // u_plus minus w_1 = (1,k)
    std::vector<Cell> rect_path; // y_1..y_{c-1}, filled by stratum_map
};

struct DropDecomposition {
    Diagram base;            // in KD(a)
    std::vector<Cell> added; // horizontal m-strip weakly below row k
};

int added_column(const Diagram& u, const Composition& a);
std::vector<int> added_column_set(const Diagram& u, const Composition& a, int m);

// True when U lies in the k-th target space of degree m (m >= 0) for a.
bool target_space_membership(const Diagram& u, const Composition& a, int k, int m = 1);
// Smallest k with U in the degree-m target space, or nullopt.
std::optional<int> stratum_index(const Diagram& u, const Composition& a, int m = 1);

Composition excised_weight(const Diagram& u, const Composition& a, int k);

StratumSplit stratum_split(const Diagram& u, const Composition& a, int k);

Diagram stratum_map(const Diagram& u, const Composition& a, int k);
Diagram stratum_map(const Diagram& u, const Composition& a, int k, StratumSplit& split_out);

Diagram stratum_inverse(const Diagram& v, const Composition& a, int k, int c);

int droppable_count(const Diagram& t, int c, int r);
int droppable_count(const Composition& a, int c, int r);

std::optional<DropDecomposition> find_drop_decomposition(const Diagram& u, const Composition& a,
                                                         int k, int m);

// (b, c): c is the rightmost added column whose droppable count exceeds a's.
std::pair<Composition, int> degree_m_excised_weight(const Diagram& u, const Composition& a,
                                                    int k, int m);

Diagram stratum_map_m(const Diagram& u, const Composition& a, int k, int m);

} // namespace keycomb
