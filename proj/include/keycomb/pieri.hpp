#pragma once

#include <set>
#include <vector>

#include "keycomb/composition.hpp"
#include "keycomb/expansion.hpp"

namespace keycomb {

struct AddableCell {
    int col = 0;
    int row = 0;
    Composition support;
    auto operator<=>(const AddableCell&) const = default;
};

std::vector<AddableCell> addable_cells(const Composition& a);
std::vector<AddableCell> k_addable_cells(const Composition& a, int k);
std::vector<int> row_set(const Composition& a, int k, int c);

Composition supp_composition(const Composition& a, int c, int r);
Composition drop_composition(const Composition& a, int c, const std::vector<int>& rows);

// Single-cell expansion of key(a) * (x_1 + ... + x_k), inclusion-exclusion
// over row subsets per k-addable column.
SignedKeyExpansion pieri_signed_expansion(const Composition& a, int k);

// Expansion of key(a) * s_(m)(x_1..x_k) via exact product + key_expand.
SignedKeyExpansion horizontal_strip_expansion(const Composition& a, int k, int m);

bool satisfies_vex1(const Composition& a);
bool satisfies_vex2(const Composition& a);
bool is_vexillary(const Composition& a);
Composition lehmer_code(const std::vector<int>& w); // one-line permutation

// Closed nonnegative expansions: k = 1, k >= len(a), or vex2 compositions.
// Throws UnsupportedCase otherwise.
SignedKeyExpansion nonneg_pieri(const Composition& a, int k, int m);

} // namespace keycomb
