#pragma once

#include <string>
#include <vector>

namespace keycomb {

// Weak composition: row counts, 0-based storage for 1-based row indices.
// Length is whatever the caller gave; comparisons ignore trailing zeros.
using Composition = std::vector<int>;

Composition trimmed(const Composition& a);
Composition padded(const Composition& a, std::size_t n);
bool comp_eq(const Composition& a, const Composition& b);
// Canonical order for sets/maps: trimmed, then by length, then lexicographic.
bool comp_less(const Composition& a, const Composition& b);

void check_composition(const Composition& a);

Composition sorted_decreasing(const Composition& a);
Composition reversed(const Composition& a);
Composition unit(std::size_t k, std::size_t n); // e_k padded to length >= n
std::size_t comp_length(const Composition& a);  // largest i with a_i > 0
long long comp_sum(const Composition& a);
bool is_partition(const Composition& a);
// #{(i,j) : i < j, a_i < a_j}
long long coinversions(const Composition& a);

std::string comp_to_string(const Composition& a);
Composition parse_composition(const std::string& text);

struct CompLess {
    bool operator()(const Composition& a, const Composition& b) const { return comp_less(a, b); }
};

} // namespace keycomb
