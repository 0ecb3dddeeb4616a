#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "keycomb/composition.hpp"
#include "keycomb/diagram.hpp"
#include "keycomb/polynomial.hpp"

namespace keycomb {

inline constexpr std::size_t kDefaultCap = 1000000;

struct KohnertSpace {
    Composition source;
    std::set<Diagram> diagrams;
};

struct TargetSpace {
    Composition base;
    int k = 0;
    int m = 0;
    std::set<Diagram> diagrams;
};

// BFS closure of the key diagram under Kohnert moves; throws CapExceeded.
KohnertSpace enumerate_kd(const Composition& a, std::size_t cap = kDefaultCap);

Polynomial key_polynomial(const Composition& a);
// Same polynomial embedded in nvars >= len(a) variables. Cached.
Polynomial key_polynomial(const Composition& a, std::size_t nvars);

bool kd_membership(const Diagram& t, const Composition& a);

bool lswap_leq(const Composition& b, const Composition& a);
std::set<Composition, CompLess> lswap_down_set(const Composition& a);

TargetSpace enumerate_target_space(const Composition& a, int k, int m,
                                   std::size_t cap = kDefaultCap);

} // namespace keycomb
