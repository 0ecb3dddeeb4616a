#pragma once

#include <vector>

#include "keycomb/composition.hpp"
#include "keycomb/polynomial.hpp"

namespace keycomb {

// Signed sum of key-basis terms; indices pairwise distinct after
// canonicalization (coefficients of equal indices merge, zeros drop).
struct SignedKeyExpansion {
    std::vector<std::pair<long long, Composition>> terms;
};

SignedKeyExpansion canonicalize(SignedKeyExpansion e);
bool expansion_eq(const SignedKeyExpansion& e, const SignedKeyExpansion& f);
bool expansion_nonnegative(const SignedKeyExpansion& e);
// Sum coeff * key_polynomial(index) in nvars variables.
Polynomial evaluate_expansion(const SignedKeyExpansion& e, std::size_t nvars);

// Greedy peel against the key basis: repeatedly removes the term maximizing
// sum i*b_i (tie: lexicographically largest exponent). Exact: the residue
// must reach zero.
SignedKeyExpansion key_expand(const Polynomial& p);

} // namespace keycomb
