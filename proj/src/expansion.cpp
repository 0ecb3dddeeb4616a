#include "keycomb/expansion.hpp"

#include <algorithm>
#include <map>

#include "keycomb/errors.hpp"
#include "keycomb/space.hpp"

namespace keycomb {

SignedKeyExpansion canonicalize(SignedKeyExpansion e) {
    std::map<Composition, long long, CompLess> merged;
    for (auto& [coeff, idx] : e.terms) merged[trimmed(idx)] += coeff;
    SignedKeyExpansion out;
    for (auto& [idx, coeff] : merged)
        if (coeff != 0) out.terms.emplace_back(coeff, idx);
    return out;
}

bool expansion_eq(const SignedKeyExpansion& e, const SignedKeyExpansion& f) {
    return canonicalize(e).terms == canonicalize(f).terms;
}

bool expansion_nonnegative(const SignedKeyExpansion& e) {
    for (const auto& [coeff, idx] : canonicalize(e).terms)
        if (coeff < 0) return false;
    return true;
}

Polynomial evaluate_expansion(const SignedKeyExpansion& e, std::size_t nvars) {
    Polynomial out(nvars);
    for (const auto& [coeff, idx] : e.terms)
        out = poly_add(out, poly_scale(key_polynomial(idx, nvars), coeff));
    return out;
}

SignedKeyExpansion key_expand(const Polynomial& p) {
    SignedKeyExpansion e;
    Polynomial residue = p;
    while (!residue.terms().empty()) {
        // leading term: max of sum i*exp_i, ties broken lexicographically
        long long best_stat = -1;
        std::vector<int> best_exp;
        long long best_coeff = 0;
        for (const auto& [exp, coeff] : residue.terms()) {
            long long stat = 0;
            for (std::size_t i = 0; i < exp.size(); ++i)
                stat += static_cast<long long>(i + 1) * exp[i];
            if (stat > best_stat || (stat == best_stat && exp > best_exp)) {
                best_stat = stat;
                best_exp = exp;
                best_coeff = coeff;
            }
        }
        Composition idx = trimmed(best_exp);
        if (idx.size() > residue.nvars())
            throw InvalidComposition("leading exponent outside the variable range");
        residue = poly_sub(residue, poly_scale(key_polynomial(idx, residue.nvars()), best_coeff));
        e.terms.emplace_back(best_coeff, idx);
    }
    return canonicalize(e);
}

} // namespace keycomb
