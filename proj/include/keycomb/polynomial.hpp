#pragma once

#include <map>
#include <string>
#include <vector>

#include "keycomb/composition.hpp"

namespace keycomb {

// Exact integer sparse polynomial in x_1..x_n, dense exponent vectors of
// fixed length n. Coefficients are checked 64-bit: overflow throws.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exp, long long coeff);
    long long coeff(const std::vector<int>& exp) const;

    std::string to_string() const;

private:
    std::size_t nvars_ = 0;
    std::map<std::vector<int>, long long> terms_;
};

Polynomial monomial(const std::vector<int>& exp, long long coeff = 1);
Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, long long c);
bool poly_eq(const Polynomial& p, const Polynomial& q);
// Reinterpret in n' >= n variables.
Polynomial poly_extend(const Polynomial& p, std::size_t nvars);

} // namespace keycomb
