#include "keycomb/polynomial.hpp"

#include <sstream>

#include "keycomb/errors.hpp"

namespace keycomb {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in product");
    return r;
}

} // namespace

void Polynomial::add_term(const std::vector<int>& exp, long long coeff) {
    if (exp.size() != nvars_) throw InvalidComposition("exponent length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

long long Polynomial::coeff(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print in descending lexicographic exponent order so leading terms come first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exp, coeff] = *it;
        if (!first) out << (coeff < 0 ? " - " : " + ");
        else if (coeff < 0) out << "-";
        first = false;
        long long mag = coeff < 0 ? -coeff : coeff;
        bool wrote = false;
        if (mag != 1) {
            out << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            if (wrote) out << "*";
            out << "x" << (i + 1);
            if (exp[i] > 1) out << "^" << exp[i];
            wrote = true;
        }
        if (!wrote) out << 1;
    }
    return out.str();
}

Polynomial monomial(const std::vector<int>& exp, long long coeff) {
    Polynomial p(exp.size());
    p.add_term(exp, coeff);
    return p;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw InvalidComposition("variable count mismatch");
    Polynomial out = p;
    for (const auto& [exp, coeff] : q.terms()) out.add_term(exp, coeff);
    return out;
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
    return poly_add(p, poly_scale(q, -1));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw InvalidComposition("variable count mismatch");
    Polynomial out(p.nvars());
    std::vector<int> exp(p.nvars());
    for (const auto& [pe, pc] : p.terms())
        for (const auto& [qe, qc] : q.terms()) {
            for (std::size_t i = 0; i < exp.size(); ++i) exp[i] = pe[i] + qe[i];
            out.add_term(exp, checked_mul(pc, qc));
        }
    return out;
}

Polynomial poly_scale(const Polynomial& p, long long c) {
    Polynomial out(p.nvars());
    for (const auto& [exp, coeff] : p.terms()) out.add_term(exp, checked_mul(coeff, c));
    return out;
}

bool poly_eq(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() == q.nvars()) return p.terms() == q.terms();
    std::size_t n = std::max(p.nvars(), q.nvars());
    return poly_extend(p, n).terms() == poly_extend(q, n).terms();
}

Polynomial poly_extend(const Polynomial& p, std::size_t nvars) {
    if (nvars < p.nvars()) throw InvalidComposition("cannot shrink variable count");
    Polynomial out(nvars);
    for (const auto& [exp, coeff] : p.terms()) {
        std::vector<int> e = exp;
        e.resize(nvars, 0);
        out.add_term(e, coeff);
    }
    return out;
}

} // namespace keycomb
