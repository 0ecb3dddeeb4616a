#include "keycomb/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "keycomb/errors.hpp"

namespace keycomb {

Composition trimmed(const Composition& a) {
    Composition out = a;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Composition padded(const Composition& a, std::size_t n) {
    Composition out = a;
    if (out.size() < n) out.resize(n, 0);
    return out;
}

bool comp_eq(const Composition& a, const Composition& b) {
    return trimmed(a) == trimmed(b);
}

bool comp_less(const Composition& a, const Composition& b) {
    Composition ta = trimmed(a), tb = trimmed(b);
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    return ta < tb;
}

void check_composition(const Composition& a) {
    for (int x : a)
        if (x < 0) throw InvalidComposition("composition parts must be nonnegative");
}

Composition sorted_decreasing(const Composition& a) {
    Composition out = a;
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

Composition reversed(const Composition& a) {
    Composition out = a;
    std::reverse(out.begin(), out.end());
    return out;
}

Composition unit(std::size_t k, std::size_t n) {
    if (k == 0) throw InvalidComposition("row index must be positive");
    Composition out(std::max(k, n), 0);
    out[k - 1] = 1;
    return out;
}

std::size_t comp_length(const Composition& a) {
    return trimmed(a).size();
}

long long comp_sum(const Composition& a) {
    return std::accumulate(a.begin(), a.end(), 0LL);
}

bool is_partition(const Composition& a) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] > a[i - 1]) return false;
    return true;
}

long long coinversions(const Composition& a) {
    long long n = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] < a[j]) ++n;
    return n;
}

std::string comp_to_string(const Composition& a) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out << ',';
        out << a[i];
    }
    out << ')';
    return out.str();
}

Composition parse_composition(const std::string& text) {
    Composition out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size() || v < 0) throw InvalidComposition("bad part: " + item);
            out.push_back(v);
        } catch (const InvalidComposition&) {
            throw;
        } catch (...) {
            throw InvalidComposition("bad part: " + item);
        }
    }
    if (out.empty()) throw InvalidComposition("empty composition literal");
    return out;
}

} // namespace keycomb
