#include "keycomb/pieri.hpp"

#include <algorithm>
#include <map>

#include "keycomb/errors.hpp"
#include "keycomb/polynomial.hpp"
#include "keycomb/space.hpp"
#include "keycomb/tableau.hpp"

namespace keycomb {

namespace {

int max_part(const Composition& a) {
    int m = 0;
    for (int p : a) m = std::max(m, p);
    return m;
}

// (c,r) admits a support: a_r < c and some weakly higher row has length c-1
bool is_addable(const Composition& a, int c, int r) {
    if (r < 1 || r > static_cast<int>(a.size()) || a[r - 1] >= c) return false;
    for (std::size_t s = r - 1; s < a.size(); ++s)
        if (a[s] == c - 1) return true;
    return false;
}

bool is_k_addable(const Composition& a, int k, int c, int r) {
    if (r < 1 || r > k || r > static_cast<int>(a.size())) return false;
    if (a[r - 1] >= c) return false;
    if (a[r - 1] < c - 1) {
        bool supported = false;
        for (std::size_t l = k; l < a.size(); ++l)
            if (a[l] == c - 1) supported = true;
        if (!supported) return false;
    }
    for (int i = r + 1; i <= k && i <= static_cast<int>(a.size()); ++i)
        if (a[i - 1] >= a[r - 1] && a[i - 1] < c) return false;
    return true;
}

} // namespace

std::vector<AddableCell> addable_cells(const Composition& a) {
    check_composition(a);
    std::vector<AddableCell> out;
    for (int c = 1; c <= max_part(a) + 1; ++c)
        for (int r = 1; r <= static_cast<int>(a.size()); ++r)
            if (is_addable(a, c, r)) out.push_back({c, r, supp_composition(a, c, r)});
    return out;
}

std::vector<AddableCell> k_addable_cells(const Composition& a, int k) {
    check_composition(a);
    if (k < 1) throw InvalidComposition("k must be positive");
    Composition ap = padded(a, k);
    std::vector<AddableCell> out;
    for (int c = 1; c <= max_part(ap) + 1; ++c)
        for (int r = 1; r <= k; ++r)
            if (is_k_addable(ap, k, c, r)) out.push_back({c, r, supp_composition(ap, c, r)});
    return out;
}

std::vector<int> row_set(const Composition& a, int k, int c) {
    Composition ap = padded(a, k);
    std::vector<int> out;
    for (int r = 1; r <= k; ++r)
        if (is_k_addable(ap, k, c, r)) out.push_back(r);
    return out;
}

Composition supp_composition(const Composition& a, int c, int r) {
    Composition b = padded(a, r);
    if (!is_addable(b, c, r))
        throw NotMember("(" + std::to_string(c) + "," + std::to_string(r) + ") is not addable");
    // climb to the first longer row of length at most c-1, repeating until a
    // row of length exactly c-1 carries the support
    std::vector<int> chain{r};
    while (b[chain.back() - 1] < c - 1) {
        int cur = chain.back();
        int next = 0;
        for (int s = cur + 1; s <= static_cast<int>(b.size()); ++s)
            if (b[s - 1] > b[cur - 1] && b[s - 1] <= c - 1) {
                next = s;
                break;
            }
        if (next == 0) throw NotMember("support chain breaks below a row of length c-1");
        chain.push_back(next);
    }
    for (std::size_t i = chain.size() - 1; i-- > 0;)
        std::swap(b[chain[i] - 1], b[chain[i + 1] - 1]);
    return b;
}

Composition drop_composition(const Composition& a, int c, const std::vector<int>& rows) {
    if (rows.empty()) throw NotMember("row set must be nonempty");
    std::vector<int> r = rows;
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end())
        throw NotMember("row set has repeats");
    for (int row : r)
        if (!is_addable(padded(a, row), c, row))
            throw NotMember("row " + std::to_string(row) + " is not addable in column " +
                            std::to_string(c));
    Composition b = supp_composition(a, c, r.back());
    for (std::size_t i = r.size() - 1; i-- > 0;) std::swap(b[r[i] - 1], b[r[i + 1] - 1]);
    return b;
}

SignedKeyExpansion pieri_signed_expansion(const Composition& a, int k) {
    check_composition(a);
    if (k < 1) throw InvalidComposition("k must be positive");
    Composition ap = padded(a, k);
    std::map<int, std::vector<int>> rows_by_col;
    for (const AddableCell& cell : k_addable_cells(ap, k)) rows_by_col[cell.col].push_back(cell.row);
    SignedKeyExpansion e;
    for (const auto& [c, rows] : rows_by_col) {
        std::size_t n = rows.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> subset;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) subset.push_back(rows[i]);
            Composition idx = drop_composition(ap, c, subset);
            ++idx[subset.front() - 1];
            long long sign = subset.size() % 2 == 1 ? 1 : -1;
            e.terms.emplace_back(sign, idx);
        }
    }
    return canonicalize(e);
}

SignedKeyExpansion horizontal_strip_expansion(const Composition& a, int k, int m) {
    check_composition(a);
    if (k < 1 || m < 1) throw InvalidComposition("k and m must be positive");
    std::size_t n = std::max<std::size_t>(trimmed(a).size(), k);
    Polynomial product =
        poly_mul(key_polynomial(a, n), poly_extend(schur_polynomial({m}, k), n));
    return key_expand(product);
}

bool satisfies_vex1(const Composition& a) {
    int n = static_cast<int>(a.size());
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            if (a[i - 1] <= a[k - 1]) continue;
            int between = 0;
            for (int j = i + 1; j < k; ++j)
                if (a[j - 1] < a[k - 1]) ++between;
            if (between > a[i - 1] - a[k - 1]) return false;
        }
    return true;
}

bool satisfies_vex2(const Composition& a) {
    int n = static_cast<int>(a.size());
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            if (a[i - 1] > a[k - 1]) continue;
            for (int j = i + 1; j < k; ++j)
                if (a[j - 1] < a[i - 1]) return false;
        }
    return true;
}

bool is_vexillary(const Composition& a) {
    return satisfies_vex1(a) && satisfies_vex2(a);
}

Composition lehmer_code(const std::vector<int>& w) {
    std::vector<bool> seen(w.size(), false);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[v - 1])
            throw InvalidComposition("not a permutation in one-line notation");
        seen[v - 1] = true;
    }
    Composition code(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++code[i];
    return code;
}

namespace {

// k = 1: chains c_1 < ... < c_m, each column supported row-1 addable on the
// running composition.
void bottom_chains(const Composition& cur, int prev_col, int left, SignedKeyExpansion& e) {
    if (left == 0) {
        e.terms.emplace_back(1, cur);
        return;
    }
    std::set<int> cols;
    for (int p : cur) cols.insert(p + 1);
    for (int c : cols) {
        if (c <= prev_col || !is_addable(cur, c, 1)) continue;
        Composition next = supp_composition(cur, c, 1);
        ++next[0];
        bottom_chains(next, c, left - 1, e);
    }
}

// k >= len(a): each column increments the highest row of length c-1.
void top_chains(const Composition& base, const Composition& cur, int prev_col, int left,
                SignedKeyExpansion& e) {
    if (left == 0) {
        e.terms.emplace_back(1, cur);
        return;
    }
    std::set<int> cols;
    for (int p : base) cols.insert(p + 1);
    if (prev_col > 0) cols.insert(prev_col + 1);
    for (int c : cols) {
        if (c <= prev_col) continue;
        int j = 0;
        for (int i = 1; i <= static_cast<int>(cur.size()); ++i)
            if (cur[i - 1] == c - 1) j = i;
        if (j == 0) continue;
        Composition next = cur;
        ++next[j - 1];
        top_chains(base, next, c, left - 1, e);
    }
}

// vexillary: the strip lands in the highest row at or below k of length
// exactly c-1, else the highest of smaller length.
void vex_chains(const Composition& base, const Composition& cur, int k, int prev_col, int left,
                SignedKeyExpansion& e) {
    if (left == 0) {
        e.terms.emplace_back(1, cur);
        return;
    }
    int lo = cur[0];
    for (int i = 1; i < k; ++i) lo = std::min(lo, cur[i]);
    std::set<int> cols;
    for (int p : base) cols.insert(p + 1);
    if (prev_col > 0) cols.insert(prev_col + 1);
    for (int c : cols) {
        if (c <= prev_col || c <= lo) continue;
        int r = 0;
        for (int i = 1; i <= k; ++i)
            if (cur[i - 1] == c - 1) r = i;
        if (r == 0)
            for (int i = 1; i <= k; ++i)
                if (cur[i - 1] < c - 1) r = i;
        if (r == 0 || !is_addable(cur, c, r)) continue;
        Composition next = supp_composition(cur, c, r);
        ++next[r - 1];
        vex_chains(base, next, k, c, left - 1, e);
    }
}

} // namespace

SignedKeyExpansion nonneg_pieri(const Composition& a, int k, int m) {
    check_composition(a);
    if (k < 1 || m < 1) throw InvalidComposition("k and m must be positive");
    int n = std::max<int>(static_cast<int>(trimmed(a).size()), k);
    Composition ap = padded(a, n);
    SignedKeyExpansion e;
    if (k == 1) {
        bottom_chains(ap, ap[0], m, e);
        return canonicalize(e);
    }
    if (static_cast<std::size_t>(k) >= comp_length(a)) {
        top_chains(ap, ap, 0, m, e);
        return canonicalize(e);
    }
    if (satisfies_vex2(ap)) {
        // the base chain lower bound is the shortest of the first k rows
        vex_chains(ap, ap, k, 0, m, e);
        return canonicalize(e);
    }
    throw UnsupportedCase("no closed nonnegative expansion for this input");
}

} // namespace keycomb
