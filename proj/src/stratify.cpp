#include "keycomb/stratify.hpp"

#include <algorithm>

#include "keycomb/errors.hpp"
#include "keycomb/insertion.hpp"
#include "keycomb/space.hpp"

namespace keycomb {

namespace {

// Column-weight difference as added columns; throws unless it is exactly m
// distinct unit columns.
std::vector<int> cwt_difference(const Diagram& u, const Composition& a, int m) {
    Composition cu = column_weight(u);
    Composition ca = column_weight(key_diagram(a));
    std::size_t n = std::max(cu.size(), ca.size());
    cu = padded(cu, n);
    ca = padded(ca, n);
    std::vector<int> cols;
    for (std::size_t i = 0; i < n; ++i) {
        int d = cu[i] - ca[i];
        if (d == 1) cols.push_back(static_cast<int>(i + 1));
        else if (d != 0) throw NotMember("column weights differ by more than unit columns");
    }
    if (static_cast<int>(cols.size()) != m)
        throw NotMember("column weight difference is not " + std::to_string(m) + " unit columns");
    return cols;
}

} // namespace

int added_column(const Diagram& u, const Composition& a) {
    return cwt_difference(u, a, 1).front();
}

std::vector<int> added_column_set(const Diagram& u, const Composition& a, int m) {
    return cwt_difference(u, a, m);
}

bool target_space_membership(const Diagram& u, const Composition& a, int k, int m) {
    if (k < 1 || m < 0) return false;
    if (!is_generic(u)) return false;
    ThreadDecomposition td = thread_decomposition(u);
    if (!td.anchored) return false;
    if (m == 0) return lswap_leq(td.weight, a);
    std::vector<int> cols;
    try {
        cols = cwt_difference(u, a, m);
    } catch (const NotMember&) {
        return false;
    }
    if (m == 1) {
        for (const Composition& b : lswap_down_set(a))
            for (int j = 1; j <= k; ++j) {
                Composition bj = padded(b, j);
                ++bj[j - 1];
                if (lswap_leq(td.weight, bj)) return true;
            }
        return false;
    }
    return find_drop_decomposition(u, a, k, m).has_value();
}

std::optional<int> stratum_index(const Diagram& u, const Composition& a, int m) {
    int n = std::max<int>(static_cast<int>(a.size()), u.max_row());
    for (int k = 1; k <= n; ++k)
        if (target_space_membership(u, a, k, m)) return k;
    return std::nullopt;
}

Composition excised_weight(const Diagram& u, const Composition& a, int k) {
    if (!target_space_membership(u, a, k, 1) || (k > 1 && target_space_membership(u, a, k - 1, 1)))
        throw NotMember("diagram is not in stratum " + std::to_string(k));
    int c = added_column(u, a);
    Diagram key = key_diagram(thread_weight(u));
    Cell y{c, k};
    if (!key.contains(y)) throw NotMember("no cell at the excision position");
    return thread_weight(key.without(y));
}

StratumSplit stratum_split(const Diagram& u, const Composition& a, int k) {
    StratumSplit split;
    split.excised = excised_weight(u, a, k);
    split.added_col = added_column(u, a);
    Composition bk = padded(split.excised, k);
    ++bk[k - 1];
    KohnertLabeling lab = kohnert_labeling(u, bk);
    std::vector<Cell> plus, minus;
    for (const Cell& x : u.cells()) {
        if (path_length(lab.matching, x) >= split.added_col) plus.push_back(x);
        else minus.push_back(x);
        if (lab.labels.at(x) == k) split.u_eq_k.push_back(x);
    }
    std::sort(split.u_eq_k.begin(), split.u_eq_k.end());
    split.u_plus = Diagram(plus);
    split.u_minus = Diagram(minus);
    Cell w1{1, k};
    if (split.u_eq_k.empty() || split.u_eq_k.front() != w1)
        throw NotMember("expected the first label-k cell at column 1");
    split.u_plus_star = split.u_plus.without(w1);
    return split;
}

Diagram stratum_map(const Diagram& u, const Composition& a, int k) {
    StratumSplit split;
    return stratum_map(u, a, k, split);
}

Diagram stratum_map(const Diagram& u, const Composition& a, int k, StratumSplit& split_out) {
    if (k <= 1) throw NotMember("stratum maps need k > 1");
    split_out = stratum_split(u, a, k);
    RectificationTrace trace = rectify(split_out.u_plus_star);
    for (const auto& [src, dst] : trace.steps) split_out.rect_path.push_back(dst);
    std::vector<Cell> cells = trace.result.cells();
    for (const Cell& x : split_out.u_minus.cells()) {
        if (trace.result.contains(x)) throw NotMember("stratum halves overlap after rectification");
        cells.push_back(x);
    }
    return Diagram(std::move(cells));
}

Diagram stratum_inverse(const Diagram& v, const Composition& a, int k, int c) {
    if (!kd_membership(v, a)) throw NotMember("diagram is not in the Kohnert space of the source");
    if (c < 1) throw NotMember("added column must be positive");
    Cell w1{1, k};
    if (c == 1) {
        if (v.contains(w1)) throw NotMember("position (1,k) already occupied");
        return v.with(w1);
    }
    ThreadDecomposition td = thread_decomposition(v);
    std::vector<Cell> moved;
    int prev_row = k;
    for (int i = 1; i <= c - 1; ++i) {
        std::optional<Cell> pick;
        for (const Cell& x : v.column(i))
            if (x.row <= prev_row && path_length(td.matching, x) < c) pick = x;
        if (!pick) throw NotMember("no reversible cell in column " + std::to_string(i));
        moved.push_back(*pick);
        prev_row = pick->row;
    }
    Diagram out = v;
    for (const Cell& y : moved) out = out.without(y);
    for (const Cell& y : moved) {
        Cell dst{y.col + 1, y.row};
        if (out.contains(dst)) throw NotMember("reverse push destination occupied");
        out = out.with(dst);
    }
    if (out.contains(w1)) throw NotMember("position (1,k) still occupied after reversal");
    return out.with(w1);
}

int droppable_count(const Diagram& t, int c, int r) {
    int n = 0;
    for (const Cell& x : t.cells())
        if (x.col == c && x.row >= r) ++n;
    return n;
}

int droppable_count(const Composition& a, int c, int r) {
    int n = 0;
    for (std::size_t i = r >= 1 ? r - 1 : 0; i < a.size(); ++i)
        if (a[i] >= c) ++n;
    return n;
}

std::optional<DropDecomposition> find_drop_decomposition(const Diagram& u, const Composition& a,
                                                         int k, int m) {
    if (!is_generic(u)) return std::nullopt;
    ThreadDecomposition td = thread_decomposition(u);
    if (!td.anchored) return std::nullopt;
    Diagram key = key_diagram(td.weight);
    std::vector<Cell> candidates;
    for (const Cell& x : key.cells())
        if (x.row <= k) candidates.push_back(x);
    std::vector<Cell> chosen;
    auto search = [&](auto&& self, std::size_t from, int left) -> std::optional<DropDecomposition> {
        if (left == 0) {
            Diagram base = key;
            for (const Cell& x : chosen) base = base.without(x);
            if (kd_membership(base, a)) return DropDecomposition{base, chosen};
            return std::nullopt;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            bool clash = false;
            for (const Cell& x : chosen)
                if (x.col == candidates[i].col) clash = true;
            if (clash) continue;
            chosen.push_back(candidates[i]);
            if (auto found = self(self, i + 1, left - 1)) return found;
            chosen.pop_back();
        }
        return std::nullopt;
    };
    if (m == 0) {
        if (kd_membership(key, a)) return DropDecomposition{key, {}};
        return std::nullopt;
    }
    return search(search, 0, m);
}

std::pair<Composition, int> degree_m_excised_weight(const Diagram& u, const Composition& a,
                                                    int k, int m) {
    std::vector<int> cols = added_column_set(u, a, m);
    Composition theta = thread_weight(u);
    int c = 0;
    for (int col : cols)
        if (droppable_count(theta, col, k) > droppable_count(a, col, k)) c = std::max(c, col);
    if (c == 0) throw NotMember("no added column exceeds the droppable count of the source");
    Diagram key = key_diagram(theta);
    Cell y{c, k};
    if (!key.contains(y)) throw NotMember("no cell at the degree-m excision position");
    return {thread_weight(key.without(y)), c};
}

Diagram stratum_map_m(const Diagram& u, const Composition& a, int k, int m) {
    if (m == 1) return stratum_map(u, a, k);
    auto [b, c] = degree_m_excised_weight(u, a, k, m);
    return stratum_map(u, b, k);
}

} // namespace keycomb
