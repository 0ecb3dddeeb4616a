#include "keycomb/tableau.hpp"

#include <algorithm>
#include <map>

#include "keycomb/errors.hpp"

namespace keycomb {

Composition SSYT::shape() const {
    Composition out;
    for (const auto& row : rows) out.push_back(static_cast<int>(row.size()));
    return trimmed(out);
}

Composition SSYT::weight(std::size_t n) const {
    Composition w(n, 0);
    for (const auto& row : rows)
        for (int e : row) ++w[e - 1];
    return w;
}

bool is_ssyt(const SSYT& t, int n) {
    Composition sh = t.shape();
    if (!is_partition(sh)) return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > n) return false;
            if (c > 0 && row[c] < row[c - 1]) return false;
            if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
        }
    }
    return true;
}

std::vector<SSYT> enumerate_ssyt(const Composition& lambda, int n) {
    Composition sh = trimmed(lambda);
    if (!is_partition(sh)) throw InvalidComposition("shape must be a partition");
    if (static_cast<int>(sh.size()) > n && !sh.empty())
        return {}; // columns longer than the alphabet admit no filling
    std::vector<SSYT> out;
    SSYT t;
    t.rows.resize(sh.size());
    for (std::size_t r = 0; r < sh.size(); ++r) t.rows[r].resize(sh[r], 0);

    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == sh.size()) {
            out.push_back(t);
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == t.rows[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            t.rows[r][c] = v;
            self(self, nr, nc);
        }
        t.rows[r][c] = 0;
    };
    if (sh.empty())
        out.push_back(SSYT{});
    else
        fill(fill, 0, 0);
    return out;
}

Polynomial schur_polynomial(const Composition& lambda, int n) {
    Polynomial p(n);
    for (const SSYT& t : enumerate_ssyt(lambda, n)) p.add_term(t.weight(n), 1);
    return p;
}

SSYT rsk_insert(const SSYT& t, int j) {
    SSYT out = t;
    int carry = j;
    for (auto& row : out.rows) {
        auto it = std::upper_bound(row.begin(), row.end(), carry);
        if (it == row.end()) {
            row.push_back(carry);
            return out;
        }
        std::swap(carry, *it);
    }
    out.rows.push_back({carry});
    return out;
}

Diagram diagram_of_tableau(const SSYT& t, int n) {
    std::vector<Cell> cells;
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] > n) throw InvalidComposition("entry exceeds row count");
            cells.push_back({static_cast<int>(c + 1), n + 1 - row[c]});
        }
    return Diagram(std::move(cells));
}

SSYT tableau_of_diagram(const Diagram& d, int n) {
    if (d.max_row() > n) throw NotGenericDiagram("diagram taller than row count");
    std::map<int, std::vector<int>> columns; // col -> entries, increasing
    for (const Cell& c : d.cells()) columns[c.col].push_back(n + 1 - c.row);
    SSYT out;
    for (auto& [col, entries] : columns) {
        std::sort(entries.begin(), entries.end());
        for (std::size_t r = 0; r < entries.size(); ++r) {
            if (out.rows.size() <= r) out.rows.resize(r + 1);
            if (static_cast<int>(out.rows[r].size()) != col - 1)
                throw NotGenericDiagram("column heights do not nest");
            out.rows[r].push_back(entries[r]);
        }
    }
    if (!is_ssyt(out, n)) throw NotGenericDiagram("column-sorted filling is not semistandard");
    return out;
}

} // namespace keycomb
