#include "keycomb/diagram.hpp"

#include <algorithm>
#include <map>

#include "keycomb/errors.hpp"

namespace keycomb {

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const Cell& c : cells_)
        if (c.col < 1 || c.row < 1) throw InvalidComposition("cells must lie in the first quadrant");
}

bool Diagram::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

Diagram Diagram::with(Cell c) const {
    std::vector<Cell> out = cells_;
    out.push_back(c);
    return Diagram(std::move(out));
}

Diagram Diagram::without(Cell c) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& x : cells_)
        if (x != c) out.push_back(x);
    return Diagram(std::move(out));
}

int Diagram::max_col() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.col);
    return m;
}

int Diagram::max_row() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.row);
    return m;
}

std::vector<Cell> Diagram::column(int c) const {
    std::vector<Cell> out;
    for (const Cell& x : cells_)
        if (x.col == c) out.push_back(x);
    return out; // canonical order is already bottom to top within a column
}

Diagram key_diagram(const Composition& a) {
    check_composition(a);
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int c = 1; c <= a[i]; ++c) cells.push_back({c, static_cast<int>(i + 1)});
    return Diagram(std::move(cells));
}

Composition row_weight(const Diagram& t, std::size_t n) {
    if (static_cast<int>(n) < t.max_row())
        throw InvalidComposition("row count too small for diagram");
    Composition w(n, 0);
    for (const Cell& c : t.cells()) ++w[c.row - 1];
    return w;
}

Composition row_weight(const Diagram& t) {
    return row_weight(t, static_cast<std::size_t>(t.max_row()));
}

Composition column_weight(const Diagram& t) {
    Composition w(t.max_col(), 0);
    for (const Cell& c : t.cells()) ++w[c.col - 1];
    return w;
}

std::set<Diagram> kohnert_successors(const Diagram& t) {
    std::set<Diagram> out;
    for (int r = 1; r <= t.max_row(); ++r) {
        Cell mover{0, r};
        for (const Cell& c : t.cells())
            if (c.row == r && c.col > mover.col) mover = c;
        if (mover.col == 0) continue;
        // first empty position below, scanning down
        int dest = 0;
        for (int s = r - 1; s >= 1; --s) {
            if (!t.contains({mover.col, s})) {
                dest = s;
                break;
            }
        }
        if (dest == 0) continue;
        out.insert(t.without(mover).with({mover.col, dest}));
    }
    return out;
}

int deficiency(const Diagram& t, int c, int r) {
    if (c <= 1) throw InvalidComposition("deficiency needs column > 1");
    int left = 0, here = 0;
    for (const Cell& x : t.cells()) {
        if (x.row < r) continue;
        if (x.col == c - 1) ++left;
        if (x.col == c) ++here;
    }
    return left - here;
}

bool is_generic(const Diagram& t) {
    for (int c = 2; c <= t.max_col(); ++c)
        for (int r = 1; r <= t.max_row(); ++r)
            if (deficiency(t, c, r) < 0) return false;
    return true;
}

ThreadDecomposition thread_decomposition(const Diagram& t) {
    std::set<Cell> unthreaded(t.cells().begin(), t.cells().end());
    ThreadDecomposition out;
    out.matching.cells = unthreaded;
    std::vector<std::vector<Cell>> threads;
    while (!unthreaded.empty()) {
        // lowest cell in the rightmost column still holding one
        Cell start{0, 0};
        for (const Cell& c : unthreaded)
            if (c.col > start.col || (c.col == start.col && c.row < start.row)) {
                if (c.col > start.col) start = c;
                else if (c.row < start.row) start = c;
            }
        std::vector<Cell> thread{start};
        unthreaded.erase(start);
        Cell cur = start;
        while (cur.col > 1) {
            Cell next{0, 0};
            for (const Cell& c : unthreaded)
                if (c.col == cur.col - 1 && c.row >= cur.row && (next.col == 0 || c.row < next.row))
                    next = c;
            if (next.col == 0) break;
            out.matching.edges[cur] = next;
            thread.push_back(next);
            unthreaded.erase(next);
            cur = next;
        }
        threads.push_back(std::move(thread));
    }
    int n = t.max_row();
    Composition weight(std::max(n, 0), 0);
    for (const auto& thread : threads) {
        Cell anchor = thread.back();
        if (anchor.col == 1)
            weight[anchor.row - 1] = static_cast<int>(thread.size());
        else
            out.anchored = false;
    }
    out.weight = trimmed(weight);
    return out;
}

Composition thread_weight(const Diagram& t) {
    return thread_decomposition(t).weight;
}

Composition anchor_weight(const MatchingSequence& m) {
    // union-find over the host cells; path weight sits at the column-1 anchor
    std::map<Cell, Cell> parent;
    for (const Cell& c : m.cells) parent[c] = c;
    auto find = [&](Cell c) {
        while (parent.at(c) != c) c = parent.at(c);
        return c;
    };
    for (const auto& [src, dst] : m.edges) {
        parent.emplace(src, src);
        parent.emplace(dst, dst);
        Cell a = find(src), b = find(dst);
        if (a != b) parent[a] = b;
    }
    std::map<Cell, std::pair<int, Cell>> comp; // root -> (size, leftmost-lowest cell)
    auto all = m.cells;
    for (const auto& [src, dst] : m.edges) {
        all.insert(src);
        all.insert(dst);
    }
    for (const Cell& c : all) {
        Cell root = find(c);
        auto it = comp.find(root);
        if (it == comp.end())
            comp[root] = {1, c};
        else {
            ++it->second.first;
            Cell& best = it->second.second;
            if (c.col < best.col || (c.col == best.col && c.row < best.row)) best = c;
        }
    }
    int n = 0;
    for (const auto& [root, info] : comp)
        if (info.second.col == 1) n = std::max(n, info.second.row);
    Composition weight(n, 0);
    for (const auto& [root, info] : comp)
        if (info.second.col == 1) weight[info.second.row - 1] += info.first;
    return weight;
}

int path_length(const MatchingSequence& m, Cell x) {
    std::set<Cell> all = m.cells;
    for (const auto& [src, dst] : m.edges) {
        all.insert(src);
        all.insert(dst);
    }
    std::map<Cell, Cell> parent;
    for (const Cell& c : all) parent[c] = c;
    auto find = [&](Cell c) {
        while (parent.at(c) != c) c = parent.at(c);
        return c;
    };
    for (const auto& [src, dst] : m.edges) {
        Cell a = find(src), b = find(dst);
        if (a != b) parent[a] = b;
    }
    Cell root = find(x);
    int count = 0;
    for (const Cell& c : all)
        if (find(c) == root) ++count;
    return count;
}

bool validate_matching(const Diagram& t, const MatchingSequence& m) {
    for (const Cell& c : m.cells)
        if (!t.contains(c)) return false;
    std::set<Cell> targets;
    for (const auto& [src, dst] : m.edges) {
        if (!t.contains(src) || !t.contains(dst)) return false;
        if (dst.col != src.col - 1) return false;
        if (dst.row < src.row) return false;
        if (!targets.insert(dst).second) return false; // in-degree at most 1 per cell
    }
    // totality: every cell beyond column 1 matches
    for (const Cell& c : t.cells())
        if (c.col > 1 && !m.edges.count(c)) return false;
    return true;
}

} // namespace keycomb
