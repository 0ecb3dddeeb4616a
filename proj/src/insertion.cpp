#include "keycomb/insertion.hpp"

#include <algorithm>

#include "keycomb/errors.hpp"
#include "keycomb/space.hpp"
#include "keycomb/stratify.hpp"

namespace keycomb {

Diagram bottom_insert(const Diagram& t) {
    int c = 1;
    while (t.contains({c, 1})) ++c;
    return t.with({c, 1});
}

Diagram bottom_remove(const Diagram& u, const Composition& a) {
    if (!target_space_membership(u, a, 1, 1))
        throw NotMember("diagram is not in the row-1 target space of " + comp_to_string(a));
    int c = added_column(u, a);
    if (!u.contains({c, 1})) throw NotMember("no cell in row 1 of the added column");
    Diagram out = u.without({c, 1});
    if (!kd_membership(out, a)) throw NotMember("removal left the Kohnert space of " + comp_to_string(a));
    return out;
}

std::pair<Diagram, std::optional<Cell>> rho_step(const Diagram& t) {
    for (int c = 2; c <= t.max_col(); ++c) {
        int best = 0, best_row = 0;
        for (int r = 1; r <= t.max_row(); ++r) {
            int m = deficiency(t, c, r);
            if (m < best || (m == best && m < 0)) {
                if (m < best) best = m;
                best_row = r; // scanning upward keeps the highest row with the min
            }
        }
        if (best < 0) {
            Cell src{c, best_row};
            Cell dst{c - 1, best_row};
            return {t.without(src).with(dst), src};
        }
    }
    return {t, std::nullopt};
}

RectificationTrace rectify(const Diagram& t) {
    RectificationTrace trace;
    trace.result = t;
    for (;;) {
        auto [next, moved] = rho_step(trace.result);
        if (!moved) break;
        trace.steps.emplace_back(*moved, Cell{moved->col - 1, moved->row});
        trace.result = next;
    }
    return trace;
}

Diagram top_insert(const Diagram& t, int j) {
    if (j < 1) throw InvalidComposition("row index must be positive");
    return rectify(t.with({t.max_col() + 1, j})).result;
}

RemovableReport removable_analysis(const Diagram& t) {
    RemovableReport report;
    for (const Cell& x : t.cells())
        if (is_generic(t.without(x))) report.removable_cells.push_back(x);
    if (!is_generic(t) && !report.removable_cells.empty()) {
        bool same_col = true;
        for (const Cell& x : report.removable_cells)
            if (x.col != report.removable_cells.front().col) same_col = false;
        if (same_col) {
            report.removable_column = report.removable_cells.front().col;
            report.lowest = report.removable_cells.front();
            report.highest = report.removable_cells.back();
        }
    }
    return report;
}

Diagram un_rectify(const Diagram& u, Cell y, int target_column) {
    if (!u.contains(y)) throw NotMember("tracked cell is not in the diagram");
    Diagram cur = u;
    while (y.col < target_column) {
        // highest cell in y's column whose removal keeps the diagram generic
        std::optional<Cell> pick;
        for (const Cell& x : cur.column(y.col))
            if (is_generic(cur.without(x))) pick = x; // column scan runs bottom-up
        if (!pick) throw NotMember("no liftable cell in column " + std::to_string(y.col));
        Cell dst{y.col + 1, pick->row};
        if (cur.contains(dst) && dst != *pick)
            throw NotMember("lift destination occupied");
        cur = cur.without(*pick).with(dst);
        y = dst;
    }
    return cur;
}

Diagram insert_strip(const Diagram& t, const std::vector<int>& rows, StripMode mode) {
    Diagram cur = t;
    if (mode == StripMode::bottom) {
        for (std::size_t i = 0; i < rows.size(); ++i) cur = bottom_insert(cur);
        return cur;
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1])
            throw InvalidComposition("top insertion rows must weakly decrease");
    for (int j : rows) cur = top_insert(cur, j);
    return cur;
}

} // namespace keycomb
