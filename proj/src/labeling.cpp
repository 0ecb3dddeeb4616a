#include <algorithm>
#include <map>

#include "keycomb/diagram.hpp"
#include "keycomb/errors.hpp"
#include "keycomb/space.hpp"

namespace keycomb {

KohnertLabeling kohnert_labeling(const Diagram& t, const Composition& a) {
    check_composition(a);
    if (!kd_membership(t, a))
        throw NotMember("diagram is not a Kohnert diagram for " + comp_to_string(a));
    KohnertLabeling out;
    out.matching.cells.insert(t.cells().begin(), t.cells().end());
    std::map<int, std::map<int, Cell>> by_label_col; // label -> col -> cell
    for (int j = t.max_col(); j >= 1; --j) {
        std::vector<int> labels;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] >= j) labels.push_back(static_cast<int>(i + 1));
        std::vector<bool> used(labels.size(), false);
        for (const Cell& cell : t.column(j)) { // bottom to top
            bool placed = false;
            for (std::size_t li = 0; li < labels.size() && !placed; ++li) {
                if (used[li]) continue;
                int label = labels[li];
                auto it = by_label_col.find(label);
                if (it != by_label_col.end()) {
                    auto jt = it->second.find(j + 1);
                    if (jt != it->second.end() && jt->second.row > cell.row)
                        continue; // the matching target must sit weakly above
                }
                used[li] = true;
                out.labels[cell] = label;
                by_label_col[label][j] = cell;
                placed = true;
            }
            if (!placed) throw NotMember("labeling failed at column " + std::to_string(j));
        }
    }
    for (const auto& [label, cols] : by_label_col)
        for (const auto& [col, cell] : cols) {
            auto next = cols.find(col + 1);
            if (next != cols.end()) out.matching.edges[next->second] = cell;
        }
    return out;
}

} // namespace keycomb
