#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "keycomb/errors.hpp"
#include "keycomb/insertion.hpp"
#include "keycomb/space.hpp"
#include "keycomb/stratify.hpp"

using namespace keycomb;

namespace {

Diagram colsort_diagram() {
    return Diagram({{1, 5}, {2, 5}, {3, 4}, {1, 3}, {2, 3}, {4, 3}, {1, 2}, {3, 2}, {4, 2},
                    {5, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
}

std::vector<Composition> small_compositions(int n, int top) {
    std::set<Composition, CompLess> seen{{}};
    std::vector<Composition> frontier{{}};
    for (int d = 0; d < n; ++d) {
        std::vector<Composition> next;
        for (const Composition& a : frontier)
            for (int v = 0; v <= top; ++v) {
                Composition b = a;
                b.push_back(v);
                next.push_back(b);
                seen.insert(trimmed(b));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

TEST_CASE("bottom insertion fills the leftmost gap of row one") {
    Diagram key = key_diagram({0, 3, 2});
    CHECK(bottom_insert(key) == key.with({1, 1}));
    CHECK(bottom_insert(key_diagram({0, 2, 1})) == key_diagram({1, 2, 1}));
    CHECK(bottom_insert(Diagram()) == Diagram({{1, 1}}));
    CHECK(bottom_insert(key_diagram({2, 1})) == key_diagram({2, 1}).with({3, 1}));
}

TEST_CASE("one corrective push at the leftmost deficient column") {
    Diagram rho_example({{1, 5}, {2, 5}, {3, 4}, {4, 4}, {1, 3}, {2, 3}, {3, 3}, {1, 2}, {3, 2},
                         {4, 2}, {5, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
    auto [moved, cell] = rho_step(rho_example);
    REQUIRE(cell.has_value());
    CHECK(*cell == Cell{3, 2});
    CHECK(moved == rho_example.without({3, 2}).with({2, 2}));

    auto [same, none] = rho_step(colsort_diagram());
    CHECK_FALSE(none.has_value());
    CHECK(same == colsort_diagram());

    auto [one, first] = rho_step(colsort_diagram().with({5, 4}));
    REQUIRE(first.has_value());
    CHECK(*first == Cell{5, 4});
    CHECK(one == colsort_diagram().with({4, 4}));
}

TEST_CASE("rectification of the appended column-sorted diagram") {
    Diagram start = colsort_diagram().with({6, 4});
    RectificationTrace trace = rectify(start);
    REQUIRE(trace.steps.size() == 4);
    CHECK(trace.steps[0] == std::pair<Cell, Cell>{{6, 4}, {5, 4}});
    CHECK(trace.steps[1] == std::pair<Cell, Cell>{{5, 4}, {4, 4}});
    CHECK(trace.steps[2] == std::pair<Cell, Cell>{{4, 3}, {3, 3}});
    CHECK(trace.steps[3] == std::pair<Cell, Cell>{{3, 2}, {2, 2}});
    CHECK(is_generic(trace.result));
    CHECK(kd_membership(trace.result, {4, 2, 5, 0, 4}));
    CHECK(row_weight(trace.result) == row_weight(start));

    RectificationTrace shorter = rectify(colsort_diagram().with({5, 4}));
    CHECK(shorter.steps.size() == 3);
    CHECK(shorter.result == trace.result);

    CHECK(rectify(colsort_diagram()).steps.empty());
    RectificationTrace small = rectify(key_diagram({0, 2, 1}).with({3, 3}));
    CHECK(small.steps.size() == 1);
    CHECK(small.result == key_diagram({0, 2, 2}));
}

TEST_CASE("top insertion appends past the last occupied column") {
    CHECK(top_insert(key_diagram({0, 2, 1}), 3) == key_diagram({0, 2, 2}));
    CHECK(top_insert(Diagram(), 2) == Diagram({{1, 2}}));
    Diagram low = top_insert(key_diagram({0, 2, 1}), 1);
    CHECK(kd_membership(low, {0, 3, 1}));
    CHECK(low != key_diagram({0, 3, 1}));
    CHECK(top_insert(colsort_diagram(), 4) == rectify(colsort_diagram().with({6, 4})).result);
    CHECK_THROWS_AS((void)top_insert(Diagram(), 0), InvalidComposition);
}

TEST_CASE("removable cells by deletion") {
    Diagram weak = colsort_diagram().with({5, 4});
    RemovableReport report = removable_analysis(weak);
    REQUIRE(report.removable_column.has_value());
    CHECK(*report.removable_column == 5);
    CHECK(report.lowest == Cell{5, 4});

    RemovableReport tiny = removable_analysis(Diagram({{1, 1}, {2, 2}}));
    CHECK(tiny.removable_cells == std::vector<Cell>{{2, 2}});
    CHECK(tiny.removable_column == 2);

    // generic diagrams report removable cells but no distinguished column
    RemovableReport gen = removable_analysis(key_diagram({2}));
    CHECK_FALSE(gen.removable_column.has_value());
}

TEST_CASE("reverse rectification") {
    Diagram start = colsort_diagram().with({6, 4});
    RectificationTrace trace = rectify(start);
    Cell tracked = trace.steps.back().second;
    CHECK(un_rectify(trace.result, tracked, 6) == start);
    CHECK(un_rectify(Diagram({{1, 1}}), {1, 1}, 1) == Diagram({{1, 1}}));
}

TEST_CASE("bottom insertion is a bijection onto the first target space") {
    for (const Composition& a : small_compositions(3, 3)) {
        std::set<Diagram> image;
        for (const Diagram& t : enumerate_kd(a).diagrams) {
            Diagram u = bottom_insert(t);
            CHECK(image.insert(u).second);
            CHECK(bottom_remove(u, a) == t);
        }
        CHECK(image == enumerate_target_space(a, 1, 1).diagrams);
    }
    CHECK_THROWS_AS((void)bottom_remove(key_diagram({2, 2}), {0, 3, 2}), NotMember);
}

TEST_CASE("top insertion is a bijection for high rows") {
    for (const Composition& a : small_compositions(3, 3)) {
        int len = static_cast<int>(comp_length(a));
        for (int k = std::max(1, len); k <= 3; ++k) {
            std::set<Diagram> image;
            for (const Diagram& t : enumerate_kd(a).diagrams)
                for (int j = 1; j <= k; ++j) CHECK(image.insert(top_insert(t, j)).second);
            CHECK(image == enumerate_target_space(a, k, 1).diagrams);
        }
    }
}

TEST_CASE("strip insertion") {
    Diagram base = key_diagram({1, 4, 0, 3});
    Diagram two = insert_strip(base, {1, 1}, StripMode::bottom);
    CHECK(row_weight(two) == Composition{3, 4, 0, 3});
    CHECK(target_space_membership(two, {1, 4, 0, 3}, 1, 2));

    Diagram top2 = insert_strip(key_diagram({0, 1, 4, 3}), {3, 3}, StripMode::top);
    CHECK(target_space_membership(top2, {0, 1, 4, 3}, 3, 2));
    CHECK(enumerate_target_space({0, 1, 4, 3}, 3, 2).diagrams.count(top2) == 1);

    CHECK(insert_strip(base, {}, StripMode::top) == base);
    CHECK_THROWS_AS((void)insert_strip(base, {1, 2}, StripMode::top), InvalidComposition);
}
