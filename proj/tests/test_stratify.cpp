#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "keycomb/errors.hpp"
#include "keycomb/space.hpp"
#include "keycomb/stratify.hpp"

using namespace keycomb;

namespace {

// 21-cell diagram in the third stratum of the target spaces of (1,5,2,1,2,6,3)
Diagram strata_example() {
    return Diagram({{1, 7}, {2, 7}, {1, 6}, {2, 6}, {1, 5}, {3, 5}, {1, 4}, {2, 4}, {4, 4},
                    {1, 3}, {2, 3}, {3, 3}, {1, 2}, {2, 2}, {4, 2}, {5, 2}, {6, 2}, {1, 1},
                    {3, 1}, {4, 1}, {5, 1}});
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

bool in_stratum(const Diagram& u, const Composition& a, int k, int m = 1) {
    if (!target_space_membership(u, a, k, m)) return false;
    return k == 1 || !target_space_membership(u, a, k - 1, m);
}

} // namespace

TEST_CASE("added column from the column weight difference") {
    Diagram u({{1, 5}, {2, 4}, {3, 4}, {1, 3}, {2, 3}, {4, 3}, {1, 2}, {2, 2}, {3, 2}, {4, 2},
               {5, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(column_weight(u) == Composition{4, 4, 3, 3, 1});
    CHECK(thread_weight(u) == Composition{4, 5, 2, 0, 4});
    CHECK(added_column(u, {4, 1, 5, 0, 4}) == 2);
    CHECK(added_column(strata_example(), {1, 5, 2, 1, 2, 6, 3}) == 4);
    CHECK(added_column(key_diagram({1, 3, 2}), {0, 3, 2}) == 1);
    CHECK(added_column(key_diagram({0, 4, 2}), {0, 3, 2}) == 4);
    CHECK(added_column_set(u, {4, 1, 5, 0, 4}, 1) == std::vector<int>{2});
    CHECK_THROWS_AS((void)added_column(key_diagram({2, 2}), {0, 3, 2}), NotMember);
}

TEST_CASE("excision and the stratum split of the worked example") {
    Diagram u = strata_example();
    Composition a{1, 5, 2, 1, 2, 6, 3};
    CHECK(thread_weight(u) == Composition{1, 5, 6, 2, 1, 4, 2});
    CHECK(stratum_index(u, a) == 3);

    Composition b = excised_weight(u, a, 3);
    CHECK(b == Composition{1, 5, 3, 2, 1, 6, 2});

    StratumSplit split = stratum_split(u, a, 3);
    CHECK(split.excised == b);
    CHECK(split.added_col == 4);
    CHECK(split.u_eq_k == std::vector<Cell>{{1, 3}, {2, 3}, {3, 3}, {4, 2}});
    CHECK(split.u_eq_k.front() == Cell{1, 3});

    // the long-thread half: cells whose thread carries at least added_col cells
    Composition bk = padded(b, 3);
    ++bk[2];
    KohnertLabeling lab = kohnert_labeling(u, bk);
    std::vector<Cell> plus, minus;
    for (const Cell& x : u.cells()) {
        int label = lab.labels.at(x);
        if (bk[label - 1] >= split.added_col) plus.push_back(x);
        else minus.push_back(x);
    }
    CHECK(split.u_plus == Diagram(plus));
    CHECK(split.u_minus == Diagram(minus));
    CHECK(split.u_plus_star == split.u_plus.without({1, 3}));
    CHECK(split.u_plus.cells().size() + split.u_minus.cells().size() == u.cells().size());

    CHECK_THROWS_AS((void)excised_weight(u, a, 2), NotMember);
}

TEST_CASE("stratum map of the worked example and its inverse") {
    Diagram u = strata_example();
    Composition a{1, 5, 2, 1, 2, 6, 3};
    StratumSplit split;
    Diagram v = stratum_map(u, a, 3, split);
    CHECK(kd_membership(v, a));
    Composition wt = row_weight(u);
    --wt[2];
    CHECK(row_weight(v) == wt);
    CHECK(split.rect_path.size() == static_cast<std::size_t>(split.added_col - 1));
    CHECK(lswap_leq(thread_weight(v), split.excised));
    CHECK(stratum_inverse(v, a, 3, split.added_col) == u);
}

TEST_CASE("stratum consistency on a sweep") {
    for (const Composition& a : small_compositions(3, 2)) {
        if (comp_sum(a) == 0) continue;
        for (int k = 1; k <= 3; ++k) {
            std::set<Diagram> image;
            for (const Diagram& u : enumerate_target_space(a, k, 1).diagrams) {
                if (!in_stratum(u, a, k)) continue;
                int c = added_column(u, a);
                Composition b = excised_weight(u, a, k);
                CHECK(padded(b, k)[k - 1] + 1 == c);
                CHECK(lswap_leq(b, a));
                StratumSplit split = stratum_split(u, a, k);
                CHECK(split.u_eq_k.size() == static_cast<std::size_t>(c));
                if (k == 1) continue;
                Diagram v = stratum_map(u, a, k);
                CHECK(image.insert(v).second); // injective on the stratum
                CHECK(kd_membership(v, a));
                CHECK(stratum_inverse(v, a, k, c) == u);
            }
        }
    }
}

TEST_CASE("drop statistic") {
    CHECK(droppable_count(Composition{4, 6, 4, 3, 0, 1, 1, 2, 5, 4}, 5, 6) == 1);
    CHECK(droppable_count(Composition{4, 6, 4, 3, 0, 1, 1, 2, 5, 4}, 4, 1) == 5);
    Diagram t = key_diagram({0, 3, 2});
    for (int c = 1; c <= 3; ++c) CHECK(droppable_count(t, c, 1) == column_weight(t)[c - 1]);
    CHECK(droppable_count(Diagram(), 2, 1) == 0);
}

TEST_CASE("drop decompositions") {
    Composition a{0, 3, 2};
    auto trivial = find_drop_decomposition(key_diagram(a), a, 2, 0);
    REQUIRE(trivial.has_value());
    CHECK(trivial->base == key_diagram(a));
    CHECK(trivial->added.empty());

    auto single = find_drop_decomposition(key_diagram({4, 0, 2}), a, 1, 1);
    REQUIRE(single.has_value());
    CHECK(single->added == std::vector<Cell>{{4, 1}});
    CHECK(single->base == key_diagram({3, 0, 2}));

    CHECK_FALSE(find_drop_decomposition(key_diagram({1, 1, 1}), a, 2, 1).has_value());
}

TEST_CASE("degree two membership matches enumeration") {
    Composition a{0, 2, 1};
    std::set<Diagram> oracle = enumerate_target_space(a, 2, 2).diagrams;
    for (const Diagram& u : oracle) CHECK(target_space_membership(u, a, 2, 2));
    for (const Diagram& u : enumerate_target_space(a, 3, 2).diagrams)
        CHECK(target_space_membership(u, a, 2, 2) == (oracle.count(u) == 1));
}

TEST_CASE("degree-m excision and stratum maps") {
    Diagram u = strata_example();
    Composition a{1, 5, 2, 1, 2, 6, 3};
    auto [b, c] = degree_m_excised_weight(u, a, 3, 1);
    CHECK(b == Composition{1, 5, 3, 2, 1, 6, 2});
    CHECK(c == 4);
    CHECK(stratum_map_m(u, a, 3, 1) == stratum_map(u, a, 3));

    Composition small{0, 2, 1};
    for (int k = 2; k <= 3; ++k) {
        std::set<Diagram> image;
        for (const Diagram& w : enumerate_target_space(small, k, 2).diagrams) {
            if (!in_stratum(w, small, k, 2)) continue;
            Diagram v = stratum_map_m(w, small, k, 2);
            CHECK(target_space_membership(v, small, k, 1));
            Composition wt = row_weight(w);
            --wt[k - 1];
            CHECK(comp_eq(row_weight(v), wt));
            CHECK(image.insert(v).second);
        }
    }
}
