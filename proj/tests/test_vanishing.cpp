#include "doctest.h"
#include "symchar/class_algebra.hpp"
#include "symchar/vanishing.hpp"

using namespace symchar;

TEST_CASE("vanishing_set") {
    auto t7 = character_table(7);
    CHECK(vanishing_set({7}, t7).empty());
    auto t3 = character_table(3);
    CHECK(vanishing_set({2, 1}, t3) == std::vector<Partition>{{2, 1}});
    auto v = vanishing_set({5, 2}, t7);
    CHECK(std::find(v.begin(), v.end(), Partition({7})) != v.end());
}

TEST_CASE("every non-linear character has a zero, 3 <= n <= 12") {
    for (int n = 3; n <= 12; ++n) {
        auto t = character_table(n);
        for (std::size_t r : nonlinear_rows(t)) CHECK_FALSE(vanishing_set(t.order()[r], t).empty());
        CHECK(nonlinear_rows(t).size() == t.dim() - 2);
    }
    CHECK(nonlinear_rows(character_table(1)).empty());
    CHECK(nonlinear_rows(character_table(2)).empty());
}

TEST_CASE("covers_all_nonlinear") {
    auto t7 = character_table(7);
    CHECK(covers_all_nonlinear({7}, {6, 1}, t7));
    CHECK(covers_all_nonlinear({6, 1}, {7}, t7));
    CHECK_FALSE(covers_all_nonlinear({7}, {5, 2}, t7));
    CHECK_FALSE(covers_all_nonlinear({2, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1}, t7));
}

TEST_CASE("find_covering_pairs small n") {
    auto r3 = find_covering_pairs(character_table(3));
    CHECK(r3.pairs == std::vector<ClassPair>{{{3}, {2, 1}}, {{2, 1}, {2, 1}}, {{2, 1}, {1, 1, 1}}});
    CHECK(r3.k_value == 1);
    CHECK_FALSE(r3.matches_theorem.has_value());
    CHECK_FALSE(r3.vacuous);
    CHECK(r3.pairs[1].degenerate());

    auto r2 = find_covering_pairs(character_table(2));
    CHECK(r2.vacuous);
    CHECK(r2.pairs.size() == 3);
    CHECK(r2.k_value == 1);

    auto r1 = find_covering_pairs(character_table(1));
    CHECK(r1.vacuous);
    CHECK(r1.pairs.size() == 1);

    for (int n = 4; n <= 6; ++n) {
        auto r = find_covering_pairs(character_table(n));
        CHECK(r.k_value == 2);
        CHECK(r.pruning_stats.parity_pruned == 0);
        CHECK(r.pruning_stats.table_checked == r.pruning_stats.examined);
    }
}

TEST_CASE("covering pairs for 7 <= n <= 12") {
    for (int n = 7; n <= 12; ++n) {
        auto t = character_table(n);
        auto pruned = find_covering_pairs(t, {.use_pruning = true});
        auto full = find_covering_pairs(t, {.use_pruning = false});
        CHECK(pruned.pairs == full.pairs);
        CHECK(pruned.k_value == full.k_value);
        REQUIRE(full.pairs.size() == 1);
        CHECK(full.pairs[0] == ClassPair{Partition::single_row(n), Partition::hook(n, 1)});
        CHECK(pruned.matches_theorem == true);
        CHECK(pruned.k_value == 2);
        CHECK(k_of_Sn(t) == 2);
        for (const auto& p : full.pairs) CHECK(sign_value(p.first) * sign_value(p.second) == -1);
        for (const auto& mu : t.order()) CHECK_FALSE(covers_all_nonlinear(mu, mu, t));

        const auto& s = pruned.pruning_stats;
        const std::uint64_t d = t.dim();
        CHECK(s.examined == d * (d + 1) / 2);
        CHECK(s.examined == s.parity_pruned + s.merge_pruned + s.table_checked);
        CHECK(s.parity_pruned > 0);
        CHECK(s.merge_pruned > 0);
        CHECK(full.pruning_stats.table_checked == s.examined);

        CHECK(find_covering_pairs(t, {.use_pruning = true, .workers = 3}) == pruned);

        auto verdict = verify_main_theorem(t);
        CHECK(verdict.holds);
        CHECK(verdict.extra.empty());
    }
}

TEST_CASE("no single class covers for 4 <= n <= 12") {
    for (int n = 4; n <= 12; ++n) {
        auto t = character_table(n);
        for (const auto& mu : t.order()) CHECK_FALSE(covers_all_nonlinear(mu, mu, t));
    }
}

TEST_CASE("k_of_Sn and theorem range") {
    CHECK(k_of_Sn(character_table(3)) == 1);
    CHECK(k_of_Sn(character_table(4)) == 2);
    CHECK_THROWS_AS(k_of_Sn(character_table(2)), std::invalid_argument);
    CHECK_THROWS_AS(verify_main_theorem(character_table(6)), std::invalid_argument);
    CHECK(verify_main_theorem(character_table(10)).holds);
}

TEST_CASE("verdict diagnostics name extra and missing pairs") {
    TheoremVerdict v;
    v.extra.push_back({{5, 2}, {6, 1}});
    v.missing.push_back({{7}, {6, 1}});
    CHECK(v.describe() == "extra pair {(5,2),(6,1)}; missing pair {(7),(6,1)}; ");
}

TEST_CASE("seven-case regression values at n = 11") {
    // Character evaluations the case analysis relies on, checked by MN.
    auto t = character_table(11);
    auto chi = [&](const Partition& l, const Partition& m) { return t.value(l, m); };
    // Case 1 shape: b >= 3, m1 = 1, m2 = 0: chi_(n-2,2) = -1 on both.
    CHECK(chi({9, 2}, {4, 3, 3, 1}) == -1);
    CHECK(chi({9, 2}, {7, 3, 1}) == -1);
    // Case 2: b = 2, a = 4, m1 = 1. chi_(n-3,2,1) = 1 on both classes.
    CHECK(chi({8, 2, 1}, {4, 4, 2, 1}) == chi({8, 2, 1}, {6, 4, 1}));
    CHECK(chi({8, 2, 1}, {4, 4, 2, 1}) != 0);
    // Case 3: a = 3, b = 2.
    CHECK(chi({7, 4}, {5, 3, 2, 1}) == -1);
    CHECK(chi({6, 5}, {5, 3, 2, 1}) == 1);
    CHECK(chi({7, 4}, {5, 5, 1}) == 0);
    CHECK(chi({6, 5}, {5, 5, 1}) == 2);
    CHECK(chi({6, 1, 1, 1, 1, 1}, {5, 3, 2, 1}) == 0);
    CHECK(chi({6, 1, 1, 1, 1, 1}, {5, 5, 1}) == 2);
    // The theorem pair itself.
    CHECK(covers_all_nonlinear({11}, {10, 1}, t));
}
