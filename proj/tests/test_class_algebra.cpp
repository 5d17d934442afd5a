#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symchar/class_algebra.hpp"

using namespace symchar;

namespace {

// All pairs (x, y) in C_mu x C_nu with x*y = g, by a double loop over S_n.
long count_factorizations(const Partition& mu, const Partition& nu, const Permutation& g) {
    const int n = g.size();
    std::vector<Permutation> xs, ys;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        Permutation x(p);
        if (x.cycle_type() == mu) xs.push_back(x);
        if (x.cycle_type() == nu) ys.push_back(x);
    } while (std::next_permutation(p.begin(), p.end()));
    long count = 0;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (x * y == g) ++count;
    return count;
}

}  // namespace

TEST_CASE("Permutation basics") {
    Permutation g = Permutation::canonical_representative({3, 2});
    CHECK(g.images() == std::vector<int>{1, 2, 0, 4, 3});
    CHECK(g.cycle_type() == Partition({3, 2}));
    CHECK(g * g.inverse() == Permutation::identity(5));
    CHECK(Permutation::identity(4).cycle_type() == Partition::single_column(4));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
    // other is applied first
    Permutation a({1, 0, 2});
    Permutation b({0, 2, 1});
    CHECK((a * b)(1) == a(b(1)));
}

TEST_CASE("structure constant examples") {
    auto t3 = character_table(3);
    CHECK(structure_constant({3}, {2, 1}, {2, 1}, t3) == 2);
    CHECK(structure_constant({3}, {2, 1}, {3}, t3) == 0);
    CHECK(structure_constant({2, 1}, {2, 1}, {1, 1, 1}, t3) == 3);
    CHECK(structure_constant_bruteforce({3}, {2, 1}, {2, 1}) == 2);
    CHECK(structure_constant_bruteforce({3}, {2, 1}, {3}) == 0);
    CHECK(structure_constant_bruteforce({2, 1}, {2, 1}, {1, 1, 1}) == 3);

    auto t4 = character_table(4);
    CHECK(structure_constant_bruteforce({2, 1, 1}, {2, 1, 1}, {1, 1, 1, 1}) == 6);
    CHECK(structure_constant({2, 1, 1}, {2, 1, 1}, {1, 1, 1, 1}, t4) == 6);
    const long four_cycles = count_factorizations({4}, {4}, Permutation::canonical_representative({2, 2}));
    CHECK(four_cycles == 2);
    CHECK(structure_constant_bruteforce({4}, {4}, {2, 2}) == four_cycles);
    CHECK(structure_constant({4}, {4}, {2, 2}, t4) == four_cycles);

    // mu = nu, gamma = identity gives |C_mu|.
    for (int n = 1; n <= 8; ++n) {
        auto t = character_table(n);
        for (const auto& mu : t.order()) {
            CHECK(structure_constant(mu, mu, Partition::single_column(n), t) == class_size(mu));
        }
    }
}

TEST_CASE("structure constant errors") {
    auto t3 = character_table(3);
    CHECK_THROWS_AS(structure_constant({3}, {2, 1}, {2}, t3), std::invalid_argument);
    CHECK_THROWS_AS(structure_constant({4}, {4}, {4}, t3), std::invalid_argument);
    CHECK_THROWS_AS(structure_constant_bruteforce({9}, {9}, {9}), std::invalid_argument);
    CHECK_THROWS_AS(structure_constant_bruteforce({3}, {3}, {3}, {.limit = 2}), std::invalid_argument);
}

TEST_CASE("brute force matches the naive double loop") {
    for (int n = 1; n <= 5; ++n) {
        auto ps = partitions_of(n);
        for (const auto& mu : ps)
            for (const auto& nu : ps)
                for (const auto& gamma : ps) {
                    auto g = Permutation::canonical_representative(gamma);
                    CHECK(structure_constant_bruteforce(mu, nu, gamma) == count_factorizations(mu, nu, g));
                }
    }
}

TEST_CASE("character sum equals enumeration for every triple, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        auto t = character_table(n);
        for (const auto& mu : t.order())
            for (const auto& nu : t.order())
                for (const auto& gamma : t.order()) {
                    CAPTURE(format_partition(mu) + " | " + format_partition(nu) + " | " + format_partition(gamma));
                    CHECK(structure_constant(mu, nu, gamma, t) == structure_constant_bruteforce(mu, nu, gamma));
                }
    }
}

TEST_CASE("enumeration does not depend on the representative g or the shard count") {
    std::mt19937_64 rng(7);
    for (int n = 3; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (int s = 0; s < 40; ++s) {
            const auto& mu = ps[rng() % ps.size()];
            const auto& nu = ps[rng() % ps.size()];
            const auto& gamma = ps[rng() % ps.size()];
            // Conjugate the canonical representative by a random permutation.
            std::vector<int> h(static_cast<std::size_t>(n));
            std::iota(h.begin(), h.end(), 0);
            std::shuffle(h.begin(), h.end(), rng);
            Permutation conj(h);
            Permutation g = conj * Permutation::canonical_representative(gamma) * conj.inverse();
            CHECK(g.cycle_type() == gamma);
            BigInt canonical = structure_constant_bruteforce(mu, nu, gamma);
            CHECK(structure_constant_bruteforce(mu, nu, g) == canonical);
            CHECK(structure_constant_bruteforce(mu, nu, gamma, {.workers = 3}) == canonical);
        }
    }
}

TEST_CASE("symmetry and parity, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        auto t = character_table(n);
        for (const auto& mu : t.order())
            for (const auto& nu : t.order())
                for (const auto& gamma : t.order()) {
                    BigInt a = structure_constant(mu, nu, gamma, t);
                    CHECK(a == structure_constant(nu, mu, gamma, t));
                    if (sign_value(mu) * sign_value(nu) != sign_value(gamma)) CHECK(a == 0);
                }
    }
}

TEST_CASE("predicted coefficient") {
    auto t7 = character_table(7);
    const Partition full{7};
    const Partition almost{6, 1};
    const BigInt odd = 2 * class_size(full) * class_size(almost) / factorial(7);
    CHECK(odd == 240);
    auto p = predicted_coefficient(full, almost, {2, 1, 1, 1, 1, 1}, t7);
    REQUIRE(p.has_value());
    CHECK(*p == odd);
    CHECK(*p == structure_constant(full, almost, {2, 1, 1, 1, 1, 1}, t7));
    auto even = predicted_coefficient(full, almost, {3, 1, 1, 1, 1}, t7);
    REQUIRE(even.has_value());
    CHECK(*even == 0);
    CHECK(structure_constant(full, almost, {3, 1, 1, 1, 1}, t7) == 0);
    CHECK_FALSE(predicted_coefficient({5, 2}, almost, {7}, t7).has_value());

    // Same-parity covering pair at n = 3: the linear-character sum vanishes on odd gamma.
    auto t3 = character_table(3);
    auto same = predicted_coefficient({2, 1}, {2, 1}, {2, 1}, t3);
    REQUIRE(same.has_value());
    CHECK(*same == structure_constant({2, 1}, {2, 1}, {2, 1}, t3));
}

TEST_CASE("merge_lemma_check") {
    CHECK(merge_lemma_check({5, 2, 2, 1}, {5, 3, 2}));
    for (int n = 2; n <= 12; ++n) CHECK(merge_lemma_check(Partition::hook(n, 1), Partition::single_row(n)));
    CHECK_FALSE(merge_lemma_check({4, 4}, {5, 3}));
    CHECK_FALSE(merge_lemma_check({5, 3, 2}, {5, 2, 2, 1}));
    CHECK_THROWS_AS(merge_lemma_check({2}, {3}), std::invalid_argument);
    // Agrees with brute force over merge_parts.
    for (const auto& mu : partitions_of(8)) {
        for (const auto& nu : partitions_of(8)) {
            bool any = false;
            for (std::size_t i = 0; i < mu.length(); ++i)
                for (std::size_t j = 0; j < mu.length(); ++j)
                    if (i != j && merge_parts(mu, i, j) == nu) any = true;
            CHECK(merge_lemma_check(mu, nu) == any);
        }
    }
}

TEST_CASE("transposition coefficients come from merging or splitting, n <= 9") {
    for (int n = 2; n <= 9; ++n) {
        auto t = character_table(n);
        const Partition transposition = conjugate(Partition::hook(n, 1));
        for (std::size_t a = 0; a < t.dim(); ++a) {
            for (std::size_t b = a + 1; b < t.dim(); ++b) {
                const auto& mu = t.order()[a];
                const auto& nu = t.order()[b];
                if (structure_constant(mu, nu, transposition, t) > 0) {
                    CHECK((merge_lemma_check(mu, nu) || merge_lemma_check(nu, mu)));
                }
            }
        }
    }
}
