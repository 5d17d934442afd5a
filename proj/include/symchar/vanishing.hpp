#ifndef SYMCHAR_VANISHING_HPP
#define SYMCHAR_VANISHING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symchar/mn.hpp"

namespace symchar {

/// Unordered class pair, stored with first <= second in canonical order
/// (first comes earlier in partitions_of(n)). first == second is allowed.
struct ClassPair {
    Partition first;
    Partition second;

    bool degenerate() const { return first == second; }
    bool operator==(const ClassPair&) const = default;
};

struct PruningStats {
    std::uint64_t examined = 0;        ///< unordered pairs considered
    std::uint64_t parity_pruned = 0;   ///< same-parity pairs skipped
    std::uint64_t merge_pruned = 0;    ///< pairs with no merge relation skipped
    std::uint64_t table_checked = 0;   ///< pairs checked against the table

    bool operator==(const PruningStats&) const = default;
};

struct CoveringPairReport {
    int n = 0;
    std::vector<ClassPair> pairs;        ///< canonical order
    std::optional<int> k_value;          ///< 1 or 2 when found
    std::optional<bool> matches_theorem; ///< set only for n > 6
    PruningStats pruning_stats;
    bool vacuous = false;                ///< no non-linear characters (n <= 2)

    bool operator==(const CoveringPairReport&) const = default;
};

/// Classes mu with chi_lambda(mu) = 0, in canonical order.
std::vector<Partition> vanishing_set(const Partition& lambda, const CharTable& table);

/// Rows of the table whose character is non-linear. The two tests for
/// linearity (degree 1, and being (n) or (1^n)) are cross-checked here;
/// a disagreement throws std::logic_error.
std::vector<std::size_t> nonlinear_rows(const CharTable& table);

/// Every non-linear chi has chi(mu) = 0 or chi(nu) = 0.
bool covers_all_nonlinear(const Partition& mu, const Partition& nu, const CharTable& table);

struct SearchOptions {
    /// For n > 6, skip same-parity pairs and pairs unrelated by merging two
    /// parts before the table check.
    bool use_pruning = true;
    unsigned workers = 1;
};

CoveringPairReport find_covering_pairs(const CharTable& table, const SearchOptions& options = {});

/// 1 if one class covers every non-linear character, else 2 if a pair
/// does. Throws std::invalid_argument for n < 3 and std::logic_error if no
/// pair covers.
int k_of_Sn(const CharTable& table);

struct TheoremVerdict {
    bool holds = false;
    std::vector<ClassPair> extra;    ///< covering pairs other than {(n),(n-1,1)}
    std::vector<ClassPair> missing;  ///< {(n),(n-1,1)} when it fails to cover
    std::string describe() const;
};

/// Checks that the covering pairs are exactly {(n),(n-1,1)}. Throws
/// std::invalid_argument for n <= 6.
TheoremVerdict verify_main_theorem(const CharTable& table, const SearchOptions& options = {});

}  // namespace symchar

#endif  // SYMCHAR_VANISHING_HPP
