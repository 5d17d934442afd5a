#ifndef SYMCHAR_MN_HPP
#define SYMCHAR_MN_HPP

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "symchar/partition.hpp"

namespace symchar {

/// Result of stripping one rim hook (border strip) off a Young diagram.
struct RimHookRemoval {
    Partition remaining;
    int height = 1;  ///< rows met by the strip
    int sign = 1;    ///< (-1)^(height-1)

    bool operator==(const RimHookRemoval&) const = default;
};

/// arm + leg + 1 for the cell in 0-based (row, col). Throws
/// std::out_of_range if the cell is not in the diagram.
int hook_length(const Partition& p, int row, int col);

/// One entry per cell of hook length `length`, ordered by ascending row of
/// that cell. Empty if there is none.
std::vector<RimHookRemoval> border_strip_removals(const Partition& p, int length);

/// Murnaghan-Nakayama evaluator with a grow-only memo keyed on (lambda, mu).
/// Always strips the largest remaining part of mu. Safe to call from several
/// threads at once; concurrent duplicate work on a key is harmless since
/// every writer stores the same value.
class MnEngine {
public:
    MnEngine() = default;
    MnEngine(const MnEngine&) = delete;
    MnEngine& operator=(const MnEngine&) = delete;

    /// chi_lambda(w_mu). Throws std::invalid_argument if |lambda| != |mu|.
    BigInt character(const Partition& lambda, const Partition& mu);

    std::size_t memo_size() const;
    void clear();

private:
    BigInt evaluate(const Partition& lambda, const Partition& mu);

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, BigInt> memo_;
};

/// Process-wide engine used by the free functions below.
MnEngine& shared_engine();

BigInt mn_char(const Partition& lambda, const Partition& mu);
/// chi_lambda(1)
BigInt degree(const Partition& lambda);
/// The sign character at mu; equals mn_char((1^n), mu).
int sign_value(const Partition& mu);

/// Square table of exact character values. Rows are irreducibles lambda and
/// columns are classes mu, both in partitions_of(n) order.
class CharTable {
public:
    CharTable() = default;
    CharTable(int n, std::vector<Partition> order, std::vector<BigInt> values);

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return order_.size(); }
    const std::vector<Partition>& order() const noexcept { return order_; }
    const std::vector<BigInt>& values() const noexcept { return values_; }

    const BigInt& at(std::size_t row, std::size_t col) const {
        return values_[row * order_.size() + col];
    }
    const BigInt& value(const Partition& lambda, const Partition& mu) const {
        return at(index_of(lambda), index_of(mu));
    }
    /// Position of p in the canonical order. Throws std::invalid_argument
    /// if p is not a partition of n.
    std::size_t index_of(const Partition& p) const;

    bool operator==(const CharTable& o) const {
        return n_ == o.n_ && order_ == o.order_ && values_ == o.values_;
    }

private:
    int n_ = 0;
    std::vector<Partition> order_;
    std::vector<BigInt> values_;
    std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

struct TableOptions {
    unsigned workers = 1;
    /// Memo to use; a fresh private engine when null.
    MnEngine* engine = nullptr;
};

/// Full table by the MN rule, rows distributed over `workers` threads.
/// Output does not depend on the worker count.
CharTable character_table(int n, const TableOptions& options = {});

}  // namespace symchar

#endif  // SYMCHAR_MN_HPP
