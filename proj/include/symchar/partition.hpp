#ifndef SYMCHAR_PARTITION_HPP
#define SYMCHAR_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace symchar {

/// Exact integer used for orders, counts and character values.
using BigInt = mpz_class;

/// A weakly decreasing sequence of positive parts. The empty partition is
/// the unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Takes parts in any order; rejects non-positive parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    static Partition single_row(int n);
    static Partition single_column(int n);
    /// (n-k, 1^k)
    static Partition hook(int n, int k);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    /// Part i, or 0 past the end.
    int part_or_zero(std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Counts m_i of parts equal to i, keyed by i. Zero counts are not stored.
class MultiplicityVector {
public:
    MultiplicityVector() = default;
    explicit MultiplicityVector(std::map<int, int> counts);

    int operator[](int part) const noexcept;
    const std::map<int, int>& counts() const noexcept { return counts_; }
    int total() const noexcept;
    Partition to_partition() const;

    bool operator==(const MultiplicityVector&) const = default;

private:
    std::map<int, int> counts_;
};

enum class DominanceResult { Less, Greater, Equal, Incomparable };

/// All partitions of n in descending reverse-lexicographic order:
/// (n) first, (1^n) last. This order indexes character-table rows and columns.
std::vector<Partition> partitions_of(int n);

MultiplicityVector multiplicities(const Partition& p);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// z_mu = prod_i i^{m_i} m_i!
BigInt centralizer_order(const Partition& p);
/// n! / z_mu
BigInt class_size(const Partition& p);

/// Prefix-sum comparison. Throws std::invalid_argument if sizes differ.
DominanceResult dominance_compare(const Partition& p, const Partition& q);

bool is_hook(const Partition& p);

/// Replaces parts i and j (0-based) by their sum.
Partition merge_parts(const Partition& p, std::size_t i, std::size_t j);

Partition conjugate(const Partition& p);

/// (-1)^(n - number of parts): the parity of a permutation of this cycle type.
int sign_of(const Partition& p);

/// Accepts comma-separated positive integers in any order. The only exponent
/// form accepted is "1^k" for k fixed points; "3^2" and the like are errors.
/// Throws std::invalid_argument.
Partition parse_partition(std::string_view text);
/// Descending, comma-separated, e.g. "3,3,1". The empty partition is "".
std::string format_partition(const Partition& p, char sep = ',');

std::string to_string(DominanceResult r);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace symchar

#endif  // SYMCHAR_PARTITION_HPP
