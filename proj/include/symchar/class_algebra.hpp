#ifndef SYMCHAR_CLASS_ALGEBRA_HPP
#define SYMCHAR_CLASS_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "symchar/mn.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// A bijection of {0, ..., n-1}, stored as its image list.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless images is a permutation of 0..n-1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Cycles of lengths gamma_1 >= gamma_2 >= ... filled with 0,1,2,...
    /// in order, e.g. (3,2) -> (0 1 2)(3 4).
    static Permutation canonical_representative(const Partition& cycle_type);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    /// (*this * other)(i) = (*this)(other(i)), other applied first.
    Permutation operator*(const Permutation& other) const;
    Partition cycle_type() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// a_{mu nu}^gamma via |C_mu||C_nu|/n! * sum_chi chi(mu) chi(nu) chi(gamma) / chi(1),
/// evaluated over the rationals and required to come out a nonnegative
/// integer (std::logic_error otherwise). Throws std::invalid_argument on a
/// size mismatch with each other or with the table.
BigInt structure_constant(const Partition& mu, const Partition& nu, const Partition& gamma,
                          const CharTable& table);

/// Default ceiling on n for exhaustive enumeration (8! = 40320 candidates x).
inline constexpr int kDefaultBruteForceLimit = 8;

struct BruteForceOptions {
    int limit = kDefaultBruteForceLimit;
    unsigned workers = 1;
};

/// Counts x in C_mu with x^{-1} g in C_nu for the canonical g in C_gamma,
/// by walking all n! permutations. Cost is n! cycle-type evaluations per
/// call. Throws std::invalid_argument when n exceeds options.limit.
BigInt structure_constant_bruteforce(const Partition& mu, const Partition& nu,
                                     const Partition& gamma, const BruteForceOptions& options = {});

/// Same count against a caller-chosen g (any element of the target class).
BigInt structure_constant_bruteforce(const Partition& mu, const Partition& nu,
                                     const Permutation& g, const BruteForceOptions& options = {});

/// Coefficient forced when every non-linear character vanishes on mu or nu:
/// only the two linear characters survive the sum, which leaves
/// (1 + sgn(mu) sgn(nu) sgn(gamma)) |C_mu||C_nu| / n!. For a pair of opposite
/// parity this is 2|C_mu||C_nu|/n! on odd gamma and 0 on even gamma.
/// Empty when the pair does not cover all non-linear characters.
std::optional<BigInt> predicted_coefficient(const Partition& mu, const Partition& nu,
                                            const Partition& gamma, const CharTable& table);

/// True iff nu arises from mu by adding two of its parts together.
bool merge_lemma_check(const Partition& mu, const Partition& nu);

}  // namespace symchar

#endif  // SYMCHAR_CLASS_ALGEBRA_HPP
