#ifndef SYMCHAR_FORMULAS_HPP
#define SYMCHAR_FORMULAS_HPP

#include <array>
#include <optional>
#include <string_view>

#include "symchar/partition.hpp"

namespace symchar {

/// The eight shapes (n - |tail|, tail) with a closed form in m_1..m_4.
enum class NearHookShape { R1, R2, R11, R3, R21, R111, R211, R1111 };

inline constexpr std::array<NearHookShape, 8> kNearHookShapes = {
    NearHookShape::R1,  NearHookShape::R2,   NearHookShape::R11,  NearHookShape::R3,
    NearHookShape::R21, NearHookShape::R111, NearHookShape::R211, NearHookShape::R1111};

std::string_view shape_name(NearHookShape s);

/// Smallest n for which the shape is a partition.
int shape_min_n(NearHookShape s);

/// The partition of n with this shape. Throws std::invalid_argument when
/// n < shape_min_n(s).
Partition shape_partition(NearHookShape s, int n);

/// Inverse of shape_partition, when lambda is one of the eight shapes.
std::optional<NearHookShape> shape_of(const Partition& lambda);

/// Closed-form chi_shape(w_mu) in the multiplicities of mu. Each fractional
/// term is divided exactly; a remainder throws std::logic_error.
BigInt near_hook_value(NearHookShape shape, const Partition& mu);

enum class InnerCharacter { Trivial, Sign };

/// (chi_(n-k) x inner_k) induced from S_{n-k} x S_k to S_n, at class mu:
/// sum over sub-multisets nu of the parts of mu with |nu| = k of
/// inner(nu) * prod_i binom(m_i(mu), m_i(nu)). Requires 1 <= k <= n.
BigInt induced_value(int k, InnerCharacter inner, const Partition& mu);

/// chi_(n-k,1^k)(w_mu) by repeated subtraction of the previous hook from
/// the induced sign character. Requires 0 <= k <= n-1.
BigInt hook_char_recursive(int k, const Partition& mu);

/// chi_(n-k,k)(w_mu) as the induced trivial character minus every lower
/// two-row character. Requires 0 <= k <= n/2.
BigInt two_row_char_recursive(int k, const Partition& mu);

}  // namespace symchar

#endif  // SYMCHAR_FORMULAS_HPP
