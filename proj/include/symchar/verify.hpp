#ifndef SYMCHAR_VERIFY_HPP
#define SYMCHAR_VERIFY_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "symchar/class_algebra.hpp"
#include "symchar/mn.hpp"

namespace symchar {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Individual invariant checks over one character table. Each returns a
// failed result with the first counterexample in `detail`.

/// sum_lambda chi(mu) chi(nu) = z_mu [mu = nu]
CheckResult check_column_orthogonality(const CharTable& table);
/// sum_mu |C_mu| chi(mu) rho(mu) = n! [chi = rho]
CheckResult check_row_orthogonality(const CharTable& table);
/// Non-hooks vanish on (n), hooks give (-1)^k there, and hooks other than
/// (n), (1^n) vanish on (n-1,1).
CheckResult check_hook_vanishing(const CharTable& table);
/// Closed forms against table values for every instantiable shape.
CheckResult check_near_hook_formulas(const CharTable& table);
/// Hook and two-row recursions against table values for every valid k.
CheckResult check_recursions(const CharTable& table);
/// Character-sum structure constants against brute force: every triple
/// when n <= 6, otherwise `samples` triples from a fixed-seed generator.
CheckResult check_structure_oracle(const CharTable& table, int samples,
                                   const BruteForceOptions& options = {});
/// a(mu,nu,gamma) = a(nu,mu,gamma), and zero unless sgn(mu)sgn(nu) = sgn(gamma).
CheckResult check_structure_symmetry_parity(const CharTable& table);
/// For every covering pair and every gamma: character sum equals
/// 2|C_mu||C_nu|/n! on odd gamma and 0 on even gamma.
CheckResult check_predicted_coefficients(const CharTable& table);
/// Every mu != nu with a positive transposition coefficient is related by
/// merging two parts in one direction.
CheckResult check_merge_lemma(const CharTable& table);
/// Covering pairs are exactly {(n),(n-1,1)} (n > 6), with and without pruning.
CheckResult check_main_theorem(const CharTable& table);
/// No single class covers and some pair does (n >= 4).
CheckResult check_k_equals_two(const CharTable& table);
/// Pruned and exhaustive searches agree.
CheckResult check_pruning_consistency(const CharTable& table);

enum class Suite { Theorem, Orthogonality, Formulas, Structure, All };

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view text);

using TableSource = std::function<CharTable(int)>;

struct SuiteOptions {
    BruteForceOptions brute_force;
    int structure_samples = 200;
};

/// Runs the checks of `suite` for n_min..n_max, calling `on_result` after
/// each one. Checks outside their meaningful range (the theorem for n <= 6,
/// brute force past the limit) are left out.
std::vector<CheckResult> run_suite(Suite suite, int n_min, int n_max, const TableSource& tables,
                                   const SuiteOptions& options = {},
                                   const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace symchar

#endif  // SYMCHAR_VERIFY_HPP
