#include "symchar/verify.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "symchar/formulas.hpp"
#include "symchar/vanishing.hpp"

namespace symchar {

namespace {

std::string paren(const Partition& p) { return "(" + format_partition(p) + ")"; }

CheckResult pass(std::string name) { return {std::move(name), true, {}, 0.0}; }

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail), 0.0};
}

std::string tagged(std::string_view what, int n) {
    return std::string(what) + " n=" + std::to_string(n);
}

}  // namespace

CheckResult check_column_orthogonality(const CharTable& table) {
    const auto name = tagged("column orthogonality", table.n());
    const auto& order = table.order();
    for (std::size_t a = 0; a < table.dim(); ++a) {
        for (std::size_t b = a; b < table.dim(); ++b) {
            BigInt sum = 0;
            for (std::size_t r = 0; r < table.dim(); ++r) sum += table.at(r, a) * table.at(r, b);
            BigInt expected = a == b ? centralizer_order(order[a]) : BigInt(0);
            if (sum != expected) {
                return fail(name, "columns " + paren(order[a]) + ", " + paren(order[b]) + ": sum " +
                                      sum.get_str() + ", expected " + expected.get_str());
            }
        }
    }
    return pass(name);
}

CheckResult check_row_orthogonality(const CharTable& table) {
    const auto name = tagged("row orthogonality", table.n());
    const auto& order = table.order();
    std::vector<BigInt> sizes;
    for (const auto& mu : order) sizes.push_back(class_size(mu));
    const BigInt group_order = factorial(table.n());
    for (std::size_t r = 0; r < table.dim(); ++r) {
        for (std::size_t s = r; s < table.dim(); ++s) {
            BigInt sum = 0;
            for (std::size_t c = 0; c < table.dim(); ++c) sum += sizes[c] * table.at(r, c) * table.at(s, c);
            BigInt expected = r == s ? group_order : BigInt(0);
            if (sum != expected) {
                return fail(name, "rows " + paren(order[r]) + ", " + paren(order[s]) + ": sum " +
                                      sum.get_str() + ", expected " + expected.get_str());
            }
        }
    }
    return pass(name);
}

CheckResult check_hook_vanishing(const CharTable& table) {
    const int n = table.n();
    const auto name = tagged("hook vanishing", n);
    const Partition full_cycle = Partition::single_row(n);
    const std::size_t col_n = table.index_of(full_cycle);
    for (std::size_t r = 0; r < table.dim(); ++r) {
        const Partition& lambda = table.order()[r];
        const BigInt& v = table.at(r, col_n);
        if (!is_hook(lambda)) {
            if (v != 0) return fail(name, "non-hook " + paren(lambda) + " is " + v.get_str() + " on (n)");
            continue;
        }
        const int k = static_cast<int>(lambda.length()) - 1;
        if (v != (k % 2 == 0 ? 1 : -1)) {
            return fail(name, "hook " + paren(lambda) + " is " + v.get_str() + " on (n)");
        }
        if (n >= 2 && k >= 1 && k <= n - 2) {
            const BigInt& w = table.value(lambda, Partition::hook(n, 1));
            if (w != 0) return fail(name, "hook " + paren(lambda) + " is " + w.get_str() + " on (n-1,1)");
        }
    }
    return pass(name);
}

CheckResult check_near_hook_formulas(const CharTable& table) {
    const int n = table.n();
    const auto name = tagged("near-hook closed forms", n);
    for (NearHookShape shape : kNearHookShapes) {
        if (n < shape_min_n(shape)) continue;
        const Partition lambda = shape_partition(shape, n);
        for (const auto& mu : table.order()) {
            BigInt formula = near_hook_value(shape, mu);
            const BigInt& mn = table.value(lambda, mu);
            if (formula != mn) {
                return fail(name, std::string(shape_name(shape)) + " at " + paren(mu) + ": formula " +
                                      formula.get_str() + ", MN " + mn.get_str());
            }
        }
    }
    return pass(name);
}

CheckResult check_recursions(const CharTable& table) {
    const int n = table.n();
    const auto name = tagged("hook and two-row recursions", n);
    for (const auto& mu : table.order()) {
        for (int k = 0; k <= n - 1; ++k) {
            BigInt rec = hook_char_recursive(k, mu);
            const BigInt& mn = table.value(Partition::hook(n, k), mu);
            if (rec != mn) {
                return fail(name, "hook k=" + std::to_string(k) + " at " + paren(mu) + ": recursion " +
                                      rec.get_str() + ", MN " + mn.get_str());
            }
        }
        for (int k = 0; 2 * k <= n; ++k) {
            BigInt rec = two_row_char_recursive(k, mu);
            Partition lambda = k == 0 ? Partition::single_row(n) : Partition({n - k, k});
            const BigInt& mn = table.value(lambda, mu);
            if (rec != mn) {
                return fail(name, "two-row k=" + std::to_string(k) + " at " + paren(mu) + ": recursion " +
                                      rec.get_str() + ", MN " + mn.get_str());
            }
        }
    }
    return pass(name);
}

CheckResult check_structure_oracle(const CharTable& table, int samples, const BruteForceOptions& options) {
    const int n = table.n();
    const auto& order = table.order();
    const std::size_t dim = table.dim();
    auto compare = [&](std::size_t a, std::size_t b, std::size_t c) -> std::string {
        BigInt formula = structure_constant(order[a], order[b], order[c], table);
        BigInt brute = structure_constant_bruteforce(order[a], order[b], order[c], options);
        if (formula == brute) return {};
        return paren(order[a]) + " x " + paren(order[b]) + " -> " + paren(order[c]) + ": character sum " +
               formula.get_str() + ", enumeration " + brute.get_str();
    };
    if (n <= 6) {
        const auto name = tagged("structure constants vs enumeration (all triples)", n);
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                for (std::size_t c = 0; c < dim; ++c) {
                    if (auto d = compare(a, b, c); !d.empty()) return fail(name, d);
                }
            }
        }
        return pass(name);
    }
    const auto name = tagged("structure constants vs enumeration (" + std::to_string(samples) + " samples)", n);
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long long>(n));
    for (int s = 0; s < samples; ++s) {
        std::size_t a = rng() % dim;
        std::size_t b = rng() % dim;
        std::size_t c = rng() % dim;
        if (auto d = compare(a, b, c); !d.empty()) return fail(name, d);
    }
    return pass(name);
}

CheckResult check_structure_symmetry_parity(const CharTable& table) {
    const auto name = tagged("structure constant symmetry and parity", table.n());
    const auto& order = table.order();
    for (std::size_t a = 0; a < table.dim(); ++a) {
        for (std::size_t b = a; b < table.dim(); ++b) {
            for (std::size_t c = 0; c < table.dim(); ++c) {
                BigInt ab = structure_constant(order[a], order[b], order[c], table);
                BigInt ba = structure_constant(order[b], order[a], order[c], table);
                if (ab != ba) {
                    return fail(name, "asymmetric at " + paren(order[a]) + ", " + paren(order[b]) + " -> " +
                                          paren(order[c]));
                }
                if (sign_value(order[a]) * sign_value(order[b]) != sign_value(order[c]) && ab != 0) {
                    return fail(name, "parity violated at " + paren(order[a]) + ", " + paren(order[b]) +
                                          " -> " + paren(order[c]) + ": " + ab.get_str());
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_predicted_coefficients(const CharTable& table) {
    const int n = table.n();
    const auto name = tagged("predicted coefficients on covering pairs", n);
    const BigInt group_order = factorial(n);
    CoveringPairReport report = find_covering_pairs(table, {.use_pruning = false});
    for (const auto& pair : report.pairs) {
        for (const auto& gamma : table.order()) {
            BigInt actual = structure_constant(pair.first, pair.second, gamma, table);
            std::optional<BigInt> predicted = predicted_coefficient(pair.first, pair.second, gamma, table);
            // The closed form stated for opposite-parity pairs, evaluated directly.
            BigInt piecewise = sign_value(gamma) < 0
                                   ? BigInt(2 * class_size(pair.first) * class_size(pair.second) / group_order)
                                   : BigInt(0);
            if (!predicted || *predicted != actual ||
                (sign_value(pair.first) != sign_value(pair.second) && piecewise != actual)) {
                return fail(name, paren(pair.first) + ", " + paren(pair.second) + " -> " + paren(gamma) +
                                      ": actual " + actual.get_str() + ", predicted " +
                                      (predicted ? predicted->get_str() : std::string("n/a")) +
                                      ", piecewise " + piecewise.get_str());
            }
        }
    }
    return pass(name);
}

CheckResult check_merge_lemma(const CharTable& table) {
    const int n = table.n();
    const auto name = tagged("merge structure of transposition products", n);
    if (n < 2) return pass(name);
    const Partition transposition = conjugate(Partition::hook(n, 1));  // (2,1^{n-2})
    const auto& order = table.order();
    for (std::size_t a = 0; a < table.dim(); ++a) {
        for (std::size_t b = a + 1; b < table.dim(); ++b) {
            if (structure_constant(order[a], order[b], transposition, table) == 0) continue;
            if (!merge_lemma_check(order[a], order[b]) && !merge_lemma_check(order[b], order[a])) {
                return fail(name, paren(order[a]) + ", " + paren(order[b]) + " have a positive coefficient "
                                  "on " + paren(transposition) + " but no merge relation");
            }
        }
    }
    return pass(name);
}

CheckResult check_main_theorem(const CharTable& table) {
    const auto name = tagged("covering pairs are exactly {(n),(n-1,1)}", table.n());
    for (bool prune : {true, false}) {
        TheoremVerdict v = verify_main_theorem(table, {.use_pruning = prune});
        if (!v.holds) return fail(name, std::string(prune ? "pruned: " : "exhaustive: ") + v.describe());
    }
    return pass(name);
}

CheckResult check_k_equals_two(const CharTable& table) {
    const int n = table.n();
    const auto name = tagged("k(S_n) = 2", n);
    for (const auto& mu : table.order()) {
        if (covers_all_nonlinear(mu, mu, table)) return fail(name, "single class " + paren(mu) + " covers");
    }
    int k = k_of_Sn(table);
    if (k != 2) return fail(name, "k_of_Sn returned " + std::to_string(k));
    return pass(name);
}

CheckResult check_pruning_consistency(const CharTable& table) {
    const auto name = tagged("pruned search matches exhaustive search", table.n());
    auto pruned = find_covering_pairs(table, {.use_pruning = true});
    auto full = find_covering_pairs(table, {.use_pruning = false});
    if (pruned.pairs != full.pairs) {
        return fail(name, std::to_string(pruned.pairs.size()) + " pairs with pruning, " +
                              std::to_string(full.pairs.size()) + " without");
    }
    return pass(name);
}

Suite parse_suite(std::string_view text) {
    if (text == "theorem") return Suite::Theorem;
    if (text == "orthogonality") return Suite::Orthogonality;
    if (text == "formulas") return Suite::Formulas;
    if (text == "structure") return Suite::Structure;
    if (text == "all") return Suite::All;
    throw std::invalid_argument("unknown suite \"" + std::string(text) +
                                "\" (theorem, orthogonality, formulas, structure, all)");
}

std::vector<CheckResult> run_suite(Suite suite, int n_min, int n_max, const TableSource& tables,
                                   const SuiteOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result) {
    if (n_min < 1 || n_min > n_max) {
        throw std::invalid_argument("invalid range n-min=" + std::to_string(n_min) +
                                    ", n-max=" + std::to_string(n_max));
    }
    auto wants = [&](Suite s) { return suite == Suite::All || suite == s; };
    std::vector<CheckResult> results;
    auto run = [&](auto&& check) {
        auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r = fail("check raised", e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    };

    for (int n = n_min; n <= n_max; ++n) {
        const CharTable table = tables(n);
        if (wants(Suite::Theorem)) {
            run([&] { return check_pruning_consistency(table); });
            if (n >= 4) run([&] { return check_k_equals_two(table); });
            if (n > 6) run([&] { return check_main_theorem(table); });
        }
        if (wants(Suite::Orthogonality)) {
            run([&] { return check_column_orthogonality(table); });
            run([&] { return check_row_orthogonality(table); });
            run([&] { return check_hook_vanishing(table); });
        }
        if (wants(Suite::Formulas)) {
            run([&] { return check_near_hook_formulas(table); });
            run([&] { return check_recursions(table); });
        }
        if (wants(Suite::Structure)) {
            if (n <= options.brute_force.limit) {
                run([&] { return check_structure_oracle(table, options.structure_samples, options.brute_force); });
            }
            if (n <= 8) run([&] { return check_structure_symmetry_parity(table); });
            run([&] { return check_merge_lemma(table); });
            if (n > 6) run([&] { return check_predicted_coefficients(table); });
        }
    }
    return results;
}

}  // namespace symchar
