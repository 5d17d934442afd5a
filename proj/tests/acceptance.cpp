// Acceptance gate: one line per criterion, exit status 0 iff all pass.
// Every comparison is exact; the time limits are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "symchar/class_algebra.hpp"
#include "symchar/formulas.hpp"
#include "symchar/mn.hpp"
#include "symchar/table_io.hpp"
#include "symchar/vanishing.hpp"
#include "symchar/verify.hpp"

using namespace symchar;

namespace {

constexpr double kTheoremSeconds = 120.0;
constexpr double kFormulaSeconds = 60.0;
constexpr double kStructureSeconds = 300.0;
constexpr double kTable14Seconds = 60.0;
constexpr int kStructureSamples = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

MnEngine g_engine;
std::map<int, CharTable> g_tables;

const CharTable& table(int n) {
    auto it = g_tables.find(n);
    if (it == g_tables.end()) it = g_tables.emplace(n, character_table(n, {1, &g_engine})).first;
    return it->second;
}

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(const CheckResult& r) {
        if (!r.passed && passed) {
            passed = false;
            detail = r.name + ": " + r.detail;
        }
    }
    void require(bool cond, const std::string& what) {
        if (!cond && passed) {
            passed = false;
            detail = what;
        }
    }
};

int g_failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
    auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++g_failures;
    std::printf("[%s] %2d. %s  (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(),
                seconds_since(start), o.passed ? "" : "\n        ", o.detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion(1, "covering pairs are exactly {(n),(n-1,1)} for 7 <= n <= 12", [] {
        Outcome o;
        auto start = Clock::now();
        for (int n = 7; n <= 12; ++n) {
            const CharTable& t = table(n);
            auto report = find_covering_pairs(t, {.use_pruning = false});
            o.require(report.pairs.size() == 1 &&
                          report.pairs[0] == ClassPair{Partition::single_row(n), Partition::hook(n, 1)},
                      "n=" + std::to_string(n) + ": " + std::to_string(report.pairs.size()) + " covering pairs");
            o.require(report.matches_theorem == true, "matches_theorem false at n=" + std::to_string(n));
            o.require(check_main_theorem(t));
        }
        o.require(seconds_since(start) < kTheoremSeconds, "exceeded time limit");
        return o;
    });

    criterion(2, "k(S_n) = 2 for 7 <= n <= 12 (no single class covers, a pair does)", [] {
        Outcome o;
        for (int n = 7; n <= 12; ++n) o.require(check_k_equals_two(table(n)));
        return o;
    });

    criterion(3, "row and column orthogonality exact for 1 <= n <= 12; z_(2,1) = 2", [] {
        Outcome o;
        for (int n = 1; n <= 12; ++n) {
            o.require(check_column_orthogonality(table(n)));
            o.require(check_row_orthogonality(table(n)));
        }
        const CharTable& t3 = table(3);
        BigInt squares = 0;
        for (const auto& lambda : t3.order()) squares += t3.value(lambda, {2, 1}) * t3.value(lambda, {2, 1});
        o.require(squares == 2 && centralizer_order({2, 1}) == 2, "sum of squares at (2,1) is " + squares.get_str());
        return o;
    });

    criterion(4, "non-hooks vanish on (n); hooks other than (n),(1^n) vanish on (n-1,1); 7 <= n <= 14", [] {
        Outcome o;
        for (int n = 7; n <= 14; ++n) o.require(check_hook_vanishing(table(n)));
        return o;
    });

    criterion(5, "eight near-hook closed forms equal MN on every class, 9 <= n <= 14", [] {
        Outcome o;
        auto start = Clock::now();
        for (int n = 9; n <= 14; ++n) o.require(check_near_hook_formulas(table(n)));
        o.require(seconds_since(start) < kFormulaSeconds, "exceeded time limit");
        return o;
    });

    criterion(6, "hook and two-row recursions equal MN for all valid k and classes, n <= 13", [] {
        Outcome o;
        for (int n = 1; n <= 13; ++n) o.require(check_recursions(table(n)));
        return o;
    });

    criterion(7, "character-sum structure constants equal enumeration (all n <= 6; 200 samples at n = 7, 8)", [] {
        Outcome o;
        auto start = Clock::now();
        for (int n = 1; n <= 8; ++n) {
            o.require(check_structure_oracle(table(n), kStructureSamples, {.limit = 8, .workers = 1}));
        }
        o.require(seconds_since(start) < kStructureSeconds, "exceeded time limit");
        return o;
    });

    criterion(8, "on covering pairs, a = 2|C_mu||C_nu|/n! for odd gamma and 0 for even, 7 <= n <= 10", [] {
        Outcome o;
        for (int n = 7; n <= 10; ++n) {
            const CharTable& t = table(n);
            auto report = find_covering_pairs(t, {.use_pruning = false});
            o.require(!report.pairs.empty(), "no covering pair at n=" + std::to_string(n));
            for (const auto& pair : report.pairs) {
                for (const auto& gamma : t.order()) {
                    BigInt expected = sign_value(gamma) < 0
                                          ? BigInt(2 * class_size(pair.first) * class_size(pair.second) /
                                                   factorial(n))
                                          : BigInt(0);
                    BigInt actual = structure_constant(pair.first, pair.second, gamma, t);
                    auto predicted = predicted_coefficient(pair.first, pair.second, gamma, t);
                    o.require(actual == expected && predicted && *predicted == expected,
                              "n=" + std::to_string(n) + " gamma=(" + format_partition(gamma) + ")");
                }
            }
            o.require(check_predicted_coefficients(t));
        }
        return o;
    });

    criterion(9, "pairs with a positive transposition coefficient are merge-related, n <= 9", [] {
        Outcome o;
        for (int n = 2; n <= 9; ++n) o.require(check_merge_lemma(table(n)));
        return o;
    });

    criterion(10, "character_table(14) cold single-threaded under 60 s; identical across worker counts", [] {
        Outcome o;
        auto start = Clock::now();
        CharTable cold = character_table(14, {1, nullptr});
        double elapsed = seconds_since(start);
        o.require(cold.dim() == 135, "expected 135 partitions of 14");
        o.require(elapsed < kTable14Seconds, "took " + std::to_string(elapsed) + " s");
        const std::string bytes = table_to_json(cold);
        for (unsigned w : {2u, 4u, 7u}) {
            o.require(table_to_json(character_table(14, {w, nullptr})) == bytes,
                      "differs with " + std::to_string(w) + " workers");
        }
        o.require(cold == table(14), "cold table differs from the memo-shared build");
        return o;
    });

    std::printf("%d of 10 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
