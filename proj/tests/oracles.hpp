// Test-only reference computations. Nothing here calls into the MN engine,
// the closed forms or the character-sum formula.
#ifndef SYMCHAR_TESTS_ORACLES_HPP
#define SYMCHAR_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "symchar/partition.hpp"

namespace oracle {

/// p(n) by Euler's pentagonal-number recurrence.
inline long partition_count(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            long sign = (k % 2 == 1) ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(n)];
}

/// Cycle type of a permutation in image form.
inline std::vector<int> cycle_type(const std::vector<int>& img) {
    std::vector<char> seen(img.size(), 0);
    std::vector<int> out;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img[j])) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Number of permutations of S_n of each cycle type, by enumeration.
inline std::map<std::vector<int>, long> class_counts(int n) {
    std::vector<int> x(static_cast<std::size_t>(n));
    std::iota(x.begin(), x.end(), 0);
    std::map<std::vector<int>, long> counts;
    do {
        ++counts[cycle_type(x)];
    } while (std::next_permutation(x.begin(), x.end()));
    return counts;
}

/// Degree by the hook-length formula n! / prod h(b).
inline symchar::BigInt hook_length_degree(const symchar::Partition& p) {
    symchar::BigInt num = symchar::factorial(p.size());
    symchar::BigInt den = 1;
    const symchar::Partition c = symchar::conjugate(p);
    for (std::size_t r = 0; r < p.length(); ++r) {
        for (int col = 0; col < p[r]; ++col) {
            int arm = p[r] - col - 1;
            int leg = c[static_cast<std::size_t>(col)] - static_cast<int>(r) - 1;
            den *= arm + leg + 1;
        }
    }
    return num / den;
}

/// Frobenius formula: chi_lambda(mu) is the coefficient of x^{lambda+delta}
/// in a_delta * p_mu over l = len(lambda) variables.
inline long frobenius_character(const symchar::Partition& lambda, const symchar::Partition& mu) {
    const std::size_t l = lambda.length();
    if (l == 0) return 1;
    std::vector<int> target(l);
    for (std::size_t i = 0; i < l; ++i) target[i] = lambda[i] + static_cast<int>(l - 1 - i);

    // Ways to hand each part of mu to one variable so that variable i gets alpha_i.
    std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
    std::function<long(std::size_t, std::vector<int>&)> ways = [&](std::size_t k, std::vector<int>& alpha) {
        if (k == mu.length()) {
            return std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; }) ? 1L : 0L;
        }
        auto key = std::make_pair(k, alpha);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long total = 0;
        for (std::size_t i = 0; i < l; ++i) {
            if (alpha[i] < mu[k]) continue;
            alpha[i] -= mu[k];
            total += ways(k + 1, alpha);
            alpha[i] += mu[k];
        }
        memo.emplace(std::move(key), total);
        return total;
    };

    std::vector<std::size_t> sigma(l);
    std::iota(sigma.begin(), sigma.end(), 0);
    long chi = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i + 1; j < l; ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        std::vector<int> alpha(l);
        bool ok = true;
        for (std::size_t i = 0; i < l; ++i) {
            alpha[i] = target[i] - static_cast<int>(l - 1 - sigma[i]);
            if (alpha[i] < 0) ok = false;
        }
        if (!ok) continue;
        long w = ways(0, alpha);
        chi += (inversions % 2 == 0) ? w : -w;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return chi;
}

/// Removes the rim hook of cell (row, col) by walking the border: rows
/// row..row+leg-1 take the next row's length minus one, row+leg becomes col.
inline symchar::Partition rim_hook_complement(const symchar::Partition& p, int row, int col, int& leg) {
    const symchar::Partition c = symchar::conjugate(p);
    leg = c[static_cast<std::size_t>(col)] - row - 1;
    std::vector<int> parts = p.parts();
    for (int r = row; r < row + leg; ++r) {
        parts[static_cast<std::size_t>(r)] = p[static_cast<std::size_t>(r) + 1] - 1;
    }
    parts[static_cast<std::size_t>(row + leg)] = col;
    std::vector<int> positive;
    for (int x : parts)
        if (x > 0) positive.push_back(x);
    return symchar::Partition(std::move(positive));
}

}  // namespace oracle

#endif
