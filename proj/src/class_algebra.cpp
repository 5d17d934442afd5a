#include "symchar/class_algebra.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

#include "symchar/vanishing.hpp"

namespace symchar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("Permutation: images are not a bijection");
        }
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::canonical_representative(const Partition& cycle_type) {
    std::vector<int> images(static_cast<std::size_t>(cycle_type.size()));
    int start = 0;
    for (int len : cycle_type.parts()) {
        for (int k = 0; k < len; ++k) {
            images[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
        }
        start += len;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        out[i] = images_[static_cast<std::size_t>(other.images_[i])];
    }
    return Permutation(std::move(out));
}

namespace {

// Sorted cycle lengths of a permutation given by `img`, written into `out`.
void cycle_lengths(const std::vector<int>& img, std::vector<char>& seen, std::vector<int>& out) {
    const std::size_t n = img.size();
    std::fill(seen.begin(), seen.end(), 0);
    out.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img[j])) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
}

void require_same_size(const Partition& a, const Partition& b, const Partition& c) {
    if (a.size() != b.size() || a.size() != c.size()) {
        throw std::invalid_argument("structure constant: partitions of different sizes (" +
                                    format_partition(a) + "), (" + format_partition(b) + "), (" +
                                    format_partition(c) + ")");
    }
}

}  // namespace

Partition Permutation::cycle_type() const {
    std::vector<char> seen(images_.size());
    std::vector<int> lens;
    cycle_lengths(images_, seen, lens);
    return Partition(std::move(lens));
}

BigInt structure_constant(const Partition& mu, const Partition& nu, const Partition& gamma,
                          const CharTable& table) {
    require_same_size(mu, nu, gamma);
    if (mu.size() != table.n()) {
        throw std::invalid_argument("structure_constant: table is for n=" + std::to_string(table.n()) +
                                    ", partitions have n=" + std::to_string(mu.size()));
    }
    const std::size_t a = table.index_of(mu);
    const std::size_t b = table.index_of(nu);
    const std::size_t c = table.index_of(gamma);
    const std::size_t id = table.dim() - 1;  // (1^n) is last

    mpq_class sum = 0;
    for (std::size_t r = 0; r < table.dim(); ++r) {
        const BigInt num = table.at(r, a) * table.at(r, b) * table.at(r, c);
        if (num == 0) continue;
        sum += mpq_class(num, table.at(r, id));
    }
    sum.canonicalize();
    mpq_class value = sum * class_size(mu) * class_size(nu) / factorial(mu.size());
    value.canonicalize();
    if (value.get_den() != 1 || value.get_num() < 0) {
        throw std::logic_error("structure_constant: character sum gave " + value.get_str() +
                               " for (" + format_partition(mu) + "), (" + format_partition(nu) +
                               "), (" + format_partition(gamma) + ")");
    }
    return value.get_num();
}

BigInt structure_constant_bruteforce(const Partition& mu, const Partition& nu,
                                     const Partition& gamma, const BruteForceOptions& options) {
    require_same_size(mu, nu, gamma);
    return structure_constant_bruteforce(mu, nu, Permutation::canonical_representative(gamma), options);
}

BigInt structure_constant_bruteforce(const Partition& mu, const Partition& nu,
                                     const Permutation& g, const BruteForceOptions& options) {
    const int n = g.size();
    if (mu.size() != n || nu.size() != n) {
        throw std::invalid_argument("structure_constant_bruteforce: size mismatch");
    }
    if (n > options.limit) {
        throw std::invalid_argument("structure_constant_bruteforce: n=" + std::to_string(n) +
                                    " exceeds the brute-force limit " + std::to_string(options.limit));
    }
    if (n == 0) return 1;

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(n)));
    std::vector<long long> counts(workers, 0);
    std::vector<std::exception_ptr> errors(workers);

    // Worker w owns the permutations whose image of 0 is congruent to w.
    auto shard = [&](unsigned w) {
        std::vector<int> x(static_cast<std::size_t>(n));
        std::vector<int> x_inv(static_cast<std::size_t>(n));
        std::vector<int> y(static_cast<std::size_t>(n));
        std::vector<char> seen(static_cast<std::size_t>(n));
        std::vector<int> lens;
        long long count = 0;
        for (int first = static_cast<int>(w); first < n; first += static_cast<int>(workers)) {
            x[0] = first;
            std::size_t pos = 1;
            for (int v = 0; v < n; ++v) {
                if (v != first) x[pos++] = v;
            }
            do {
                cycle_lengths(x, seen, lens);
                if (lens != mu.parts()) continue;
                for (int i = 0; i < n; ++i) x_inv[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] = i;
                for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = x_inv[static_cast<std::size_t>(g(i))];
                cycle_lengths(y, seen, lens);
                if (lens == nu.parts()) ++count;
            } while (std::next_permutation(x.begin() + 1, x.end()));
        }
        counts[w] = count;
    };

    if (workers == 1) {
        shard(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    shard(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    BigInt total = 0;
    for (long long c : counts) total += static_cast<long>(c);
    return total;
}

std::optional<BigInt> predicted_coefficient(const Partition& mu, const Partition& nu,
                                            const Partition& gamma, const CharTable& table) {
    require_same_size(mu, nu, gamma);
    if (mu.size() != table.n()) {
        throw std::invalid_argument("predicted_coefficient: table is for n=" + std::to_string(table.n()));
    }
    if (!covers_all_nonlinear(mu, nu, table)) return std::nullopt;
    const int linear_sum = 1 + sign_value(mu) * sign_value(nu) * sign_value(gamma);
    if (linear_sum == 0) return BigInt(0);
    BigInt num = linear_sum * class_size(mu) * class_size(nu);
    BigInt q;
    BigInt r;
    BigInt den = factorial(mu.size());
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) {
        throw std::logic_error("predicted_coefficient: " + num.get_str() + " / " + den.get_str() +
                               " is not an integer");
    }
    return q;
}

bool merge_lemma_check(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) {
        throw std::invalid_argument("merge_lemma_check: partitions of different sizes");
    }
    if (mu.length() != nu.length() + 1) return false;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        for (std::size_t j = i + 1; j < mu.length(); ++j) {
            if (merge_parts(mu, i, j) == nu) return true;
        }
    }
    return false;
}

}  // namespace symchar
