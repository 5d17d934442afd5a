#include "symchar/mn.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace symchar {

int hook_length(const Partition& p, int row, int col) {
    if (row < 0 || col < 0 || static_cast<std::size_t>(row) >= p.length() ||
        col >= p[static_cast<std::size_t>(row)]) {
        throw std::out_of_range("hook_length: cell (" + std::to_string(row) + "," +
                                std::to_string(col) + ") is outside the diagram");
    }
    int arm = p[static_cast<std::size_t>(row)] - col - 1;
    int leg = 0;
    for (std::size_t r = static_cast<std::size_t>(row) + 1; r < p.length() && p[r] > col; ++r) {
        ++leg;
    }
    return arm + leg + 1;
}

std::vector<RimHookRemoval> border_strip_removals(const Partition& p, int length) {
    if (length < 1) throw std::invalid_argument("border_strip_removals: length must be >= 1");
    // Beta-set (abacus) form: bead i sits at p_i + (l-1-i). A rim hook of
    // size r is a bead sliding r places down onto an empty position; its
    // height is one more than the number of beads it jumps over.
    const std::size_t l = p.length();
    std::vector<int> beads(l);
    for (std::size_t i = 0; i < l; ++i) beads[i] = p[i] + static_cast<int>(l - 1 - i);

    std::vector<RimHookRemoval> out;
    for (std::size_t i = 0; i < l; ++i) {
        int target = beads[i] - length;
        if (target < 0) continue;
        if (std::binary_search(beads.begin(), beads.end(), target, std::greater<>())) continue;
        int jumped = 0;
        for (std::size_t j = i + 1; j < l && beads[j] > target; ++j) ++jumped;

        std::vector<int> moved = beads;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts;
        parts.reserve(l);
        for (std::size_t j = 0; j < l; ++j) {
            int part = moved[j] - static_cast<int>(l - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        out.push_back({Partition(std::move(parts)), jumped + 1, jumped % 2 == 0 ? 1 : -1});
    }
    return out;
}

namespace {

void append_key(std::string& key, const Partition& p) {
    for (int x : p.parts()) {
        key.push_back(static_cast<char>(x & 0xff));
        key.push_back(static_cast<char>((x >> 8) & 0xff));
    }
}

std::string memo_key(const Partition& lambda, const Partition& mu) {
    std::string key;
    key.reserve(2 * (lambda.length() + mu.length()) + 2);
    append_key(key, lambda);
    key.push_back('\0');
    key.push_back('\0');
    append_key(key, mu);
    return key;
}

}  // namespace

BigInt MnEngine::character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw std::invalid_argument("mn_char: |lambda| = " + std::to_string(lambda.size()) +
                                    " but |mu| = " + std::to_string(mu.size()));
    }
    return evaluate(lambda, mu);
}

BigInt MnEngine::evaluate(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return 1;
    if (mu.length() == 1) {
        // A single strip of full size exists only for hooks.
        if (!is_hook(lambda)) return 0;
        return (lambda.length() - 1) % 2 == 0 ? 1 : -1;
    }
    std::string key = memo_key(lambda, mu);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    BigInt total = 0;
    for (const auto& removal : border_strip_removals(lambda, mu[0])) {
        BigInt sub = evaluate(removal.remaining, rest);
        if (removal.sign > 0) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    {
        std::unique_lock lock(mutex_);
        memo_.insert_or_assign(std::move(key), total);
    }
    return total;
}

std::size_t MnEngine::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void MnEngine::clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
}

MnEngine& shared_engine() {
    static MnEngine engine;
    return engine;
}

BigInt mn_char(const Partition& lambda, const Partition& mu) {
    return shared_engine().character(lambda, mu);
}

BigInt degree(const Partition& lambda) {
    return mn_char(lambda, Partition::single_column(lambda.size()));
}

int sign_value(const Partition& mu) { return sign_of(mu); }

CharTable::CharTable(int n, std::vector<Partition> order, std::vector<BigInt> values)
    : n_(n), order_(std::move(order)), values_(std::move(values)) {
    if (values_.size() != order_.size() * order_.size()) {
        throw std::invalid_argument("CharTable: value count does not match order size");
    }
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (order_[i].size() != n_) {
            throw std::invalid_argument("CharTable: order entry is not a partition of n");
        }
        index_.emplace(order_[i], i);
    }
}

std::size_t CharTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        throw std::invalid_argument("partition (" + format_partition(p) +
                                    ") is not a partition of " + std::to_string(n_));
    }
    return it->second;
}

CharTable character_table(int n, const TableOptions& options) {
    if (n < 1) throw std::invalid_argument("character_table: n must be >= 1");
    std::vector<Partition> order = partitions_of(n);
    const std::size_t dim = order.size();
    std::vector<BigInt> values(dim * dim);

    MnEngine local;
    MnEngine& engine = options.engine ? *options.engine : local;
    unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(dim)));

    auto fill_rows = [&](unsigned first) {
        for (std::size_t r = first; r < dim; r += workers) {
            for (std::size_t c = 0; c < dim; ++c) {
                values[r * dim + c] = engine.character(order[r], order[c]);
            }
        }
    };
    if (workers == 1) {
        fill_rows(0);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        fill_rows(w);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    return CharTable(n, std::move(order), std::move(values));
}

}  // namespace symchar
