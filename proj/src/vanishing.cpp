#include "symchar/vanishing.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "symchar/class_algebra.hpp"

namespace symchar {

std::vector<Partition> vanishing_set(const Partition& lambda, const CharTable& table) {
    const std::size_t r = table.index_of(lambda);
    std::vector<Partition> out;
    for (std::size_t c = 0; c < table.dim(); ++c) {
        if (table.at(r, c) == 0) out.push_back(table.order()[c]);
    }
    return out;
}

std::vector<std::size_t> nonlinear_rows(const CharTable& table) {
    const std::size_t id = table.dim() - 1;
    const Partition trivial = Partition::single_row(table.n());
    const Partition sign = Partition::single_column(table.n());
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < table.dim(); ++r) {
        const Partition& lambda = table.order()[r];
        bool by_degree = table.at(r, id) == 1;
        bool by_shape = lambda == trivial || lambda == sign;
        if (by_degree != by_shape) {
            throw std::logic_error("linear character tests disagree at (" + format_partition(lambda) + ")");
        }
        if (!by_degree) rows.push_back(r);
    }
    return rows;
}

namespace {

bool covers(std::size_t a, std::size_t b, const CharTable& table, const std::vector<std::size_t>& rows) {
    for (std::size_t r : rows) {
        if (table.at(r, a) != 0 && table.at(r, b) != 0) return false;
    }
    return true;
}

}  // namespace

bool covers_all_nonlinear(const Partition& mu, const Partition& nu, const CharTable& table) {
    return covers(table.index_of(mu), table.index_of(nu), table, nonlinear_rows(table));
}

CoveringPairReport find_covering_pairs(const CharTable& table, const SearchOptions& options) {
    const int n = table.n();
    const std::size_t dim = table.dim();
    const auto& order = table.order();
    const std::vector<std::size_t> rows = nonlinear_rows(table);
    const bool prune = options.use_pruning && n > 6;

    CoveringPairReport report;
    report.n = n;
    report.vacuous = rows.empty();

    // Row i of the upper triangle is handled by worker i % workers.
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(dim)));
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(workers);
    std::vector<PruningStats> stats(workers);
    std::vector<std::exception_ptr> errors(workers);

    auto scan = [&](unsigned w) {
        for (std::size_t i = w; i < dim; i += workers) {
            for (std::size_t j = i; j < dim; ++j) {
                ++stats[w].examined;
                if (prune) {
                    if (sign_value(order[i]) == sign_value(order[j])) {
                        ++stats[w].parity_pruned;
                        continue;
                    }
                    if (!merge_lemma_check(order[i], order[j]) && !merge_lemma_check(order[j], order[i])) {
                        ++stats[w].merge_pruned;
                        continue;
                    }
                }
                ++stats[w].table_checked;
                if (covers(i, j, table, rows)) found[w].emplace_back(i, j);
            }
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    scan(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (unsigned w = 0; w < workers; ++w) {
        all.insert(all.end(), found[w].begin(), found[w].end());
        report.pruning_stats.examined += stats[w].examined;
        report.pruning_stats.parity_pruned += stats[w].parity_pruned;
        report.pruning_stats.merge_pruned += stats[w].merge_pruned;
        report.pruning_stats.table_checked += stats[w].table_checked;
    }
    std::sort(all.begin(), all.end());
    bool singleton = false;
    for (auto [i, j] : all) {
        report.pairs.push_back({order[i], order[j]});
        if (i == j) singleton = true;
    }
    if (singleton) {
        report.k_value = 1;
    } else if (!all.empty()) {
        report.k_value = 2;
    }
    if (n > 6) {
        report.matches_theorem =
            report.pairs.size() == 1 &&
            report.pairs[0] == ClassPair{Partition::single_row(n), Partition::hook(n, 1)};
    }
    return report;
}

int k_of_Sn(const CharTable& table) {
    const int n = table.n();
    if (n < 3) throw std::invalid_argument("k_of_Sn: S_n has no non-linear character for n < 3");
    const std::vector<std::size_t> rows = nonlinear_rows(table);
    for (std::size_t i = 0; i < table.dim(); ++i) {
        if (covers(i, i, table, rows)) return 1;
    }
    for (std::size_t i = 0; i < table.dim(); ++i) {
        for (std::size_t j = i + 1; j < table.dim(); ++j) {
            if (covers(i, j, table, rows)) return 2;
        }
    }
    throw std::logic_error("k_of_Sn: no pair of classes covers the non-linear characters of S_" +
                           std::to_string(n));
}

std::string TheoremVerdict::describe() const {
    if (holds) return "covering pairs are exactly {(n),(n-1,1)}";
    std::string out;
    for (const auto& p : extra) {
        out += "extra pair {(" + format_partition(p.first) + "),(" + format_partition(p.second) + ")}; ";
    }
    for (const auto& p : missing) {
        out += "missing pair {(" + format_partition(p.first) + "),(" + format_partition(p.second) + ")}; ";
    }
    return out;
}

TheoremVerdict verify_main_theorem(const CharTable& table, const SearchOptions& options) {
    const int n = table.n();
    if (n <= 6) {
        throw std::invalid_argument("verify_main_theorem: n=" + std::to_string(n) +
                                    " is outside the theorem range n > 6");
    }
    const ClassPair expected{Partition::single_row(n), Partition::hook(n, 1)};
    CoveringPairReport report = find_covering_pairs(table, options);
    TheoremVerdict verdict;
    bool seen = false;
    for (const auto& p : report.pairs) {
        if (p == expected) {
            seen = true;
        } else {
            verdict.extra.push_back(p);
        }
    }
    if (!seen) verdict.missing.push_back(expected);
    verdict.holds = verdict.extra.empty() && verdict.missing.empty();
    return verdict;
}

}  // namespace symchar
