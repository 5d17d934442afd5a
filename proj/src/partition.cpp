#include "symchar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace symchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::single_row(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    return n == 0 ? Partition() : Partition({n});
}

Partition Partition::single_column(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::hook(int n, int k) {
    if (n < 1 || k < 0 || k >= n) {
        throw std::invalid_argument("hook (n-k,1^k) needs 0 <= k < n");
    }
    std::vector<int> parts(static_cast<std::size_t>(k) + 1, 1);
    parts[0] = n - k;
    return Partition(std::move(parts));
}

MultiplicityVector::MultiplicityVector(std::map<int, int> counts) {
    for (auto [part, m] : counts) {
        if (part <= 0 || m < 0) {
            throw std::invalid_argument("invalid multiplicity entry");
        }
        if (m > 0) counts_.emplace(part, m);
    }
}

int MultiplicityVector::operator[](int part) const noexcept {
    auto it = counts_.find(part);
    return it == counts_.end() ? 0 : it->second;
}

int MultiplicityVector::total() const noexcept {
    int t = 0;
    for (auto [part, m] : counts_) t += part * m;
    return t;
}

Partition MultiplicityVector::to_partition() const {
    std::vector<int> parts;
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Standard successor in reverse-lexicographic order: find the last part
    // > 1, decrement it, and redistribute the tail greedily.
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rem;
        }
        if (a.empty()) break;
        int k = --a.back();
        ++rem;
        while (rem > k) {
            a.push_back(k);
            rem -= k;
        }
        if (rem > 0) a.push_back(rem);
    }
    return out;
}

MultiplicityVector multiplicities(const Partition& p) {
    std::map<int, int> counts;
    for (int x : p.parts()) ++counts[x];
    return MultiplicityVector(std::move(counts));
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

BigInt centralizer_order(const Partition& p) {
    BigInt z = 1;
    const MultiplicityVector mult = multiplicities(p);
    for (auto [part, m] : mult.counts()) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part),
                      static_cast<unsigned long>(m));
        z *= power * factorial(m);
    }
    return z;
}

BigInt class_size(const Partition& p) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), factorial(p.size()).get_mpz_t(),
                 centralizer_order(p).get_mpz_t());
    return q;
}

DominanceResult dominance_compare(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("dominance_compare: partitions of different sizes");
    }
    bool p_ahead = false;
    bool q_ahead = false;
    int sp = 0;
    int sq = 0;
    std::size_t len = std::max(p.length(), q.length());
    for (std::size_t i = 0; i < len; ++i) {
        sp += p.part_or_zero(i);
        sq += q.part_or_zero(i);
        if (sp > sq) p_ahead = true;
        if (sq > sp) q_ahead = true;
    }
    if (p_ahead && q_ahead) return DominanceResult::Incomparable;
    if (p_ahead) return DominanceResult::Greater;
    if (q_ahead) return DominanceResult::Less;
    return DominanceResult::Equal;
}

bool is_hook(const Partition& p) { return p.part_or_zero(1) <= 1; }

Partition merge_parts(const Partition& p, std::size_t i, std::size_t j) {
    if (i == j || i >= p.length() || j >= p.length()) {
        throw std::invalid_argument("merge_parts: need two distinct valid part indices");
    }
    std::vector<int> parts;
    parts.reserve(p.length() - 1);
    for (std::size_t k = 0; k < p.length(); ++k) {
        if (k != i && k != j) parts.push_back(p[k]);
    }
    parts.push_back(p[i] + p[j]);
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
    for (int x : p.parts()) {
        for (int c = 0; c < x; ++c) ++cols[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(cols));
}

int sign_of(const Partition& p) {
    return ((p.size() - static_cast<int>(p.length())) % 2 == 0) ? 1 : -1;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_positive(std::string_view tok, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0) {
        throw std::invalid_argument("invalid partition \"" + std::string(whole) +
                                    "\": bad part \"" + std::string(tok) + "\"");
    }
    return v;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::string_view rest = trim(text);
    if (rest.empty()) {
        throw std::invalid_argument("empty partition text");
    }
    for (;;) {
        auto comma = rest.find(',');
        std::string_view tok = trim(rest.substr(0, comma));
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            int base = parse_positive(trim(tok.substr(0, caret)), text);
            int count = parse_positive(trim(tok.substr(caret + 1)), text);
            if (base != 1) {
                throw std::invalid_argument("invalid partition \"" + std::string(text) +
                                            "\": only 1^k exponent shorthand is accepted");
            }
            parts.insert(parts.end(), static_cast<std::size_t>(count), 1);
        } else {
            parts.push_back(parse_positive(tok, text));
        }
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p, char sep) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += sep;
        out += std::to_string(p[i]);
    }
    return out;
}

std::string to_string(DominanceResult r) {
    switch (r) {
        case DominanceResult::Less: return "Less";
        case DominanceResult::Greater: return "Greater";
        case DominanceResult::Equal: return "Equal";
        case DominanceResult::Incomparable: return "Incomparable";
    }
    return "?";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace symchar
