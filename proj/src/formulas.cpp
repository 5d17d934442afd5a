#include "symchar/formulas.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace symchar {

namespace {

struct ShapeInfo {
    NearHookShape shape;
    std::string_view name;
    std::vector<int> tail;  // parts below the first row
};

const std::vector<ShapeInfo>& shape_infos() {
    static const std::vector<ShapeInfo> infos = {
        {NearHookShape::R1, "R1", {1}},
        {NearHookShape::R2, "R2", {2}},
        {NearHookShape::R11, "R11", {1, 1}},
        {NearHookShape::R3, "R3", {3}},
        {NearHookShape::R21, "R21", {2, 1}},
        {NearHookShape::R111, "R111", {1, 1, 1}},
        {NearHookShape::R211, "R211", {2, 1, 1}},
        {NearHookShape::R1111, "R1111", {1, 1, 1, 1}},
    };
    return infos;
}

const ShapeInfo& info(NearHookShape s) { return shape_infos()[static_cast<std::size_t>(s)]; }

int tail_size(const ShapeInfo& i) {
    int t = 0;
    for (int x : i.tail) t += x;
    return t;
}

BigInt exact_div(const BigInt& num, long den) {
    BigInt q;
    BigInt r;
    BigInt d = den;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    if (r != 0) {
        throw std::logic_error("near_hook_value: inexact division of " + num.get_str() + " by " +
                               std::to_string(den));
    }
    return q;
}

}  // namespace

std::string_view shape_name(NearHookShape s) { return info(s).name; }

int shape_min_n(NearHookShape s) {
    const auto& i = info(s);
    return tail_size(i) + i.tail.front();
}

Partition shape_partition(NearHookShape s, int n) {
    const auto& i = info(s);
    if (n < shape_min_n(s)) {
        throw std::invalid_argument("shape " + std::string(i.name) + " needs n >= " +
                                    std::to_string(shape_min_n(s)) + ", got n=" + std::to_string(n));
    }
    std::vector<int> parts{n - tail_size(i)};
    parts.insert(parts.end(), i.tail.begin(), i.tail.end());
    return Partition(std::move(parts));
}

std::optional<NearHookShape> shape_of(const Partition& lambda) {
    if (lambda.empty()) return std::nullopt;
    std::vector<int> tail(lambda.parts().begin() + 1, lambda.parts().end());
    for (const auto& i : shape_infos()) {
        if (i.tail == tail) return i.shape;
    }
    return std::nullopt;
}

BigInt near_hook_value(NearHookShape shape, const Partition& mu) {
    const int n = mu.size();
    if (n < shape_min_n(shape)) {
        throw std::invalid_argument("shape " + std::string(shape_name(shape)) + " needs n >= " +
                                    std::to_string(shape_min_n(shape)) + ", got n=" +
                                    std::to_string(n));
    }
    const MultiplicityVector m = multiplicities(mu);
    const BigInt m1 = m[1];
    const BigInt m2 = m[2];
    const BigInt m3 = m[3];
    const BigInt m4 = m[4];

    switch (shape) {
        case NearHookShape::R1:
            return m1 - 1;
        case NearHookShape::R2:
            return exact_div(m1 * (m1 - 3), 2) + m2;
        case NearHookShape::R11:
            return exact_div((m1 - 1) * (m1 - 2), 2) - m2;
        case NearHookShape::R3:
            return exact_div(m1 * (m1 - 1) * (m1 - 5), 6) + m2 * (m1 - 1) + m3;
        case NearHookShape::R21:
            return exact_div(m1 * (m1 - 2) * (m1 - 4), 3) - m3;
        case NearHookShape::R111:
            return exact_div((m1 - 1) * (m1 - 2) * (m1 - 3), 6) - (m1 - 1) * m2 + m3;
        case NearHookShape::R211:
            return exact_div(m1 * (m1 - 2) * (m1 - 3) * (m1 - 5), 8) -
                   exact_div(m2 * m1 * (m1 - 3), 2) - exact_div(m2 * (m2 - 1), 2) + m4;
        case NearHookShape::R1111:
            return exact_div((m1 - 1) * (m1 - 2) * (m1 - 3) * (m1 - 4), 24) -
                   exact_div((m1 - 1) * (m1 - 2) * m2, 2) + (m1 - 1) * m3 +
                   exact_div(m2 * (m2 - 1), 2) - m4;
    }
    throw std::logic_error("near_hook_value: unknown shape");
}

BigInt induced_value(int k, InnerCharacter inner, const Partition& mu) {
    const int n = mu.size();
    if (k < 1 || k > n) {
        throw std::invalid_argument("induced_value: need 1 <= k <= n, got k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n));
    }
    const MultiplicityVector counts = multiplicities(mu);
    const std::vector<std::pair<int, int>> mult(counts.counts().begin(), counts.counts().end());
    // Choose c_i <= m_i parts of each size i with sum i*c_i = k.
    BigInt total = 0;
    auto walk = [&](auto&& self, std::size_t idx, int remaining, int chosen_parts,
                    const BigInt& weight) -> void {
        if (remaining == 0) {
            int s = 1;
            if (inner == InnerCharacter::Sign && (k - chosen_parts) % 2 != 0) s = -1;
            total += s * weight;
            return;
        }
        if (idx == mult.size()) return;
        auto [part, m] = mult[idx];
        for (int c = 0; c <= m && c * part <= remaining; ++c) {
            self(self, idx + 1, remaining - c * part, chosen_parts + c, weight * binomial(m, c));
        }
    };
    walk(walk, 0, k, 0, BigInt(1));
    return total;
}

BigInt hook_char_recursive(int k, const Partition& mu) {
    const int n = mu.size();
    if (k < 0 || k > n - 1) {
        throw std::invalid_argument("hook_char_recursive: need 0 <= k <= n-1, got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n));
    }
    BigInt value = 1;
    for (int j = 1; j <= k; ++j) {
        value = induced_value(j, InnerCharacter::Sign, mu) - value;
    }
    return value;
}

BigInt two_row_char_recursive(int k, const Partition& mu) {
    const int n = mu.size();
    if (k < 0 || 2 * k > n) {
        throw std::invalid_argument("two_row_char_recursive: need 0 <= k <= n/2, got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n));
    }
    std::vector<BigInt> lower{BigInt(1)};
    for (int j = 1; j <= k; ++j) {
        BigInt value = induced_value(j, InnerCharacter::Trivial, mu);
        for (const auto& v : lower) value -= v;
        lower.push_back(value);
    }
    return lower.back();
}

}  // namespace symchar
