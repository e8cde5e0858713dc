#pragma once

// Test-only reference routes. Nothing here calls into the library's
// elimination, poset, or deletion-contraction code.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chromabound/arrangements.hpp"
#include "chromabound/exactmath.hpp"
#include "chromabound/graphs.hpp"

namespace oracle {

using chromabound::BigInt;
using chromabound::Rational;

/// Pascal's triangle for x >= 0; upper negation binom(-x, j) = (-1)^j binom(x+j-1, j) otherwise.
inline BigInt binom(long long x, long long j) {
    if (j < 0) return 0;
    if (x < 0) {
        BigInt v = binom(-x + j - 1, j);
        return j % 2 == 0 ? v : BigInt(-v);
    }
    if (j > x) return 0;
    std::vector<BigInt> row{1};
    for (long long i = 1; i <= x; ++i) {
        std::vector<BigInt> next(row.size() + 1, BigInt(0));
        for (std::size_t c = 0; c < row.size(); ++c) {
            next[c] += row[c];
            next[c + 1] += row[c];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(j)];
}

/// Plain row-echelon rank over Q.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

struct SubsetInfo {
    bool central = false;
    std::size_t codim = 0;  // valid when central
};

/// Rouche-Capelli: consistent iff rank(normals) == rank([normals | offsets]).
inline SubsetInfo subset_info(const chromabound::Arrangement& a, std::uint64_t mask) {
    std::vector<std::vector<Rational>> coeff, aug;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        std::vector<Rational> row;
        for (const auto& c : a[i].normal()) row.emplace_back(c);
        coeff.push_back(row);
        row.push_back(a[i].offset());
        aug.push_back(row);
    }
    const std::size_t rc = rank(coeff);
    return {rc == rank(aug), rc};
}

/// chi-independent k-subsets counted by brute force over all subsets: circuits
/// are recomputed from scratch as dependent subsets with no dependent proper subset.
inline std::vector<BigInt> nbc_counts(const chromabound::Arrangement& a, const std::vector<std::size_t>& smallest_first) {
    const std::size_t m = a.size();
    const std::uint64_t full = std::uint64_t{1} << m;
    std::vector<std::size_t> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[smallest_first[i]] = i;
    std::vector<bool> dependent(full, false);
    std::vector<SubsetInfo> info(full);
    for (std::uint64_t s = 0; s < full; ++s) {
        info[s] = subset_info(a, s);
        dependent[s] = info[s].central && info[s].codim < static_cast<std::size_t>(__builtin_popcountll(s));
    }
    std::vector<std::uint64_t> broken;
    for (std::uint64_t s = 0; s < full; ++s) {
        if (!dependent[s]) continue;
        bool minimal = true;
        for (std::uint64_t sub = (s - 1) & s; sub != s; sub = (sub - 1) & s) {
            if (dependent[sub]) {
                minimal = false;
                break;
            }
            if (sub == 0) break;
        }
        if (!minimal) continue;
        std::size_t top = m;
        for (std::size_t i = 0; i < m; ++i)
            if ((s >> i & 1) && (top == m || pos[i] > pos[top])) top = i;
        broken.push_back(s & ~(std::uint64_t{1} << top));
    }
    std::vector<BigInt> counts(m + 1, BigInt(0));
    for (std::uint64_t s = 0; s < full; ++s) {
        if (!info[s].central) continue;
        bool clean = true;
        for (auto b : broken)
            if ((b & s) == b) clean = false;
        if (clean) counts[static_cast<std::size_t>(__builtin_popcountll(s))] += 1;
    }
    return counts;
}

/// Polynomial long division remainder-free quotient by (t - root), coefficients ascending.
inline std::vector<BigInt> divide_by_linear(const std::vector<BigInt>& p, const BigInt& root) {
    if (p.empty()) return {};
    std::vector<BigInt> rem = p;
    std::vector<BigInt> q(p.size() - 1, BigInt(0));
    for (std::size_t d = p.size() - 1; d >= 1; --d) {
        q[d - 1] = rem[d];
        rem[d - 1] += root * rem[d];
        rem[d] = 0;
    }
    return q;  // rem[0] is the remainder
}

}  // namespace oracle
