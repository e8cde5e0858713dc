#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chromabound/errors.hpp"
#include "chromabound/exactmath.hpp"

namespace chromabound {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v in lexicographic order.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : n_(n) {}

    /// Throws InputError on loops, out-of-range endpoints, or duplicate edges.
    SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : n_(n) {
        for (const auto& [u, v] : edges)
            if (!add_edge(u, v))
                throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }

    /// Returns false if the edge was already present.
    bool add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        if (u >= n_ || v >= n_)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has endpoint >= n = " +
                             std::to_string(n_));
        if (u > v) std::swap(u, v);
        return edges_.insert({u, v}).second;
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::set<Edge>& edges() const { return edges_; }
    std::vector<Edge> edge_list() const { return {edges_.begin(), edges_.end()}; }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::size_t n_ = 0;
    std::set<Edge> edges_;
};

struct GraphRankInfo {
    std::size_t components = 0;
    std::size_t rank = 0;
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

inline GraphRankInfo rank_info(const SimpleGraph& g) {
    detail::DisjointSets sets(g.vertex_count());
    std::size_t merges = 0;
    for (const auto& [u, v] : g.edges())
        if (sets.unite(u, v)) ++merges;
    return {g.vertex_count() - merges, merges};
}

inline bool is_forest(const SimpleGraph& g) { return g.edge_count() == rank_info(g).rank; }

/// G \ e
inline SimpleGraph delete_edge(const SimpleGraph& g, const Edge& e) {
    SimpleGraph out(g.vertex_count());
    for (const auto& f : g.edges())
        if (f != e) out.add_edge(f.first, f.second);
    return out;
}

/// G / e: the larger endpoint is merged into the smaller one, vertices above it
/// shift down by one, and parallel edges collapse.
inline SimpleGraph contract_edge(const SimpleGraph& g, Edge e) {
    auto [keep, gone] = e;
    if (keep > gone) std::swap(keep, gone);
    auto relabel = [&](std::size_t x) {
        if (x == gone) x = keep;
        return x > gone ? x - 1 : x;
    };
    SimpleGraph out(g.vertex_count() - 1);
    for (const auto& [u, v] : g.edges()) {
        std::size_t a = relabel(u), b = relabel(v);
        if (a != b) out.add_edge(a, b);
    }
    return out;
}

namespace detail {

using GraphKey = std::pair<std::size_t, std::vector<Edge>>;

inline IntPolynomial chromatic_rec(const SimpleGraph& g, std::map<GraphKey, IntPolynomial>* memo) {
    if (g.edge_count() == 0) return IntPolynomial::monomial(1, g.vertex_count());
    GraphKey key;
    if (memo) {
        key = {g.vertex_count(), g.edge_list()};
        if (auto it = memo->find(key); it != memo->end()) return it->second;
    }
    const Edge e = *g.edges().begin();
    IntPolynomial result = chromatic_rec(delete_edge(g, e), memo) - chromatic_rec(contract_edge(g, e), memo);
    if (memo) memo->emplace(std::move(key), result);
    return result;
}

}  // namespace detail

/// Chromatic polynomial by deletion-contraction on the lexicographically
/// smallest edge. The memo only caches; results are identical either way.
inline IntPolynomial chromatic_poly(const SimpleGraph& g, bool use_memo = true) {
    std::map<detail::GraphKey, IntPolynomial> memo;
    return detail::chromatic_rec(g, use_memo ? &memo : nullptr);
}

inline constexpr std::uint64_t kDefaultColoringCap = 100'000'000;

/// Exhaustive count of proper colorings with `colors` colors.
/// Throws ResourceLimitError when colors^n exceeds `cap`.
inline BigInt count_colorings(const SimpleGraph& g, std::uint64_t colors,
                              std::uint64_t cap = kDefaultColoringCap) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 1;
    if (colors == 0) return 0;
    {
        BigInt space = boost::multiprecision::pow(BigInt(colors), static_cast<unsigned>(n));
        if (space > cap)
            throw ResourceLimitError("count_colorings: " + std::to_string(colors) + "^" + std::to_string(n) +
                                     " assignments exceeds cap " + std::to_string(cap));
    }
    // Only edges to earlier vertices matter when assigning in vertex order.
    std::vector<std::vector<std::size_t>> earlier(n);
    for (const auto& [u, v] : g.edges()) earlier[v].push_back(u);

    std::vector<std::uint64_t> color(n, 0);
    std::uint64_t count = 0;
    std::size_t depth = 0;
    // Iterative odometer with early rejection of partial assignments.
    color[0] = 0;
    while (true) {
        bool ok = true;
        for (std::size_t u : earlier[depth])
            if (color[u] == color[depth]) {
                ok = false;
                break;
            }
        if (ok && depth + 1 == n) ++count;
        if (ok && depth + 1 < n) {
            ++depth;
            color[depth] = 0;
            continue;
        }
        while (++color[depth] == colors) {
            if (depth == 0) return count;
            --depth;
        }
    }
}

/// Exact rational Lagrange interpolation of the coloring counts at t = 0..n.
inline IntPolynomial chromatic_poly_interpolated(const SimpleGraph& g, std::uint64_t cap = kDefaultColoringCap) {
    const std::size_t n = g.vertex_count();
    std::vector<Rational> acc(n + 1, Rational(0));
    for (std::size_t j = 0; j <= n; ++j) {
        Rational y = count_colorings(g, j, cap);
        // basis polynomial prod_{i != j} (t - i) / (j - i), ascending coefficients
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == j) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * Rational(static_cast<long long>(i));
            }
            basis = std::move(next);
            denom *= Rational(static_cast<long long>(j) - static_cast<long long>(i));
        }
        for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += y * basis[d] / denom;
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& c : acc) {
        if (denominator(c) != 1) throw InvariantError("chromatic_poly_interpolated: non-integer coefficient");
        coeffs.push_back(numerator(c));
    }
    return IntPolynomial(std::move(coeffs));
}

namespace named {

inline SimpleGraph path(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SimpleGraph cycle(std::size_t n) {
    SimpleGraph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline SimpleGraph complete(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
    SimpleGraph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline SimpleGraph edgeless(std::size_t n) { return SimpleGraph(n); }

}  // namespace named

}  // namespace chromabound
