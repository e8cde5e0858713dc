#pragma once

// Seeded instance generators. All randomness flows through std::mt19937_64,
// whose output sequence is fixed by the standard, and plain modulo reduction,
// so a seed produces the same corpus on every platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chromabound/arrangements.hpp"
#include "chromabound/graphs.hpp"

namespace chromabound::corpus {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct NamedGraph {
    std::string name;
    SimpleGraph graph;
};

struct NamedArrangement {
    std::string name;
    Arrangement arrangement;
};

/// Paths, cycles, complete graphs up to K6, K_{2,2}, K_{3,3} and a few edgeless graphs.
inline std::vector<NamedGraph> named_graphs() {
    std::vector<NamedGraph> out;
    for (std::size_t n = 0; n <= 3; ++n) out.push_back({"E" + std::to_string(n), named::edgeless(n)});
    for (std::size_t n = 2; n <= 6; ++n) out.push_back({"P" + std::to_string(n), named::path(n)});
    for (std::size_t n = 3; n <= 6; ++n) out.push_back({"C" + std::to_string(n), named::cycle(n)});
    for (std::size_t n = 1; n <= 6; ++n) out.push_back({"K" + std::to_string(n), named::complete(n)});
    out.push_back({"K2,2", named::complete_bipartite(2, 2)});
    out.push_back({"K2,3", named::complete_bipartite(2, 3)});
    out.push_back({"K3,3", named::complete_bipartite(3, 3)});
    SimpleGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    out.push_back({"2K3", two_triangles});
    out.push_back({"2K2", SimpleGraph(4, {{0, 1}, {2, 3}})});
    return out;
}

/// `count` graphs with 1..max_n vertices; each graph draws its own edge density.
inline std::vector<NamedGraph> random_graphs(Rng& rng, std::size_t count, std::size_t max_n) {
    std::vector<NamedGraph> out;
    if (max_n == 0) return out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_n)));
        const long long density = uniform(rng, 10, 90);
        SimpleGraph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (uniform(rng, 1, 100) <= density) g.add_edge(u, v);
        out.push_back({"G" + std::to_string(i), std::move(g)});
    }
    return out;
}

inline Rational random_small_rational(Rng& rng) {
    return Rational(BigInt(uniform(rng, -4, 4)), BigInt(uniform(rng, 1, 3)));
}

inline std::vector<Rational> random_normal(Rng& rng, std::size_t dim, long long span) {
    std::vector<Rational> v;
    bool nonzero = false;
    while (!nonzero) {
        v.clear();
        for (std::size_t i = 0; i < dim; ++i) {
            v.emplace_back(uniform(rng, -span, span));
            if (v.back() != 0) nonzero = true;
        }
    }
    return v;
}

/// dim in [1, max_dim], up to max_m hyperplanes (repeats collapse). Small
/// coefficients make coincidences and parallel classes common.
inline Arrangement random_arrangement(Rng& rng, std::size_t max_dim, std::size_t max_m, bool linear) {
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_dim)));
    const auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_m)));
    Arrangement a(dim);
    for (std::size_t i = 0; i < m; ++i) {
        auto normal = random_normal(rng, dim, 2);
        Rational offset = 0;
        if (!linear && uniform(rng, 0, 1) == 1) offset = random_small_rational(rng);
        a.add(Hyperplane(normal, offset));
    }
    return a;
}

/// m <= dim hyperplanes with independent normals and arbitrary offsets.
inline Arrangement random_boolean_arrangement(Rng& rng, std::size_t max_dim) {
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_dim)));
    const auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(dim)));
    Arrangement a(dim);
    while (a.size() < m) {
        Arrangement trial = a;
        trial.add(Hyperplane(random_normal(rng, dim, 3), random_small_rational(rng)));
        if (rank(trial) == trial.size()) a = std::move(trial);
    }
    return a;
}

/// Wide coefficient range with random offsets; almost always in general position.
inline Arrangement random_generic_arrangement(Rng& rng, std::size_t max_dim, std::size_t max_m) {
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_dim)));
    const auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_m)));
    Arrangement a(dim);
    for (std::size_t i = 0; i < m; ++i) {
        Rational offset(BigInt(uniform(rng, -50, 50)), BigInt(uniform(rng, 1, 7)));
        a.add(Hyperplane(random_normal(rng, dim, 9), offset));
    }
    return a;
}

/// Mixed pool: general rational, generic, boolean and linear instances.
inline std::vector<NamedArrangement> random_arrangements(Rng& rng, std::size_t count, std::size_t max_dim,
                                                         std::size_t max_m) {
    std::vector<NamedArrangement> out;
    if (max_dim == 0 || max_m == 0) return out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::string id = std::to_string(i);
        switch (i % 4) {
            case 0: out.push_back({"rand" + id, random_arrangement(rng, max_dim, max_m, false)}); break;
            case 1: out.push_back({"generic" + id, random_generic_arrangement(rng, max_dim, max_m)}); break;
            case 2: out.push_back({"linear" + id, random_arrangement(rng, max_dim, max_m, true)}); break;
            default: out.push_back({"boolean" + id, random_boolean_arrangement(rng, max_dim)}); break;
        }
    }
    return out;
}

/// Coordinate hyperplanes x_i = 0 for i < m in Q^n.
inline Arrangement coordinate_arrangement(std::size_t n, std::size_t m) {
    Arrangement a(n);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> normal(n, Rational(0));
        normal[i] = 1;
        a.add(Hyperplane(normal, 0));
    }
    return a;
}

/// Graphic K3 and K4, coordinate (boolean) arrangements, and random linear ones.
inline std::vector<NamedArrangement> linear_central_arrangements(Rng& rng, std::size_t random_count) {
    std::vector<NamedArrangement> out;
    out.push_back({"graphic K3", graphic_arrangement(named::complete(3))});
    out.push_back({"graphic K4", graphic_arrangement(named::complete(4))});
    out.push_back({"graphic C4", graphic_arrangement(named::cycle(4))});
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= n; ++m)
            out.push_back({"coordinate " + std::to_string(m) + " in Q^" + std::to_string(n),
                           coordinate_arrangement(n, m)});
    for (std::size_t i = 0; i < random_count; ++i)
        out.push_back({"random linear " + std::to_string(i), random_arrangement(rng, 4, 7, true)});
    return out;
}

}  // namespace chromabound::corpus
