#pragma once

// Circuits, broken circuits and chi-independent sets under a total order.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chromabound/arrangements.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/exactmath.hpp"

namespace chromabound {

/// Total order on hyperplane indices. `sequence()` lists indices from the
/// smallest to the largest element.
class GroundOrder {
public:
    explicit GroundOrder(std::vector<std::size_t> sequence) : seq_(std::move(sequence)), pos_(seq_.size()) {
        std::vector<bool> hit(seq_.size(), false);
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            if (seq_[i] >= seq_.size() || hit[seq_[i]])
                throw InputError("ground order is not a permutation of 0.." + std::to_string(seq_.size()) + "-1");
            hit[seq_[i]] = true;
            pos_[seq_[i]] = i;
        }
    }

    static GroundOrder natural(std::size_t m) {
        std::vector<std::size_t> s(m);
        std::iota(s.begin(), s.end(), std::size_t{0});
        return GroundOrder(std::move(s));
    }

    template <typename Rng>
    static GroundOrder random(std::size_t m, Rng& rng) {
        std::vector<std::size_t> s(m);
        std::iota(s.begin(), s.end(), std::size_t{0});
        // Fisher-Yates with plain modulo so the result is identical across standard libraries.
        for (std::size_t i = m; i > 1; --i) std::swap(s[i - 1], s[rng() % i]);
        return GroundOrder(std::move(s));
    }

    std::size_t size() const { return seq_.size(); }
    const std::vector<std::size_t>& sequence() const { return seq_; }
    /// Position of index i in the order.
    std::size_t position(std::size_t i) const { return pos_.at(i); }
    bool precedes(std::size_t a, std::size_t b) const { return position(a) < position(b); }

private:
    std::vector<std::size_t> seq_;
    std::vector<std::size_t> pos_;
};

/// Central but not boolean: the intersection is nonempty and has codimension below |B|.
inline bool is_dependent(const Arrangement& a, IndexMask subset) {
    auto flat = flat_of(a, subset);
    return flat && flat->codim() < static_cast<std::size_t>(std::popcount(subset));
}

inline bool is_dependent(const Arrangement& a, const std::vector<std::size_t>& subset) {
    IndexMask mask = 0;
    for (std::size_t i : subset) {
        if (i >= a.size()) throw PreconditionError("is_dependent: index out of range");
        mask |= detail::bit(i);
    }
    return is_dependent(a, mask);
}

using CircuitSet = std::vector<IndexMask>;

/// All minimal dependent subsets, by a size-ascending sweep that skips
/// supersets of circuits already found.
inline CircuitSet circuits(const Arrangement& a, std::size_t guard = kDefaultSubsetGuard) {
    detail::check_guard(a, guard, "circuits");
    const std::size_t m = a.size();
    CircuitSet found;
    // Gosper's hack walks the k-subsets of an m-set in increasing numeric order.
    for (std::size_t k = 1; k <= m; ++k) {
        const IndexMask limit = (IndexMask{1} << m) - 1;
        IndexMask s = (IndexMask{1} << k) - 1;
        while (true) {
            const bool covers = std::any_of(found.begin(), found.end(), [s](IndexMask c) { return (c & s) == c; });
            if (!covers && is_dependent(a, s)) found.push_back(s);
            if (s == (limit & ~((IndexMask{1} << (m - k)) - 1))) break;
            const IndexMask low = s & (~s + 1);
            const IndexMask ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
    }
    return found;
}

/// Each circuit minus its largest element under `order`; deduplicated, sorted.
inline std::vector<IndexMask> broken_circuits(const CircuitSet& cs, const GroundOrder& order) {
    std::vector<IndexMask> out;
    for (IndexMask c : cs) {
        std::size_t top = 0;
        bool first = true;
        for (std::size_t i = 0; i < order.size(); ++i)
            if ((c & detail::bit(i)) && (first || order.precedes(top, i))) {
                top = i;
                first = false;
            }
        out.push_back(c & ~detail::bit(top));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<IndexMask> broken_circuits(const Arrangement& a, const GroundOrder& order,
                                              std::size_t guard = kDefaultSubsetGuard) {
    if (order.size() != a.size()) throw PreconditionError("broken_circuits: order size differs from |A|");
    return broken_circuits(circuits(a, guard), order);
}

/// Nonempty intersection and no broken circuit inside.
inline bool is_chi_independent(const Arrangement& a, const std::vector<IndexMask>& broken, IndexMask subset) {
    for (IndexMask b : broken)
        if ((b & subset) == b) return false;
    return flat_of(a, subset).has_value();
}

/// counts[k] = number of chi-independent k-subsets, for k = 0..|A|.
/// chi-independence is closed under subsets, so the walk only extends
/// independent sets.
inline std::vector<BigInt> nbc_counts(const Arrangement& a, const GroundOrder& order,
                                      std::size_t guard = kDefaultSubsetGuard) {
    const auto broken = broken_circuits(a, order, guard);
    std::vector<BigInt> counts(a.size() + 1, BigInt(0));
    std::vector<std::pair<IndexMask, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [mask, next] = stack.back();
        stack.pop_back();
        counts[static_cast<std::size_t>(std::popcount(mask))] += 1;
        for (std::size_t i = next; i < a.size(); ++i) {
            const IndexMask grown = mask | detail::bit(i);
            if (is_chi_independent(a, broken, grown)) stack.push_back({grown, i + 1});
        }
    }
    return counts;
}

inline BigInt nbc_coefficient(const Arrangement& a, const GroundOrder& order, long long k,
                              std::size_t guard = kDefaultSubsetGuard) {
    if (k < 0) throw PreconditionError("nbc_coefficient: k must be nonnegative");
    const auto counts = nbc_counts(a, order, guard);
    return static_cast<std::size_t>(k) < counts.size() ? counts[static_cast<std::size_t>(k)] : BigInt(0);
}

/// Indices set in a mask, ascending.
inline std::vector<std::size_t> mask_indices(IndexMask mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kMaxHyperplanes; ++i)
        if (mask & detail::bit(i)) out.push_back(i);
    return out;
}

}  // namespace chromabound
