#pragma once

// Two-sided bounds on binomial partial sums of a characteristic polynomial's
// coefficient sequence, the Delta operator, and related diagnostics.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chromabound/errors.hpp"
#include "chromabound/exactmath.hpp"
#include "chromabound/graphs.hpp"

namespace chromabound {

/// chi(t) = a_0 t^n - a_1 t^(n-1) + ... + (-1)^r a_r t^(n-r), with the signs stripped.
struct CoeffSequence {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t r = 0;
    std::vector<BigInt> a;

    /// a_i for i <= r, zero beyond.
    BigInt at(long long i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= a.size()) return 0;
        return a[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const CoeffSequence&, const CoeffSequence&) = default;
};

/// Validates the sign pattern of p and strips it. Throws ValidationError when p
/// is zero, not monic, fails to alternate strictly from t^n down to its lowest
/// power, or when a_1 != m.
inline CoeffSequence coeff_sequence(const IntPolynomial& p, std::size_t m) {
    if (p.is_zero()) throw ValidationError("coeff_sequence: zero polynomial");
    CoeffSequence s;
    s.n = static_cast<std::size_t>(p.degree());
    s.m = m;
    s.r = s.n - static_cast<std::size_t>(p.lowest_power());
    for (std::size_t i = 0; i <= s.r; ++i) {
        BigInt c = p.coeff(s.n - i);
        if (i % 2 == 1) c = -c;
        if (c <= 0)
            throw ValidationError("coeff_sequence: coefficient of t^" + std::to_string(s.n - i) +
                                  " breaks strict sign alternation");
        s.a.push_back(std::move(c));
    }
    if (s.a[0] != 1) throw ValidationError("coeff_sequence: polynomial is not monic");
    if (s.r >= 1 && s.a[1] != m)
        throw ValidationError("coeff_sequence: a_1 = " + s.a[1].str() + " but m = " + std::to_string(m));
    if (s.r == 0 && m != 0) throw ValidationError("coeff_sequence: rank 0 with hyperplanes present");
    return s;
}

/// sum_{i=0}^{k} binom(q, k-i) a_i
inline BigInt partial_binomial_sum(const CoeffSequence& s, long long q, long long k) {
    if (k < 0) throw PreconditionError("partial_binomial_sum: k must be nonnegative");
    BigInt total = 0;
    const long long top = std::min<long long>(k, static_cast<long long>(s.r));
    for (long long i = 0; i <= top; ++i) total += binom(q, k - i) * s.at(i);
    return total;
}

struct BoundPair {
    BigInt lower;
    BigInt upper;
};

/// (binom(r+q, k), binom(m+q, k)); only defined for 0 <= k <= q+r+1.
inline BoundPair theorem2_bounds(long long m, long long r, long long q, long long k) {
    if (k < 0 || k > q + r + 1)
        throw RangeError("bounds are only claimed for 0 <= k <= q+r+1 (q=" + std::to_string(q) +
                         ", r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")");
    return {binom(r + q, k), binom(m + q, k)};
}

struct BoundRecord {
    long long q = 0;
    long long k = 0;
    BigInt lower;
    BigInt value;
    BigInt upper;
    bool ok = false;

    bool tight() const { return lower == value && value == upper; }
    friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

struct BoundsReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t r = 0;
    long long q_min = 0;
    long long q_max = 0;
    std::vector<BoundRecord> records;
    /// Pairs with k > q+r+1, probed on request. Never counted as violations.
    std::vector<BoundRecord> outside;

    std::vector<BoundRecord> violations() const {
        std::vector<BoundRecord> out;
        for (const auto& rec : records)
            if (!rec.ok) out.push_back(rec);
        return out;
    }
    bool all_ok() const {
        return std::all_of(records.begin(), records.end(), [](const BoundRecord& x) { return x.ok; });
    }
    bool all_tight() const {
        return std::all_of(records.begin(), records.end(), [](const BoundRecord& x) { return x.tight(); });
    }
    friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

struct VerifyOptions {
    /// Largest k examined; unset means every admissible k.
    std::optional<long long> k_cap;
    /// How many k beyond q+r+1 to probe per q.
    long long probe_outside = 0;
};

namespace detail {

inline BoundRecord make_record(const CoeffSequence& s, long long q, long long k) {
    BoundRecord rec;
    rec.q = q;
    rec.k = k;
    rec.lower = binom(static_cast<long long>(s.r) + q, k);
    rec.upper = binom(static_cast<long long>(s.m) + q, k);
    rec.value = partial_binomial_sum(s, q, k);
    rec.ok = rec.lower <= rec.value && rec.value <= rec.upper;
    return rec;
}

}  // namespace detail

/// Checks lower <= value <= upper at every admissible (q, k) with q in
/// [q_min, q_max], ordered by q then k.
inline BoundsReport verify_theorem2(const CoeffSequence& s, long long q_min, long long q_max,
                                    const VerifyOptions& opts = {}) {
    if (q_min > q_max) throw PreconditionError("verify_theorem2: empty q window");
    BoundsReport report{s.n, s.m, s.r, q_min, q_max, {}, {}};
    const long long r = static_cast<long long>(s.r);
    for (long long q = q_min; q <= q_max; ++q) {
        long long k_max = q + r + 1;
        if (opts.k_cap) k_max = std::min(k_max, *opts.k_cap);
        for (long long k = 0; k <= k_max; ++k) {
            auto [lower, upper] = theorem2_bounds(static_cast<long long>(s.m), r, q, k);
            BoundRecord rec = detail::make_record(s, q, k);
            if (rec.lower != lower || rec.upper != upper) throw InvariantError("verify_theorem2: bound mismatch");
            report.records.push_back(std::move(rec));
        }
        for (long long k = std::max(0LL, q + r + 2); k <= q + r + 1 + opts.probe_outside; ++k)
            report.outside.push_back(detail::make_record(s, q, k));
    }
    return report;
}

struct Corollary5Report {
    /// (-1)^k sum_i (-1)^i binom(r-i, k-i) a_i for k = 0..r; each must be >= 0.
    std::vector<BigInt> alternating_sums;
    std::optional<BigInt> a2_lower;  // binom(r,2) + (m-r)(r-1), when r >= 2
    std::optional<BigInt> a3_lower;  // binom(r,3) + (m-r) binom(r-1,2), when r >= 3
    bool ok = true;
};

inline Corollary5Report corollary5_check(const CoeffSequence& s) {
    Corollary5Report rep;
    const long long r = static_cast<long long>(s.r);
    const long long m = static_cast<long long>(s.m);
    for (long long k = 0; k <= r; ++k) {
        BigInt sum = 0;
        for (long long i = 0; i <= k; ++i) {
            BigInt term = binom(r - i, k - i) * s.at(i);
            sum += (i % 2 == 0) ? term : BigInt(-term);
        }
        if (k % 2 == 1) sum = -sum;
        if (sum < 0) rep.ok = false;
        rep.alternating_sums.push_back(std::move(sum));
    }
    if (r >= 2) {
        rep.a2_lower = binom(r, 2) + BigInt(m - r) * (r - 1);
        if (s.at(2) < *rep.a2_lower) rep.ok = false;
    }
    if (r >= 3) {
        rep.a3_lower = binom(r, 3) + BigInt(m - r) * binom(r - 1, 2);
        if (s.at(3) < *rep.a3_lower) rep.ok = false;
    }
    return rep;
}

/// (p(t) - p(1)) / (t - 1)
inline IntPolynomial delta(const IntPolynomial& p) {
    return divide_by_t_minus_1(p - IntPolynomial::constant(p(BigInt(1))));
}

inline IntPolynomial delta_iter(IntPolynomial p, std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) p = delta(p);
    return p;
}

/// Delta^j of the essential polynomial of s, built directly from the
/// coefficient formula: the coefficient of t^(r-j-k) is
/// (-1)^k sum_{i<=k} binom(-j, k-i) a_i.
inline IntPolynomial delta_iter_closed_form(const CoeffSequence& s, std::size_t j) {
    if (j > s.r) throw PreconditionError("delta_iter_closed_form: j exceeds the rank");
    const std::size_t deg = s.r - j;
    std::vector<BigInt> coeffs(deg + 1, BigInt(0));
    for (std::size_t k = 0; k <= deg; ++k) {
        BigInt sum = partial_binomial_sum(s, -static_cast<long long>(j), static_cast<long long>(k));
        coeffs[deg - k] = (k % 2 == 0) ? sum : BigInt(-sum);
    }
    return IntPolynomial(std::move(coeffs));
}

/// The polynomial with the factor t^(n-r) removed.
inline IntPolynomial essential_poly(const CoeffSequence& s) {
    std::vector<BigInt> coeffs(s.r + 1, BigInt(0));
    for (std::size_t i = 0; i <= s.r; ++i) coeffs[s.r - i] = (i % 2 == 0) ? s.a[i] : BigInt(-s.a[i]);
    return IntPolynomial(std::move(coeffs));
}

inline bool is_logconcave(const CoeffSequence& s) {
    for (std::size_t i = 1; i + 1 < s.a.size(); ++i)
        if (s.a[i] * s.a[i] < s.a[i - 1] * s.a[i + 1]) return false;
    return true;
}

struct ForestEquivalence {
    bool matches_m_binomials = false;  // a_k = binom(m,k) for 1 <= k <= r
    bool matches_r_binomials = false;  // a_k = binom(r,k) for 1 <= k <= r
    bool forest = false;
};

/// Evaluates the three equivalent forest conditions; throws TheoremViolation if they disagree.
inline ForestEquivalence forest_equivalence(const SimpleGraph& g) {
    const auto s = coeff_sequence(chromatic_poly(g), g.edge_count());
    ForestEquivalence out{true, true, is_forest(g)};
    for (std::size_t k = 1; k <= s.r; ++k) {
        const auto kk = static_cast<long long>(k);
        if (s.a[k] != binom(static_cast<long long>(s.m), kk)) out.matches_m_binomials = false;
        if (s.a[k] != binom(static_cast<long long>(s.r), kk)) out.matches_r_binomials = false;
    }
    if (out.matches_m_binomials != out.forest || out.matches_r_binomials != out.forest)
        throw TheoremViolation("forest_equivalence: conditions disagree");
    return out;
}

}  // namespace chromabound
