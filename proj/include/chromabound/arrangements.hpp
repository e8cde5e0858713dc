#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chromabound/errors.hpp"
#include "chromabound/exactmath.hpp"
#include "chromabound/graphs.hpp"
#include "chromabound/linalg.hpp"

namespace chromabound {

/// Default bound on |A| for anything that walks the subsets or flats of A.
inline constexpr std::size_t kDefaultSubsetGuard = 20;

/// Index sets over an arrangement are bitmasks; this bounds every guard.
inline constexpr std::size_t kMaxHyperplanes = 63;

using IndexMask = std::uint64_t;

/// The locus normal . x = offset, in canonical form: the normal is a primitive
/// integer vector whose first nonzero entry is positive.
class Hyperplane {
public:
    Hyperplane(const std::vector<Rational>& normal, const Rational& offset) { canonicalize(normal, offset); }

    Hyperplane(std::initializer_list<long long> normal, long long offset) {
        std::vector<Rational> v;
        for (long long x : normal) v.emplace_back(x);
        canonicalize(v, Rational(offset));
    }

    std::size_t dim() const { return normal_.size(); }
    const std::vector<BigInt>& normal() const { return normal_; }
    const Rational& offset() const { return offset_; }
    bool is_linear() const { return offset_ == 0; }

    std::vector<Rational> rational_normal() const { return {normal_.begin(), normal_.end()}; }

    /// Row [normal | offset] of an augmented system.
    linalg::RatRow augmented_row() const {
        linalg::RatRow row(normal_.begin(), normal_.end());
        row.push_back(offset_);
        return row;
    }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

    std::string to_string() const {
        std::string out;
        for (const auto& c : normal_) out += c.str() + " ";
        return out + offset_.str();
    }

private:
    void canonicalize(const std::vector<Rational>& normal, const Rational& offset) {
        BigInt lcm_den = 1;
        for (const auto& c : normal) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
        BigInt gcd_num = 0;
        for (const auto& c : normal) gcd_num = boost::multiprecision::gcd(gcd_num, numerator(c) * (lcm_den / denominator(c)));
        if (gcd_num == 0) throw InputError("hyperplane normal vector is zero");
        auto first = std::find_if(normal.begin(), normal.end(), [](const Rational& c) { return c != 0; });
        if (*first < 0) gcd_num = -gcd_num;
        normal_.reserve(normal.size());
        for (const auto& c : normal) normal_.push_back(numerator(c) * (lcm_den / denominator(c)) / gcd_num);
        offset_ = offset * Rational(lcm_den) / Rational(gcd_num);
    }

    std::vector<BigInt> normal_;
    Rational offset_;
};

/// An ordered list of distinct hyperplanes in Q^n.
class Arrangement {
public:
    explicit Arrangement(std::size_t ambient_dim) : dim_(ambient_dim) {}

    /// Throws InputError on a dimension mismatch or a duplicate hyperplane.
    Arrangement(std::size_t ambient_dim, const std::vector<Hyperplane>& hyperplanes) : dim_(ambient_dim) {
        for (const auto& h : hyperplanes)
            if (!add(h)) throw InputError("duplicate hyperplane: " + h.to_string());
    }

    /// Same as the checked constructor, but silently drops repeats.
    static Arrangement deduplicated(std::size_t ambient_dim, const std::vector<Hyperplane>& hyperplanes) {
        Arrangement a(ambient_dim);
        for (const auto& h : hyperplanes) a.add(h);
        return a;
    }

    /// Appends h unless an equal hyperplane is present; returns whether it was added.
    bool add(const Hyperplane& h) {
        if (h.dim() != dim_)
            throw InputError("hyperplane has " + std::to_string(h.dim()) + " coordinates, ambient dimension is " +
                             std::to_string(dim_));
        if (std::find(hyps_.begin(), hyps_.end(), h) != hyps_.end()) return false;
        hyps_.push_back(h);
        return true;
    }

    std::size_t ambient_dim() const { return dim_; }
    std::size_t size() const { return hyps_.size(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyps_; }
    const Hyperplane& operator[](std::size_t i) const { return hyps_.at(i); }

    bool is_linear() const {
        return std::all_of(hyps_.begin(), hyps_.end(), [](const Hyperplane& h) { return h.is_linear(); });
    }

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Hyperplane> hyps_;
};

/// A nonempty affine subspace, stored as the echelon form of its augmented
/// defining system: primitive integer rows with positive pivots, each pivot
/// column zero in every other row. The form is canonical, so equal flats compare equal.
class Flat {
public:
    using Row = std::vector<BigInt>;

    /// The whole space Q^n.
    static Flat ambient(std::size_t n) { return Flat(n, {}); }

    /// Solution set of the given augmented rows, or nullopt when inconsistent.
    static std::optional<Flat> solve(std::size_t n, linalg::RatMatrix rows) {
        auto pivots = linalg::rref(rows);
        if (!pivots.empty() && pivots.back() == n) return std::nullopt;
        std::vector<Row> system;
        for (const auto& r : rows) {
            BigInt den = 1;
            for (const auto& v : r) den = lcm(den, BigInt(denominator(v)));
            Row row;
            for (const auto& v : r) row.push_back(BigInt(numerator(v)) * (den / denominator(v)));
            system.push_back(primitive(std::move(row)));
        }
        return Flat(n, std::move(system));
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return n_ - system_.size(); }
    std::size_t codim() const { return system_.size(); }
    const std::vector<Row>& system() const { return system_; }

    /// Adds one equation to the echelon form without re-eliminating from scratch.
    std::optional<Flat> intersect(const Hyperplane& h) const {
        auto row = reduce(integer_row(h));
        const auto p = leading(row);
        if (p > n_) return *this;
        if (p == n_) return std::nullopt;
        row = primitive(std::move(row));
        Flat out = *this;
        for (auto& r : out.system_) {
            if (r[p] == 0) continue;
            const BigInt c = r[p];
            for (std::size_t j = 0; j <= n_; ++j) r[j] = r[j] * row[p] - c * row[j];
            r = primitive(std::move(r));
        }
        auto pos = std::find_if(out.system_.begin(), out.system_.end(),
                                [&](const Row& r) { return leading(r) > p; });
        out.system_.insert(pos, std::move(row));
        return out;
    }

    bool is_contained_in(const Hyperplane& h) const { return leading(reduce(integer_row(h))) > n_; }

    friend bool operator==(const Flat&, const Flat&) = default;

private:
    Flat(std::size_t n, std::vector<Row> rows) : n_(n), system_(std::move(rows)) {}

    static Row integer_row(const Hyperplane& h) {
        const BigInt den = denominator(h.offset());
        Row row;
        row.reserve(h.normal().size() + 1);
        for (const auto& c : h.normal()) row.push_back(c * den);
        row.push_back(numerator(h.offset()));
        return row;
    }

    /// Divides out the content and makes the leading entry positive.
    static Row primitive(Row row) {
        BigInt g = 0;
        for (const auto& v : row) g = gcd(g, BigInt(abs(v)));
        if (g == 0) return row;
        const auto lead = std::find_if(row.begin(), row.end(), [](const BigInt& v) { return v != 0; });
        if (*lead < 0) g = -g;
        for (auto& v : row) v /= g;
        return row;
    }

    /// First nonzero column, or n + 1 for the zero row.
    std::size_t leading(const Row& row) const {
        for (std::size_t j = 0; j <= n_; ++j)
            if (row[j] != 0) return j;
        return n_ + 1;
    }

    Row reduce(Row row) const {
        for (const auto& r : system_) {
            const auto p = leading(r);
            if (row[p] == 0) continue;
            const BigInt c = row[p];
            for (std::size_t j = 0; j <= n_; ++j) row[j] = row[j] * r[p] - c * r[j];
        }
        return row;
    }

    std::size_t n_ = 0;
    std::vector<Row> system_;
};

namespace detail {

inline void check_guard(const Arrangement& a, std::size_t guard, const char* what) {
    const std::size_t limit = std::min(guard, kMaxHyperplanes);
    if (a.size() > limit)
        throw ResourceLimitError(std::string(what) + ": " + std::to_string(a.size()) +
                                 " hyperplanes exceeds enumeration guard " + std::to_string(limit));
}

inline IndexMask bit(std::size_t i) { return IndexMask{1} << i; }

}  // namespace detail

/// Dimension of the span of the normals.
inline std::size_t rank(const Arrangement& a) {
    linalg::IntMatrix m;
    for (const auto& h : a.hyperplanes()) m.push_back(h.normal());
    return linalg::rank_fraction_free(std::move(m));
}

/// Intersection of the hyperplanes at `subset`; nullopt when empty.
inline std::optional<Flat> flat_of(const Arrangement& a, const std::vector<std::size_t>& subset) {
    linalg::RatMatrix rows;
    for (std::size_t i : subset) rows.push_back(a[i].augmented_row());
    return Flat::solve(a.ambient_dim(), std::move(rows));
}

inline std::optional<Flat> flat_of(const Arrangement& a, IndexMask subset) {
    linalg::RatMatrix rows;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (subset & detail::bit(i)) rows.push_back(a[i].augmented_row());
    return Flat::solve(a.ambient_dim(), std::move(rows));
}

/// The intersection semi-lattice L(A) under reverse inclusion, with Mobius values.
class IntersectionPoset {
public:
    struct Node {
        Flat flat;
        IndexMask containing;  // hyperplanes that contain the flat
        BigInt mobius;
    };

    /// Nodes ordered by decreasing dimension; node 0 is the ambient space.
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    /// X <= Y in L(A), i.e. Y is contained in X.
    bool leq(std::size_t x, std::size_t y) const {
        return (nodes_[x].containing & ~nodes_[y].containing) == 0;
    }

    static IntersectionPoset build(const Arrangement& a, std::size_t guard = kDefaultSubsetGuard) {
        detail::check_guard(a, guard, "intersection_poset");
        IntersectionPoset p;
        // A flat of L(A) is the intersection of the hyperplanes containing it, so that set identifies it.
        std::set<IndexMask> seen{0};
        p.nodes_.push_back({Flat::ambient(a.ambient_dim()), 0, 1});
        // Closure: intersect every discovered flat with every hyperplane not containing it.
        for (std::size_t cur = 0; cur < p.nodes_.size(); ++cur) {
            for (std::size_t h = 0; h < a.size(); ++h) {
                if (p.nodes_[cur].containing & detail::bit(h)) continue;
                auto meet = p.nodes_[cur].flat.intersect(a[h]);
                if (!meet) continue;
                IndexMask mask = p.nodes_[cur].containing | detail::bit(h);
                for (std::size_t g = 0; g < a.size(); ++g)
                    if (!(mask & detail::bit(g)) && meet->is_contained_in(a[g])) mask |= detail::bit(g);
                if (!seen.insert(mask).second) continue;
                p.nodes_.push_back({std::move(*meet), mask, 0});
            }
        }
        std::stable_sort(p.nodes_.begin(), p.nodes_.end(), [](const Node& x, const Node& y) {
            if (x.flat.dim() != y.flat.dim()) return x.flat.dim() > y.flat.dim();
            return x.containing < y.containing;
        });
        // mu(V) = 1 and sum_{Y <= X} mu(Y) = 0 for X > V.
        for (std::size_t x = 1; x < p.nodes_.size(); ++x) {
            BigInt sum = 0;
            for (std::size_t y = 0; y < x; ++y)
                if (p.nodes_[y].flat.dim() > p.nodes_[x].flat.dim() && p.leq(y, x)) sum += p.nodes_[y].mobius;
            p.nodes_[x].mobius = -sum;
        }
        return p;
    }

private:
    std::vector<Node> nodes_;
};

inline IntersectionPoset intersection_poset(const Arrangement& a, std::size_t guard = kDefaultSubsetGuard) {
    return IntersectionPoset::build(a, guard);
}

/// sum over flats X of mu(V, X) t^dim(X).
inline IntPolynomial char_poly(const Arrangement& a, std::size_t guard = kDefaultSubsetGuard) {
    const auto poset = intersection_poset(a, guard);
    std::vector<BigInt> coeffs(a.ambient_dim() + 1, BigInt(0));
    for (const auto& node : poset.nodes()) coeffs[node.flat.dim()] += node.mobius;
    return IntPolynomial(std::move(coeffs));
}

namespace detail {

/// Depth-first walk over all subsets B whose intersection is nonempty, in
/// include-before-exclude order. The visitor receives (mask, size, flat).
template <typename Visit>
void for_each_central_subset(const Arrangement& a, Visit&& visit) {
    std::function<void(std::size_t, IndexMask, std::size_t, const Flat&)> walk =
        [&](std::size_t next, IndexMask mask, std::size_t size, const Flat& flat) {
            if (next == a.size()) {
                visit(mask, size, flat);
                return;
            }
            if (auto meet = flat.intersect(a[next])) walk(next + 1, mask | bit(next), size + 1, *meet);
            walk(next + 1, mask, size, flat);
        };
    walk(0, 0, 0, Flat::ambient(a.ambient_dim()));
}

}  // namespace detail

/// Whitney's formula: sum over central subsets B of (-1)^|B| t^dim(cap B).
/// Shares no code with the Mobius route beyond the flat solver.
inline IntPolynomial char_poly_whitney(const Arrangement& a, std::size_t guard = kDefaultSubsetGuard) {
    detail::check_guard(a, guard, "char_poly_whitney");
    std::vector<BigInt> coeffs(a.ambient_dim() + 1, BigInt(0));
    detail::for_each_central_subset(a, [&](IndexMask, std::size_t size, const Flat& flat) {
        coeffs[flat.dim()] += (size % 2 == 0) ? 1 : -1;
    });
    return IntPolynomial(std::move(coeffs));
}

inline bool is_central(const Arrangement& a) {
    std::vector<std::size_t> all(a.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return flat_of(a, all).has_value();
}

inline bool is_boolean(const Arrangement& a) {
    const bool boolean = rank(a) == a.size();
    if (boolean && !is_central(a)) throw InvariantError("boolean arrangement is not central");
    return boolean;
}

/// Every subset of size <= r is boolean and every larger subset is non-central.
inline bool is_general_position(const Arrangement& a, std::size_t guard = kDefaultSubsetGuard) {
    detail::check_guard(a, guard, "is_general_position");
    const std::size_t r = rank(a);
    const std::size_t n = a.ambient_dim();
    // Any subset of size <= r must be central, so walking central subsets and
    // counting them per size detects the empty small ones too.
    std::vector<BigInt> central_by_size(a.size() + 1, BigInt(0));
    bool ok = true;
    detail::for_each_central_subset(a, [&](IndexMask, std::size_t size, const Flat& flat) {
        central_by_size[size] += 1;
        if (size > r || n - flat.dim() != size) ok = false;
    });
    if (!ok) return false;
    for (std::size_t k = 0; k <= r; ++k)
        if (central_by_size[k] != binom(static_cast<long long>(a.size()), static_cast<long long>(k))) return false;
    return true;
}

/// A \ H_h
inline Arrangement delete_hyperplane(const Arrangement& a, std::size_t h) {
    if (h >= a.size()) throw PreconditionError("delete_hyperplane: index out of range");
    Arrangement out(a.ambient_dim());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != h) out.add(a[i]);
    return out;
}

namespace detail {

/// Pulls every hyperplane except `skip` back to coordinates on the affine
/// subspace normal(base) . x = level. Parametrization: solve the base equation
/// for its first nonzero coordinate p; the remaining coordinates, in order, are
/// the new ones. Empty intersections are dropped and repeats collapse.
inline Arrangement pull_back_to_chart(const Arrangement& a, std::size_t skip, const Rational& level) {
    const std::size_t n = a.ambient_dim();
    if (n == 0) throw PreconditionError("cannot restrict a 0-dimensional arrangement");
    const auto& base = a[skip].normal();
    const std::size_t p = static_cast<std::size_t>(
        std::find_if(base.begin(), base.end(), [](const BigInt& c) { return c != 0; }) - base.begin());
    const Rational lead(base[p]);
    Arrangement out(n - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == skip) continue;
        const auto& c = a[i].normal();
        const Rational cp(c[p]);
        std::vector<Rational> normal;
        normal.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != p) normal.push_back(Rational(c[j]) - cp * Rational(base[j]) / lead);
        const Rational offset = a[i].offset() - cp * level / lead;
        const bool parallel = std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; });
        if (parallel) {
            if (offset == 0) throw InvariantError("pull_back_to_chart: hyperplane coincides with the chart");
            continue;
        }
        out.add(Hyperplane(normal, offset));
    }
    return out;
}

}  // namespace detail

/// A / H_h, in coordinates on H_h; ambient dimension drops by one.
inline Arrangement restrict_to(const Arrangement& a, std::size_t h) {
    if (h >= a.size()) throw PreconditionError("restrict_to: index out of range");
    return detail::pull_back_to_chart(a, h, a[h].offset());
}

/// Graphic arrangement: x_i - x_j = 0 for each edge (i, j), in edge order.
inline Arrangement graphic_arrangement(const SimpleGraph& g) {
    Arrangement a(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        std::vector<Rational> normal(g.vertex_count(), Rational(0));
        normal[u] = 1;
        normal[v] = -1;
        a.add(Hyperplane(normal, 0));
    }
    return a;
}

/// The same hyperplanes seen in the r-dimensional quotient spanned by the
/// normals. Coordinates are the pivot columns of the normal matrix's echelon form.
inline Arrangement essentialize(const Arrangement& a) {
    linalg::RatMatrix normals;
    for (const auto& h : a.hyperplanes()) normals.push_back(h.rational_normal());
    const auto pivots = linalg::rref(normals);
    Arrangement out(pivots.size());
    for (const auto& h : a.hyperplanes()) {
        std::vector<Rational> coords;
        coords.reserve(pivots.size());
        for (std::size_t p : pivots) coords.emplace_back(h.normal()[p]);
        if (!out.add(Hyperplane(coords, h.offset())))
            throw InvariantError("essentialize: distinct hyperplanes collided");
    }
    return out;
}

/// Deconing of a linear arrangement at hyperplane k0: every other hyperplane is
/// intersected with the affine chart normal(k0) . x = 1.
inline Arrangement decone(const Arrangement& a, std::size_t k0) {
    if (k0 >= a.size()) throw PreconditionError("decone: index out of range");
    if (!a.is_linear()) throw PreconditionError("decone: arrangement is not linear (some offset is nonzero)");
    return detail::pull_back_to_chart(a, k0, Rational(1));
}

}  // namespace chromabound
