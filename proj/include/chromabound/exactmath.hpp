#pragma once

// Exact integers, rationals, binomials and dense integer polynomials.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromabound/errors.hpp"

namespace chromabound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Generalized binomial x(x-1)...(x-j+1)/j! for any integer x; zero when j < 0.
inline BigInt binom(const BigInt& x, long long j) {
    if (j < 0) return 0;
    // Nonnegative x below j: the falling factorial passes through zero.
    if (x >= 0 && x < j) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long long i = 0; i < j; ++i) {
        num *= (x - i);
        den *= (i + 1);
    }
    return num / den;
}

inline BigInt binom(long long x, long long j) { return binom(BigInt(x), j); }

/// Left-hand side of the Vandermonde convolution: sum_i binom(x,i) binom(y,k-i).
inline BigInt vandermonde_sum(long long x, long long y, long long k) {
    if (k < 0) throw PreconditionError("vandermonde_sum: k must be nonnegative");
    BigInt total = 0;
    for (long long i = 0; i <= k; ++i) total += binom(x, i) * binom(y, k - i);
    return total;
}

/// Dense integer polynomial in t, coefficients by ascending power.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> ascending) {
        coeffs_.reserve(ascending.size());
        for (long long c : ascending) coeffs_.emplace_back(c);
        trim();
    }
    explicit IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

    /// c * t^k
    static IntPolynomial monomial(const BigInt& c, std::size_t k) {
        std::vector<BigInt> v(k + 1, BigInt(0));
        v[k] = c;
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    /// Smallest power with a nonzero coefficient; -1 for zero.
    long long lowest_power() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<long long>(i);
        return -1;
    }

    BigInt coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt operator()(const BigInt& t) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<BigInt> out = a.coeffs_;
        for (auto& c : out) c = -c;
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    /// Multiply by t^k.
    IntPolynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<BigInt> out(k, BigInt(0));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return IntPolynomial(std::move(out));
    }

    IntPolynomial pow(unsigned e) const {
        IntPolynomial result{1};
        for (unsigned i = 0; i < e; ++i) result = result * *this;
        return result;
    }

    /// Human-readable form, highest power first: "t^3 - 3t^2 + 2t".
    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (long long p = degree(); p >= 0; --p) {
            const BigInt& c = coeffs_[static_cast<std::size_t>(p)];
            if (c == 0) continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (mag != 1 || p == 0) out += mag.str();
            if (p >= 1) out += var;
            if (p >= 2) out += "^" + std::to_string(p);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline BigInt poly_eval(const IntPolynomial& p, const BigInt& t) { return p(t); }

inline IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q) { return p - q; }

inline IntPolynomial poly_shift_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

/// (t - 1)
inline IntPolynomial t_minus_one() { return IntPolynomial{-1, 1}; }

/// t^shift * (t - 1)^m
inline IntPolynomial boolean_char_poly(std::size_t ambient_dim, std::size_t m) {
    if (m > ambient_dim) throw PreconditionError("boolean_char_poly: more hyperplanes than dimensions");
    return t_minus_one().pow(static_cast<unsigned>(m)).shifted(ambient_dim - m);
}

/// Exact quotient by (t - 1) via synthetic division. The input must vanish at t = 1.
inline IntPolynomial divide_by_t_minus_1(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    const auto& c = p.coeffs();
    std::vector<BigInt> q(c.size() - 1, BigInt(0));
    BigInt carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
        carry += c[i];
        q[i - 1] = carry;
    }
    if (carry + c[0] != 0) throw InvariantError("divide_by_t_minus_1: nonzero remainder " + BigInt(carry + c[0]).str());
    return IntPolynomial(std::move(q));
}

}  // namespace chromabound
