#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nestcount/bigint.hpp"

namespace nestcount {

/// Catalytic-variable count supported by the series engines.
inline constexpr int kMaxVariables = 10;

/// Exponent vector of a (Laurent) monomial in up to kMaxVariables variables.
/// Unused trailing slots stay zero, so equality ignores the variable count.
struct Monomial {
    std::array<std::int16_t, kMaxVariables> e{};

    static Monomial one() { return {}; }
    static Monomial variable(int i, int power = 1) {
        Monomial mono;
        mono.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(power);
        return mono;
    }

    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    std::int16_t& at(int i) { return e[static_cast<std::size_t>(i)]; }

    int degree() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }
    bool has_negative() const {
        for (auto v : e)
            if (v < 0) return true;
        return false;
    }
    int min_exponent() const {
        int lo = 0;
        for (auto v : e) lo = std::min<int>(lo, v);
        return lo;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
        return r;
    }

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& mono) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto v : mono.e) {
            h ^= static_cast<std::uint16_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Sparse multivariate Laurent polynomial with big-integer coefficients.
class Polynomial {
public:
    using Terms = std::unordered_map<Monomial, BigInt, MonomialHash>;

    Polynomial() = default;
    explicit Polynomial(int variables) : variables_(variables) {}

    static Polynomial constant(int variables, const BigInt& c);
    /// 1 + x_1 + ... + x_m
    static Polynomial one_plus_sum(int variables);
    /// 1 + 1/x_1 + ... + 1/x_m
    static Polynomial one_plus_reciprocal_sum(int variables);

    int variables() const { return variables_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BigInt coefficient(const Monomial& mono) const;
    void add_term(const Monomial& mono, const BigInt& c);
    void sub_term(const Monomial& mono, const BigInt& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    /// Product keeping only monomials of total degree <= max_degree.
    Polynomial multiplied(const Polynomial& o, int max_degree) const;
    Polynomial multiplied(const Polynomial& o) const;
    Polynomial times_monomial(const Monomial& mono) const;

    /// Drops monomials of total degree > max_degree.
    Polynomial truncated(int max_degree) const;
    /// Keeps monomials whose exponent of variable i is zero (x_i <- 0).
    Polynomial at_zero(int i) const;
    /// Sets variable i to 1.
    Polynomial at_one(int i) const;

    int max_degree() const;
    bool has_negative_exponent() const;

    /// Sum of all coefficients, i.e. the value at (1, ..., 1).
    BigInt coefficient_sum() const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Deterministic, sorted rendering, e.g. "u1^4*u2^4 + 2*u1^3*u2^3".
    std::string to_string(const std::string& var = "x") const;

    /// Terms sorted by monomial.
    std::vector<std::pair<Monomial, BigInt>> sorted_terms() const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    int variables_ = 0;
    Terms terms_;
};

} // namespace nestcount
