#include "nestcount/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestcount {

Polynomial Polynomial::constant(int variables, const BigInt& c) {
    Polynomial p(variables);
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::one_plus_sum(int variables) {
    Polynomial p = constant(variables, 1);
    for (int i = 0; i < variables; ++i) p.add_term(Monomial::variable(i), 1);
    return p;
}

Polynomial Polynomial::one_plus_reciprocal_sum(int variables) {
    Polynomial p = constant(variables, 1);
    for (int i = 0; i < variables; ++i) p.add_term(Monomial::variable(i, -1), 1);
    return p;
}

BigInt Polynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Monomial& mono, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::sub_term(const Monomial& mono, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, -c);
    if (!inserted) {
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    variables_ = std::max(variables_, o.variables_);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    variables_ = std::max(variables_, o.variables_);
    for (const auto& [mono, c] : o.terms_) sub_term(mono, c);
    return *this;
}

Polynomial Polynomial::multiplied(const Polynomial& o, int max_degree) const {
    Polynomial r(std::max(variables_, o.variables_));
    BigInt prod;
    for (const auto& [ma, ca] : terms_) {
        const int da = ma.degree();
        for (const auto& [mb, cb] : o.terms_) {
            if (da + mb.degree() > max_degree) continue;
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            r.add_term(ma * mb, prod);
        }
    }
    return r;
}

Polynomial Polynomial::multiplied(const Polynomial& o) const {
    Polynomial r(std::max(variables_, o.variables_));
    BigInt prod;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            r.add_term(ma * mb, prod);
        }
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& mono) const {
    Polynomial r(variables_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
    return r;
}

Polynomial Polynomial::truncated(int max_degree) const {
    Polynomial r(variables_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= max_degree) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::at_zero(int i) const {
    Polynomial r(variables_);
    for (const auto& [m, c] : terms_) {
        if (m[i] < 0) throw std::domain_error("cannot set a variable with a negative exponent to zero");
        if (m[i] == 0) r.terms_.emplace(m, c);
    }
    return r;
}

Polynomial Polynomial::at_one(int i) const {
    Polynomial r(variables_);
    for (const auto& [m, c] : terms_) {
        Monomial k = m;
        k.at(i) = 0;
        r.add_term(k, c);
    }
    return r;
}

int Polynomial::max_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        d = first ? m.degree() : std::max(d, m.degree());
        first = false;
    }
    return d;
}

bool Polynomial::has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_negative(); });
}

BigInt Polynomial::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) < variables_) throw std::invalid_argument("evaluation point has too few coordinates");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < variables_; ++i) {
            int e = m[i];
            const Rational& x = point[static_cast<std::size_t>(i)];
            if (e < 0 && x == 0) throw std::domain_error("negative power of zero");
            Rational base = e >= 0 ? x : Rational(1) / x;
            for (int k = 0; k < (e >= 0 ? e : -e); ++k) term *= base;
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

std::vector<std::pair<Monomial, BigInt>> Polynomial::sorted_terms() const {
    std::vector<std::pair<Monomial, BigInt>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (int i = 0; i < std::max(variables_, 1); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += var + std::to_string(i + 1);
            if (m[i] != 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += to_decimal(mag);
        } else {
            if (mag != 1) out += to_decimal(mag) + "*";
            out += mono;
        }
    }
    return out;
}

} // namespace nestcount
