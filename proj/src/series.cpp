#include "nestcount/series.hpp"

#include <exception>
#include <map>
#include <stdexcept>
#include <string>

namespace nestcount::series {

namespace {

void check_m(int m) {
    if (m < 1 || m > kMaxVariables)
        throw std::invalid_argument("series engines support 1 <= m <= " + std::to_string(kMaxVariables));
}

Monomial prefix_product(int j) {
    Monomial mono;
    for (int i = 0; i < j; ++i) mono.at(i) = 1;
    return mono;
}

// Runs body(k) for k in [begin, end), optionally under OpenMP, rethrowing the
// first exception on the calling thread.
template <typename Body>
void for_orders(int begin, int end, bool parallel, Body&& body) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int k = begin; k < end; ++k) {
        try {
            body(k);
        } catch (...) {
#pragma omp critical(nestcount_series_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

} // namespace

TruncatedSeries::TruncatedSeries(int m, int order, std::optional<int> weight_bound, bool laurent_allowed)
    : m_(m), weight_bound_(weight_bound), laurent_allowed_(laurent_allowed) {
    if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Polynomial(m));
}

void TruncatedSeries::set(int k, Polynomial p) {
    const int floor = laurent_allowed_ ? -1 : 0;
    for (const auto& [mono, c] : p.terms())
        if (mono.min_exponent() < floor)
            throw ConsistencyError("exponent below " + std::to_string(floor) + " at t^" + std::to_string(k));
    if (weight_bound_) p = p.truncated(*weight_bound_ - k);
    coeffs_.at(static_cast<std::size_t>(k)) = std::move(p);
}

std::vector<BigInt> TruncatedSeries::constant_terms() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& p : coeffs_) out.push_back(p.coefficient(Monomial::one()));
    return out;
}

std::vector<Rational> TruncatedSeries::evaluate(std::span<const Rational> point) const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& p : coeffs_) out.push_back(p.evaluate(point));
    return out;
}

Polynomial divide_by_variable_minus_one(const Polynomial& p, int i) {
    // Per fixed cofactor, sum_d c_d x^d = (x - 1) sum_k q_k x^k with
    // q_k = sum_{d > k} c_d; the remainder is sum_d c_d.
    std::map<Monomial, std::map<int, BigInt>> groups;
    for (const auto& [mono, c] : p.terms()) {
        if (mono[i] < 0) throw std::domain_error("divided difference of a Laurent term");
        Monomial rest = mono;
        rest.at(i) = 0;
        groups[rest][mono[i]] += c;
    }
    Polynomial q(p.variables());
    for (const auto& [rest, column] : groups) {
        BigInt tail = 0;
        for (auto it = column.rbegin(); it != column.rend(); ++it) {
            const int d = it->first;
            auto next = std::next(it);
            const int lower = next == column.rend() ? -1 : next->first;
            tail += it->second;
            // q_k = tail for lower <= k < d
            for (int k = std::max(lower, 0); k < d; ++k) {
                Monomial mono = rest;
                mono.at(i) = static_cast<std::int16_t>(k);
                q.add_term(mono, tail);
            }
        }
        if (tail != 0)
            throw ConsistencyError("nonzero remainder " + to_decimal(tail) + " dividing by (x" +
                                   std::to_string(i + 1) + " - 1)");
    }
    return q;
}

TruncatedSeries u_engine_series(int m, int N) {
    check_m(m);
    TruncatedSeries out(m, N);
    Polynomial current(m);
    current.add_term(prefix_product(m), 1);
    out.set(0, current);
    for (int n = 0; n < N; ++n) {
        const Polynomial& p = current;
        Polynomial next = p.times_monomial(prefix_product(m));

        // u_1 (P - u_1 P|_{u_1=1}) / (u_1 - 1)
        Polynomial first = p - p.at_one(0).times_monomial(Monomial::variable(0));
        next += divide_by_variable_minus_one(first, 0).times_monomial(Monomial::variable(0));

        // u_1..u_j (P - P|_{u_{j-1} <- u_{j-1} u_j, u_j <- 1}) / (u_j - 1)
        for (int j = 2; j <= m; ++j) {
            Polynomial substituted(m);
            for (const auto& [mono, c] : p.terms()) {
                Monomial k = mono;
                k.at(j - 1) = mono[j - 2];
                substituted.add_term(k, c);
            }
            next += divide_by_variable_minus_one(p - substituted, j - 1).times_monomial(prefix_product(j));
        }
        current = std::move(next);
        out.set(n + 1, current);
    }
    return out;
}

std::vector<BigInt> u_engine(int m, int N) {
    const TruncatedSeries s = u_engine_series(m, N);
    std::vector<BigInt> out;
    for (int n = 0; n <= N; ++n) out.push_back(s[n].coefficient_sum());
    return out;
}

Polynomial substitute_pair(const Polynomial& p, int j) {
    if (j < 2 || j > p.variables()) throw std::out_of_range("substitute_pair index out of range");
    const int left = j - 2;
    const int right = j - 1;
    Polynomial out(p.variables());
    for (const auto& [mono, c] : p.terms()) {
        if (mono[right] > 0) continue;
        if (mono[right] < 0 || mono[left] < 0) throw std::domain_error("substitute_pair on a Laurent term");
        const int a = mono[left];
        for (int i = 0; i <= a; ++i) {
            Monomial k = mono;
            k.at(left) = static_cast<std::int16_t>(a - i);
            k.at(right) = static_cast<std::int16_t>(i);
            out.add_term(k, c * binomial(a, i));
        }
    }
    return out;
}

TruncatedSeries substitute_pair(const TruncatedSeries& s, int j) {
    TruncatedSeries out(s.m(), s.order(), s.weight_bound(), s.laurent_allowed());
    for (int k = 0; k <= s.order(); ++k) out.set(k, substitute_pair(s[k], j));
    return out;
}

Polynomial geometric_inverse(int m, int D) {
    check_m(m);
    if (D < 0) throw std::invalid_argument("degree bound must be non-negative");
    // Coefficient of x_2^{e_2}..x_m^{e_m} is (-1)^{|e|} multinomial(|e|; e).
    Polynomial out(m);
    Polynomial power = Polynomial::constant(m, 1);
    Polynomial step(m);
    for (int i = 1; i < m; ++i) step.add_term(Monomial::variable(i), -1);
    out += power;
    if (m == 1) return out;
    for (int d = 1; d <= D; ++d) {
        power = power.multiplied(step);
        out += power;
    }
    return out;
}

std::vector<Polynomial> kernel_inverse_expansion(int m, int order) {
    const Polynomial sh = Polynomial::one_plus_sum(m).multiplied(Polynomial::one_plus_reciprocal_sum(m));
    std::vector<Polynomial> out{Polynomial::constant(m, 1)};
    for (int k = 1; k <= order; ++k) out.push_back(out.back().multiplied(sh));
    return out;
}

TruncatedSeries x_engine_series(int m, int N, const XEngineOptions& options) {
    check_m(m);
    if (N < 0) throw std::invalid_argument("N must be non-negative");
    const int W = options.weight_bound.value_or(N);
    if (W < N) throw std::invalid_argument("weight bound must be at least N");

    const Polynomial s = Polynomial::one_plus_sum(m);
    const Polynomial h = Polynomial::one_plus_reciprocal_sum(m);
    // s / (s - x_1) = s / (1 + x_2 + ... + x_m)
    const Polynomial s_over = s.multiplied(geometric_inverse(m, W + 1), W + 1);
    const Monomial inv_x1 = Monomial::variable(0, -1);

    TruncatedSeries F(m, N, W);
    F.set(0, s);

    // One application of F <- s + t s (h F - (s/(s-x_1)) F(0,..)/x_1 - sum_j F(..x_{j-1}+x_j,0..)/x_j).
    auto apply = [&](const TruncatedSeries& in) {
        TruncatedSeries out(m, N, W);
        out.set(0, s);
        std::vector<Polynomial> next(static_cast<std::size_t>(N) + 1);
        for_orders(0, N, options.parallel, [&](int k) {
            const int bound = W - k - 1;
            if (bound < 0) return;
            const Polynomial& f = in[k];
            Polynomial bracket = h.multiplied(f, bound);
            bracket -= s_over.multiplied(f.at_zero(0), bound + 1).times_monomial(inv_x1);
            for (int j = 2; j <= m; ++j)
                bracket -= substitute_pair(f, j).times_monomial(Monomial::variable(j - 1, -1)).truncated(bound);
            for (const auto& [mono, c] : bracket.terms())
                if (mono.has_negative())
                    throw ConsistencyError("Laurent term survived at t^" + std::to_string(k + 1));
            next[static_cast<std::size_t>(k) + 1] = s.multiplied(bracket, bound);
        });
        for (int k = 1; k <= N; ++k) out.set(k, std::move(next[static_cast<std::size_t>(k)]));
        return out;
    };

    for (int iteration = 0; iteration <= N; ++iteration) F = apply(F);
    if (options.check_stabilization) {
        if (!(apply(F) == F)) throw ConsistencyError("x-engine did not stabilise after N+1 iterations");
    }
    return F;
}

std::vector<BigInt> x_engine(int m, int N, const XEngineOptions& options) {
    return x_engine_series(m, N, options).constant_terms();
}

bool v_identity_check(int m, int N, const std::vector<std::vector<Rational>>& sample_points) {
    check_m(m);
    for (const auto& x : sample_points) {
        if (static_cast<int>(x.size()) != m) throw std::invalid_argument("sample point has the wrong dimension");
        Rational v = 1;
        for (int j = m; j >= 1; --j) {
            if (x[static_cast<std::size_t>(j - 1)] == 0) throw std::invalid_argument("sample point has a zero coordinate");
            v += x[static_cast<std::size_t>(j - 1)];
            if (v == 0) throw std::invalid_argument("sample point makes some v_j vanish");
        }
    }

    const TruncatedSeries u_series = u_engine_series(m, N);
    // [t^n] of the x-series has x-degree up to n + 1; weight 2N + 1 keeps it whole.
    XEngineOptions opts;
    opts.weight_bound = 2 * N + 1;
    const TruncatedSeries x_series = x_engine_series(m, N, opts);

    for (const auto& x : sample_points) {
        std::vector<Rational> v(static_cast<std::size_t>(m) + 1);
        v[static_cast<std::size_t>(m)] = 1;
        for (int j = m - 1; j >= 0; --j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j) + 1] + x[static_cast<std::size_t>(j)];
        std::vector<Rational> u(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            u[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] / v[static_cast<std::size_t>(j) + 1];
            u[static_cast<std::size_t>(j)].canonicalize();
        }
        if (u_series.evaluate(u) != x_series.evaluate(x)) return false;
    }
    return true;
}

} // namespace nestcount::series
