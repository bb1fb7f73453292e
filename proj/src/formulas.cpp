#include "nestcount/formulas.hpp"

#include <stdexcept>
#include <string>

#include "nestcount/gtree.hpp"
#include "nestcount/polynomial.hpp"

namespace nestcount::formulas {

namespace {

BigInt require_integer(const Rational& q, const char* what) {
    if (q.get_den() != 1) throw ConsistencyError(std::string(what) + " is not an integer: " + q.get_str());
    return q.get_num();
}

BigInt half_central(long n) { return binomial(2 * n + 2, n + 1) / 2; }

// [x^0] of a * b, read off b's monomials against a's mirrored ones.
BigInt constant_term_of_product(const Polynomial& a, const Polynomial& b) {
    BigInt total = 0;
    for (const auto& [mono, c] : b.terms()) {
        Monomial mirror;
        for (int i = 0; i < kMaxVariables; ++i) mirror.at(i) = static_cast<std::int16_t>(-mono[i]);
        total += c * a.coefficient(mirror);
    }
    return total;
}

// h^d s^{d+1}: the t^d coefficient of s / (1 - t h s).
std::vector<Polynomial> kernel_powers(int variables, int max_d) {
    const Polynomial s = Polynomial::one_plus_sum(variables);
    const Polynomial hs = s.multiplied(Polynomial::one_plus_reciprocal_sum(variables));
    std::vector<Polynomial> out{s};
    for (int d = 1; d <= max_d; ++d) out.push_back(out.back().multiplied(hs));
    return out;
}

// sum_k F_{n*}(k) (1 + x_var)^{k - shift}
Polynomial boundary_polynomial(const CoefficientTable& table, int n_star, int var, int shift) {
    Polynomial out(2);
    for (const auto& [k, c] : table.by_last[static_cast<std::size_t>(n_star)])
        for (int i = 0; i <= k - shift; ++i) out.add_term(Monomial::variable(var, i), c * binomial(k - shift, i));
    return out;
}

void require_depth(const CoefficientTable& table, int n) {
    if (table.m != 2) throw std::invalid_argument("m = 2 formulas need an m = 2 coefficient table");
    if (table.depth() < n - 1)
        throw std::invalid_argument("coefficient table reaches n = " + std::to_string(table.depth()) +
                                    ", need n = " + std::to_string(n - 1));
}

} // namespace

CoefficientTable CoefficientTable::from_gtree(int m, int depth) {
    CoefficientTable table;
    table.m = m;
    for (const auto& level : gtree::levels(m, depth)) {
        table.totals.push_back(level.total());
        table.by_last.push_back(gtree::marginal(level, m));
    }
    return table;
}

BigInt CoefficientTable::at(int n, int k) const {
    const auto& row = by_last.at(static_cast<std::size_t>(n));
    auto it = row.find(k);
    return it == row.end() ? BigInt(0) : it->second;
}

bool CoefficientTable::is_consistent() const {
    for (int n = 0; n <= depth(); ++n) {
        BigInt sum = 0, weighted = 0;
        for (const auto& [k, c] : by_last[static_cast<std::size_t>(n)]) {
            sum += c;
            weighted += c * k;
        }
        if (sum != totals[static_cast<std::size_t>(n)]) return false;
        if (n < depth() && weighted != totals[static_cast<std::size_t>(n) + 1]) return false;
    }
    return true;
}

std::vector<BigInt> catalan_recurrence(int N) {
    if (N < 0) throw std::invalid_argument("N must be non-negative");
    std::vector<BigInt> F;
    for (long n = 0; n <= N; ++n) {
        BigInt value = half_central(n);
        for (long j = 0; j < n; ++j) value -= binomial(2 * j + 2, j + 1) * F[static_cast<std::size_t>(n - 1 - j)];
        F.push_back(value);
    }
    return F;
}

std::vector<BigInt> catalan_closed_form(int N) {
    std::vector<BigInt> out;
    for (long n = 0; n <= N; ++n) out.push_back(binomial(2 * n, n) / (n + 1));
    return out;
}

bool catalan_convolution_check(int N) {
    const auto cat = catalan_closed_form(N);
    for (long n = 0; n <= N; ++n) {
        BigInt lhs = 0;
        for (long k = 0; k <= n; ++k) lhs += binomial(2 * k, k) * cat[static_cast<std::size_t>(n - k)];
        if (lhs != half_central(n)) return false;
    }
    return true;
}

bool m1_series_check(int N, std::span<const BigInt> boundary) {
    if (N < 0) throw std::invalid_argument("N must be non-negative");
    if (static_cast<int>(boundary.size()) < N + 1) throw std::invalid_argument("boundary series too short");

    // Left side: sum over partitions of (1 + x)^{a_1} t^n.
    std::vector<Polynomial> lhs;
    for (const auto& level : gtree::levels(1, N)) {
        Polynomial p(1);
        for (const auto& [l, c] : level.counts)
            for (int i = 0; i <= l[1]; ++i) p.add_term(Monomial::variable(0, i), c * binomial(l[1], i));
        lhs.push_back(std::move(p));
    }

    // Right side: s/(1 - t h s) - t s h F(0;t)/(1 - t h s).
    const Polynomial s = Polynomial::one_plus_sum(1);
    const Polynomial sh = s.multiplied(Polynomial::one_plus_reciprocal_sum(1));
    std::vector<Polynomial> geometric{Polynomial::constant(1, 1)}; // (sh)^k
    for (int k = 1; k <= N; ++k) geometric.push_back(geometric.back().multiplied(sh));
    for (int n = 0; n <= N; ++n) {
        Polynomial rhs = s.multiplied(geometric[static_cast<std::size_t>(n)]);
        for (int a = 0; a + 1 <= n; ++a) {
            const int b = n - 1 - a;
            Polynomial term = sh.multiplied(geometric[static_cast<std::size_t>(a)]);
            for (const auto& [mono, c] : term.terms()) rhs.sub_term(mono, c * boundary[static_cast<std::size_t>(b)]);
        }
        if (!(rhs == lhs[static_cast<std::size_t>(n)])) return false;
    }
    return true;
}

bool m1_series_check(int N) {
    const auto cat = catalan_closed_form(N);
    return m1_series_check(N, cat);
}

BigInt m2_first_term(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    Rational total = 0;
    for (long l1 = 0; l1 <= n; ++l1)
        for (long l2 = 0; l1 + l2 <= n; ++l2) {
            const long l3 = n - l1 - l2;
            Rational factor(l2 + 1 - l1, l2 + 1);
            factor.canonicalize();
            total += Rational(multinomial(n, {l1, l2, l3}) * multinomial(n + 1, {l1, l2, l3 + 1})) * factor;
        }
    return require_integer(total, "first term");
}

BigInt m2_first_term_as_printed(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    Rational total = 0;
    for (long l1 = 0; l1 <= n; ++l1)
        for (long l2 = 0; l1 + l2 <= n; ++l2) {
            Rational factor(l2 + 1 - l1, l2 + 1);
            factor.canonicalize();
            total += Rational(multinomial(n, {l1, l2, n - l1 - l2})) * factor;
        }
    return require_integer(total, "first term (as printed)");
}

BigInt m2_second_term(int n, const CoefficientTable& table, Reading reading) {
    require_depth(table, n);
    BigInt total = 0;
    for (long ns = 0; ns < n; ++ns) {
        const long d = n - ns; // the (1 - ths)^{-1} power is d - 1
        for (const auto& [k, f] : table.by_last[static_cast<std::size_t>(ns)]) {
            for (long l1 = 0; l1 < d; ++l1)
                for (long l2 = 0; l1 + l2 < d; ++l2) {
                    const long l3 = d - 1 - l1 - l2;
                    BigInt inner = 0;
                    for (long j2 = 0; j2 <= d - 1 - l1; ++j2)
                        inner += multinomial(d, {l1 + 1, j2, d - 1 - l1 - j2}) * binomial(k, l2 - j2);
                    const long target = reading == Reading::reconciled ? d - 2 - l2 : n - l2 - 2;
                    for (long j1 = 0; j1 <= target; ++j1)
                        inner -= multinomial(d, {j1, l2 + 2, target - j1}) * binomial(k, l1 - j1 - 1);
                    total += f * multinomial(d - 1, {l1, l2, l3}) * inner;
                }
        }
    }
    return total;
}

BigInt m2_third_term(int n, const CoefficientTable& table) {
    require_depth(table, n);
    BigInt total = 0;
    for (long ns = 0; ns < n; ++ns) {
        const long d = n - ns;
        for (const auto& [k, f] : table.by_last[static_cast<std::size_t>(ns)]) {
            for (long l1 = 0; l1 < d; ++l1)
                for (long l2 = 0; l1 + l2 < d; ++l2) {
                    const long l3 = d - 1 - l1 - l2;
                    BigInt inner = 0;
                    for (long j2 = 0; j2 <= d - l1; ++j2)
                        inner += multinomial(d, {l1, j2, d - l1 - j2}) * binomial(k - 1, l2 - j2);
                    for (long j1 = 0; j1 <= d - l2 - 1; ++j1)
                        inner -= multinomial(d, {j1, l2 + 1, d - l2 - 1 - j1}) * binomial(k - 1, l1 - j1 - 1);
                    total += f * multinomial(d - 1, {l1, l2, l3}) * inner;
                }
        }
    }
    return total;
}

BigInt m2_full_expression(int n, const CoefficientTable& table, Reading reading) {
    return m2_first_term(n) - m2_second_term(n, table, reading) - m2_third_term(n, table);
}

BigInt ct_reference_first(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    const auto powers = kernel_powers(2, n);
    // 1 - x1/x2
    Polynomial factor = Polynomial::constant(2, 1);
    Monomial ratio;
    ratio.at(0) = 1;
    ratio.at(1) = -1;
    factor.add_term(ratio, -1);
    return constant_term_of_product(powers[static_cast<std::size_t>(n)], factor);
}

BigInt ct_reference(Term term, int n, const CoefficientTable& table) {
    if (term == Term::first) return ct_reference_first(n);
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    require_depth(table, n);
    const auto powers = kernel_powers(2, n);

    BigInt total = 0;
    for (int ns = 0; ns < n; ++ns) {
        const int d = n - ns - 1;
        Polynomial bracket(2);
        if (term == Term::second) {
            // F(0, x2)/x1 - x1 F(0, x1)/x2^2
            Monomial inv_x1 = Monomial::variable(0, -1);
            Monomial x1_over_x2sq;
            x1_over_x2sq.at(0) = 1;
            x1_over_x2sq.at(1) = -2;
            bracket += boundary_polynomial(table, ns, 1, 0).times_monomial(inv_x1);
            bracket -= boundary_polynomial(table, ns, 0, 0).times_monomial(x1_over_x2sq);
        } else {
            // F(0, x2)/(1 + x2) - (x1/x2) F(0, x1)/(1 + x1)
            Monomial x1_over_x2;
            x1_over_x2.at(0) = 1;
            x1_over_x2.at(1) = -1;
            bracket += boundary_polynomial(table, ns, 1, 1);
            bracket -= boundary_polynomial(table, ns, 0, 1).times_monomial(x1_over_x2);
        }
        total += constant_term_of_product(powers[static_cast<std::size_t>(d)], bracket);
    }
    return total;
}

} // namespace nestcount::formulas
