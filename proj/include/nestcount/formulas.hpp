#pragma once

#include <map>
#include <span>
#include <vector>

#include "nestcount/bigint.hpp"

namespace nestcount::formulas {

/// F_n for n = 0..depth and, per n, the distribution F_n(k) of the last label
/// entry a_m = k.
struct CoefficientTable {
    int m = 2;
    std::vector<BigInt> totals;
    std::vector<std::map<int, BigInt>> by_last;

    static CoefficientTable from_gtree(int m, int depth);
    int depth() const { return static_cast<int>(totals.size()) - 1; }
    BigInt at(int n, int k) const;
    /// F_n = sum_k F_n(k) and F_{n+1} = sum_k k F_n(k) wherever both sides exist.
    bool is_consistent() const;
};

// m = 1

/// F_n = C(2n+2, n+1)/2 - sum_{j<n} C(2j+2, j+1) F_{n-1-j}.
std::vector<BigInt> catalan_recurrence(int N);
/// C(2n, n) / (n + 1).
std::vector<BigInt> catalan_closed_form(int N);
/// sum_{k<=n} C(2k, k) Cat_{n-k} == C(2n+2, n+1)/2 for all n <= N.
bool catalan_convolution_check(int N);

/// Expands both sides of the m = 1 kernel equation as Laurent series in x
/// through t^N and compares them. The left side comes from the generating
/// tree; the right side uses `boundary` as F(0; t) (needs N+1 entries).
bool m1_series_check(int N, std::span<const BigInt> boundary);
bool m1_series_check(int N);

// m = 2

enum class Term { first, second, third };

/// Index convention for the second term of the assembled m = 2 expression.
enum class Reading {
    /// Term-by-term derivation: j1 + j3 = n - n* - 2 - l2.
    reconciled,
    /// Second term's inner constraint as typeset, j1 + j3 = n - l2 - 2.
    as_printed,
};

/// sum over l1+l2+l3 = n of multinomial(n; l) multinomial(n+1; l1, l2, l3+1) (1 - l1/(l2+1)).
BigInt m2_first_term(int n);
/// sum over l1+l2+l3 = n of multinomial(n; l) (1 - l1/(l2+1)), as typeset.
BigInt m2_first_term_as_printed(int n);

/// Multinomial forms of the second and third terms at t^n.
BigInt m2_second_term(int n, const CoefficientTable& table, Reading reading = Reading::reconciled);
BigInt m2_third_term(int n, const CoefficientTable& table);

/// first - second - third. Under the reconciled reading this is F_n.
BigInt m2_full_expression(int n, const CoefficientTable& table, Reading reading = Reading::reconciled);

/// Independent oracle: builds the Laurent polynomials behind each term and
/// takes the x1^0 x2^0 coefficient directly. Throws std::invalid_argument
/// when `table` does not reach n - 1 (second and third terms).
BigInt ct_reference(Term term, int n, const CoefficientTable& table);
BigInt ct_reference_first(int n);

} // namespace nestcount::formulas
