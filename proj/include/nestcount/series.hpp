#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nestcount/bigint.hpp"
#include "nestcount/polynomial.hpp"

namespace nestcount::series {

/// Power series in t truncated at order N whose coefficients are polynomials
/// in m catalytic variables. With a weight bound W, the t^k coefficient keeps
/// only monomials of total degree <= W - k.
class TruncatedSeries {
public:
    TruncatedSeries(int m, int order, std::optional<int> weight_bound = std::nullopt,
                    bool laurent_allowed = false);

    int m() const { return m_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::optional<int> weight_bound() const { return weight_bound_; }
    bool laurent_allowed() const { return laurent_allowed_; }

    const Polynomial& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    /// Stores `p` as the t^k coefficient, applying the weight bound. Throws
    /// ConsistencyError for exponents the representation does not admit.
    void set(int k, Polynomial p);

    /// [x^0] of each t-coefficient.
    std::vector<BigInt> constant_terms() const;
    /// Each t-coefficient evaluated at `point`.
    std::vector<Rational> evaluate(std::span<const Rational> point) const;

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    int m_;
    std::optional<int> weight_bound_;
    bool laurent_allowed_;
    std::vector<Polynomial> coeffs_;
};

/// Exact quotient of `p` by (x_i - 1). Throws ConsistencyError when the
/// remainder is nonzero.
Polynomial divide_by_variable_minus_one(const Polynomial& p, int i);

/// Coefficients P_0..P_N of the label generating function in u_1..u_m,
/// obtained by iterating the divided-difference functional equation.
TruncatedSeries u_engine_series(int m, int N);
/// P_n(1, ..., 1) for n = 0..N.
std::vector<BigInt> u_engine(int m, int N);

/// x_{j-1} <- x_{j-1} + x_j, x_j <- 0 (j is 1-based, 2 <= j <= m).
Polynomial substitute_pair(const Polynomial& p, int j);
TruncatedSeries substitute_pair(const TruncatedSeries& s, int j);

/// 1 / (1 + x_2 + ... + x_m) truncated to total degree <= D.
Polynomial geometric_inverse(int m, int D);

/// t-coefficients of 1 / (1 - t*s*h) with s = 1 + sum x_i, h = 1 + sum 1/x_i, through t^order.
std::vector<Polynomial> kernel_inverse_expansion(int m, int order);

struct XEngineOptions {
    /// Weight bound W: keep total x-degree + t-order <= W. Defaults to N.
    std::optional<int> weight_bound;
    /// Run one extra iteration and require orders <= N to be unchanged.
    bool check_stabilization =
#ifdef NDEBUG
        false;
#else
        true;
#endif
    /// Fan the per-order work out over OpenMP threads.
    bool parallel = true;
};

/// The x-variable series after N+1 iterations of the modified kernel
/// equation, starting from s = 1 + x_1 + ... + x_m.
TruncatedSeries x_engine_series(int m, int N, const XEngineOptions& options = {});
/// Constant terms [x^0] of x_engine_series, n = 0..N.
std::vector<BigInt> x_engine(int m, int N, const XEngineOptions& options = {});

/// Evaluates the u-series at u_j = v_j / v_{j+1} and the x-series at the
/// point, with v_{m+1} = 1 and v_j = 1 + x_j + ... + x_m, and compares every
/// t-coefficient through t^N exactly. Throws std::invalid_argument for points
/// with a zero coordinate, a vanishing v_j, or the wrong dimension.
bool v_identity_check(int m, int N, const std::vector<std::vector<Rational>>& sample_points);

} // namespace nestcount::series
