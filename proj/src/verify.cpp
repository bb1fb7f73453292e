#include "nestcount/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "nestcount/bigint.hpp"
#include "nestcount/formulas.hpp"
#include "nestcount/gtree.hpp"
#include "nestcount/partition.hpp"
#include "nestcount/series.hpp"
#include "nestcount/table1.hpp"

namespace nestcount::verify {

namespace {

constexpr int kOracleMax = 10;

// Compares two sequences termwise from index `from`; reports the first mismatch.
Check compare(std::string name, const std::vector<BigInt>& got, const std::vector<BigInt>& want, int from = 0) {
    Check c{std::move(name), true, {}, false};
    const std::size_t len = std::min(got.size(), want.size());
    for (std::size_t n = static_cast<std::size_t>(from); n < len; ++n) {
        if (got[n] != want[n]) {
            c.passed = false;
            c.detail = "n=" + std::to_string(n) + ": got " + to_decimal(got[n]) + ", expected " + to_decimal(want[n]);
            return c;
        }
    }
    if (got.size() != want.size()) {
        c.passed = false;
        c.detail = "length mismatch";
    }
    return c;
}

std::vector<BigInt> table_row(int m, int N) {
    std::vector<BigInt> row{1};
    for (int n = 1; n <= N; ++n) row.emplace_back(std::string(table1::value(m, n)));
    return row;
}

std::vector<BigInt> oracle_sequence(int m, int N) {
    std::vector<BigInt> out;
    for (int n = 0; n <= N; ++n) out.push_back(count_nonnesting_parallel(n, m));
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

} // namespace

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.informational || c.passed; });
}

std::string Report::render() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.informational ? "INFO" : c.passed ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
    }
    os << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"table1", "cross-engine", "oracle", "catalan",
                                                "labels", "equidistribution", "bell-prefix", "m2-formula"};
    return names;
}

Report run_suite(std::string_view suite, int m, int N) {
    if (suite == "table1") return table1(m, N);
    if (suite == "cross-engine") return cross_engine(m, N);
    if (suite == "oracle") return oracle(m, N);
    if (suite == "catalan") return catalan(N);
    if (suite == "labels") return labels(m, N);
    if (suite == "equidistribution") return equidistribution(m, N);
    if (suite == "bell-prefix") return bell_prefix(m, N);
    if (suite == "m2-formula") return m2_formula(N);
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

Report table1(int m, int N) {
    require(m >= 1 && m <= table1::kRows, "table1 covers --max-nesting 1..6");
    require(N >= 0 && N <= table1::kColumns, "table1 covers --terms 0..15");
    Report r{"table1", {}};
    r.checks.push_back(compare("gtree m=" + std::to_string(m) + " matches the embedded table through n=" +
                                   std::to_string(N),
                               gtree::sequence(m, N), table_row(m, N), 1));
    r.checks.push_back({"row reference", true, std::string(table1::kOeis[static_cast<std::size_t>(m - 1)]), true});
    return r;
}

Report cross_engine(int m, int N) {
    require(m >= 1 && N >= 0, "cross-engine needs m >= 1 and N >= 0");
    Report r{"cross-engine", {}};
    const auto tree = gtree::sequence(m, N);
    const auto useries = series::u_engine(m, N);
    const auto xseries = series::x_engine(m, N);
    r.checks.push_back(compare("useries == gtree", useries, tree));
    r.checks.push_back(compare("xseries == gtree", xseries, tree));
    r.checks.push_back(compare("useries == xseries", useries, xseries));
    if (N <= kOracleMax) r.checks.push_back(compare("oracle == gtree", oracle_sequence(m, N), tree));
    return r;
}

Report oracle(int m, int N) {
    require(m >= 1 && N >= 0 && N <= 13, "oracle suite needs m >= 1 and 0 <= N <= 13");
    Report r{"oracle", {}};
    const auto truth = oracle_sequence(m, N);
    r.checks.push_back(compare("gtree == oracle", gtree::sequence(m, N), truth));
    r.checks.push_back(compare("useries == oracle", series::u_engine(m, N), truth));
    r.checks.push_back(compare("xseries == oracle", series::x_engine(m, N), truth));
    std::vector<BigInt> serial;
    for (int n = 0; n <= N; ++n) serial.push_back(count_nonnesting(n, m));
    r.checks.push_back(compare("serial oracle == parallel oracle", serial, truth));
    return r;
}

Report catalan(int N) {
    require(N >= 0, "catalan needs N >= 0");
    Report r{"catalan", {}};
    const auto closed = formulas::catalan_closed_form(N);
    r.checks.push_back(compare("recurrence == closed form", formulas::catalan_recurrence(N), closed));
    r.checks.push_back({"convolution identity through n=" + std::to_string(N), formulas::catalan_convolution_check(N), {}});
    const int series_n = std::min(N, 8);
    r.checks.push_back({"m=1 kernel equation expands consistently through t^" + std::to_string(series_n),
                        formulas::m1_series_check(series_n), {}});
    r.checks.push_back(compare("gtree m=1 == closed form", gtree::sequence(1, N), closed));
    return r;
}

Report labels(int m, int N) {
    require(m >= 1 && N >= 0 && N <= kOracleMax, "labels suite needs m >= 1 and 0 <= N <= 10");
    Report r{"labels", {}};

    // Generating-tree multisets against object-level label counts.
    Check dist{"gtree label multisets == oracle label distributions for n <= " + std::to_string(N), true, {}};
    const auto levels = gtree::levels(m, N);
    for (int n = 0; n <= N && dist.passed; ++n) {
        const auto oracle_dist = label_distribution(n, m);
        if (oracle_dist != levels[static_cast<std::size_t>(n)].counts) {
            dist.passed = false;
            dist.detail = "first difference at n=" + std::to_string(n);
        }
    }
    r.checks.push_back(dist);

    // Children soundness, exhaustive over parents of size < min(N, 8) + 1.
    const int parent_max = std::min(N, 8);
    Check monotone{"labels are non-decreasing", true, {}};
    Check rule{"object-level children labels follow the children rule", true, {}};
    Check count{"each partition has a_m children", true, {}};
    Check blocked{"joining n+1 to a block of index >= a_m creates an (m+1)-nesting", true, {}};
    for (int n = 0; n <= parent_max; ++n) {
        for_each_partition(n, [&](const SetPartition& p) {
            if (max_nesting(p) > m) return;
            const Label l = label(p, m);
            if (monotone.passed && !l.is_non_decreasing()) {
                monotone.passed = false;
                monotone.detail = p.to_string() + " has label " + l.to_string();
            }
            const auto kids = children_partitions(p, m);
            if (count.passed && static_cast<int>(kids.size()) != l.last()) {
                count.passed = false;
                count.detail = p.to_string();
            }
            const auto expected = gtree::children(l);
            for (std::size_t i = 0; i < kids.size() && rule.passed; ++i) {
                const Label got = label(kids[i], m);
                if (i >= expected.size() || got != expected[i] || max_nesting(kids[i]) > m) {
                    rule.passed = false;
                    rule.detail = "child " + kids[i].to_string() + " of " + p.to_string() + " has label " + got.to_string();
                }
            }
            for (int block = l.last(); block <= p.block_count() && blocked.passed; ++block) {
                const auto q = p.joined_to_block(block);
                if (max_nesting(q) != m + 1) {
                    blocked.passed = false;
                    blocked.detail = q.to_string();
                }
            }
        });
    }
    r.checks.push_back(monotone);
    r.checks.push_back(rule);
    r.checks.push_back(count);
    r.checks.push_back(blocked);
    return r;
}

Report equidistribution(int m, int N) {
    require(m >= 1 && N >= 0 && N <= 13, "equidistribution needs m >= 1 and 0 <= N <= 13");
    Report r{"equidistribution", {}};
    std::vector<BigInt> nest, cross;
    for (int n = 0; n <= N; ++n) {
        nest.push_back(count_nonnesting(n, m));
        cross.push_back(count_noncrossing(n, m));
    }
    r.checks.push_back(compare("no (m+1)-nesting == no (m+1)-crossing, m=" + std::to_string(m), nest, cross));
    return r;
}

Report bell_prefix(int m, int N) {
    require(m >= 1 && N >= 0, "bell-prefix needs m >= 1 and N >= 0");
    Report r{"bell-prefix", {}};
    const auto seq = gtree::sequence(m, N);
    const auto bell = bell_numbers(N);
    const int prefix = std::min(N, 2 * m + 1);
    r.checks.push_back(compare("terms equal Bell numbers for n <= " + std::to_string(prefix),
                               std::vector<BigInt>(seq.begin(), seq.begin() + prefix + 1),
                               std::vector<BigInt>(bell.begin(), bell.begin() + prefix + 1)));
    const int edge = 2 * m + 2;
    if (edge <= N) {
        const BigInt want = bell[static_cast<std::size_t>(edge)] - 1;
        const BigInt& got = seq[static_cast<std::size_t>(edge)];
        r.checks.push_back({"term n=" + std::to_string(edge) + " equals Bell - 1 = " + to_decimal(want), got == want,
                            got == want ? std::string{} : "got " + to_decimal(got)});
    } else {
        r.checks.push_back({"term n=" + std::to_string(edge) + " beyond --terms", true, "not checked", true});
    }
    return r;
}

Report m2_formula(int N) {
    require(N >= 0, "m2-formula needs N >= 0");
    Report r{"m2-formula", {}};
    const auto table = formulas::CoefficientTable::from_gtree(2, std::max(N, 1));
    r.checks.push_back({"F_{n+1} = sum_k k F_n(k) and F_n = sum_k F_n(k)", table.is_consistent(), {}});

    std::vector<BigInt> closed, ct, second_m, second_ct, third_m, third_ct, full, printed;
    for (int n = 0; n <= N; ++n) {
        closed.push_back(formulas::m2_first_term(n));
        ct.push_back(formulas::ct_reference(formulas::Term::first, n, table));
        second_m.push_back(formulas::m2_second_term(n, table));
        second_ct.push_back(formulas::ct_reference(formulas::Term::second, n, table));
        third_m.push_back(formulas::m2_third_term(n, table));
        third_ct.push_back(formulas::ct_reference(formulas::Term::third, n, table));
        full.push_back(formulas::m2_full_expression(n, table));
        printed.push_back(formulas::m2_full_expression(n, table, formulas::Reading::as_printed));
    }
    r.checks.push_back(compare("first term: multinomial sum == constant-term oracle", closed, ct));
    r.checks.push_back(compare("second term: multinomial sum == constant-term oracle", second_m, second_ct));
    r.checks.push_back(compare("third term: multinomial sum == constant-term oracle", third_m, third_ct));
    std::vector<BigInt> truth(table.totals.begin(), table.totals.begin() + N + 1);
    r.checks.push_back(compare("assembled expression == F_n (generating tree)", full, truth));
    if (N <= table1::kColumns) r.checks.push_back(compare("assembled expression == table row m=2", full, table_row(2, N), 1));

    const auto first_diff = std::mismatch(printed.begin(), printed.end(), truth.begin());
    if (first_diff.first == printed.end()) {
        r.checks.push_back({"as-typeset index reading agrees with F_n", true, {}, true});
    } else {
        const auto n = first_diff.first - printed.begin();
        r.checks.push_back({"as-typeset index reading differs from F_n", true,
                            "first at n=" + std::to_string(n) + ": " + to_decimal(*first_diff.first) + " vs " +
                                to_decimal(*first_diff.second),
                            true});
    }
    return r;
}

} // namespace nestcount::verify
