#include <doctest.h>

#include "nestcount/formulas.hpp"
#include "nestcount/gtree.hpp"
#include "nestcount/table1.hpp"

using namespace nestcount;
using namespace nestcount::formulas;

TEST_CASE("Catalan recurrence") {
    const auto F = catalan_recurrence(30);
    CHECK(F[0] == 1);
    CHECK(F[5] == 42);
    CHECK(F[15] == 9694845);
    CHECK(F == catalan_closed_form(30));
    CHECK(F == std::vector<BigInt>(gtree::sequence(1, 30)));
}

TEST_CASE("Catalan convolution identity") {
    CHECK(catalan_convolution_check(0));
    // n = 2: 1*2 + 2*1 + 6*1 = 10 = C(6,3)/2
    CHECK(binomial(6, 3) / 2 == 10);
    CHECK(catalan_convolution_check(2));
    CHECK(catalan_convolution_check(30));
}

TEST_CASE("m = 1 kernel equation") {
    CHECK(m1_series_check(0));
    CHECK(m1_series_check(8));
    auto perturbed = catalan_closed_form(8);
    perturbed[3] += 1;
    CHECK_FALSE(m1_series_check(8, perturbed));
    CHECK_THROWS_AS(m1_series_check(8, std::vector<BigInt>{1, 1}), std::invalid_argument);
}

TEST_CASE("first term against the constant-term oracle") {
    // Frozen from a direct Laurent expansion of h^n s^{n+1} (1 - x1/x2).
    const std::vector<BigInt> frozen{1, 3, 13, 69, 411, 2633, 17739, 124029, 892327};
    for (int n = 0; n < static_cast<int>(frozen.size()); ++n) {
        CHECK(ct_reference_first(n) == frozen[static_cast<std::size_t>(n)]);
        CHECK(m2_first_term(n) == frozen[static_cast<std::size_t>(n)]);
    }
    for (int n = 0; n <= 12; ++n) CHECK(m2_first_term(n) == ct_reference_first(n));
}

TEST_CASE("as-typeset first term drops a multinomial factor") {
    CHECK(m2_first_term_as_printed(0) == 1);
    CHECK(m2_first_term_as_printed(1) == 2);
    CHECK(m2_first_term_as_printed(1) != ct_reference_first(1));
}

TEST_CASE("coefficient table") {
    const auto table = CoefficientTable::from_gtree(2, 20);
    CHECK(table.is_consistent());
    CHECK(table.at(0, 1) == 1);
    CHECK(table.at(1, 2) == 1);
    CHECK(table.at(1, 1) == 0);
    auto broken = table;
    broken.by_last[4][3] += 1;
    CHECK_FALSE(broken.is_consistent());
}

TEST_CASE("second and third terms against the constant-term oracle") {
    const auto table = CoefficientTable::from_gtree(2, 10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(m2_second_term(n, table) == ct_reference(Term::second, n, table));
        CHECK(m2_third_term(n, table) == ct_reference(Term::third, n, table));
        CHECK(ct_reference(Term::first, n, table) == m2_first_term(n));
    }
    CHECK_THROWS_AS(ct_reference(Term::second, 12, table), std::invalid_argument);
}

TEST_CASE("assembled m = 2 expression reproduces the counts") {
    const auto table = CoefficientTable::from_gtree(2, 10);
    CHECK(m2_full_expression(0, table) == 1);
    CHECK(m2_full_expression(1, table) == 1);
    CHECK(m2_full_expression(8, table) == 3930);
    CHECK(m2_full_expression(10, table) == 97566);
    for (int n = 1; n <= 10; ++n) CHECK(to_decimal(m2_full_expression(n, table)) == table1::value(2, n));
    // Assembled identity through the oracle: first - second - third = F_n.
    for (int n = 0; n <= 10; ++n)
        CHECK(ct_reference(Term::first, n, table) - ct_reference(Term::second, n, table) -
                  ct_reference(Term::third, n, table) ==
              table.totals[static_cast<std::size_t>(n)]);
}

TEST_CASE("as-typeset assembled expression diverges") {
    const auto table = CoefficientTable::from_gtree(2, 10);
    CHECK(m2_full_expression(2, table, Reading::as_printed) == 2);
    CHECK(m2_full_expression(3, table, Reading::as_printed) != 5);
}
