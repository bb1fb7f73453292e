#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nestcount::verify {

struct Check {
    std::string name;
    bool passed = true;
    /// First counterexample on failure, or an informational note.
    std::string detail;
    /// Informational lines never fail a suite.
    bool informational = false;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    /// One "PASS|FAIL|INFO  name  detail" line per check and a summary line.
    std::string render() const;
};

const std::vector<std::string>& suite_names();

/// Runs the named suite for parameter m and size bound N. Throws
/// std::invalid_argument for an unknown suite or out-of-range parameters.
Report run_suite(std::string_view suite, int m, int N);

// The individual suites, exposed for the acceptance binary.
Report table1(int m, int N);
Report cross_engine(int m, int N);
Report oracle(int m, int N);
Report catalan(int N);
Report labels(int m, int N);
Report equidistribution(int m, int N);
Report bell_prefix(int m, int N);
Report m2_formula(int N);

} // namespace nestcount::verify
