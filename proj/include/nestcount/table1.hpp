#pragma once

#include <array>
#include <string_view>

namespace nestcount::table1 {

inline constexpr int kRows = 6;    ///< m = 1..6
inline constexpr int kColumns = 15; ///< n = 1..15

/// Partitions of [n] with no (m+1)-nesting, n = 1..15, one row per m.
inline constexpr std::array<std::array<std::string_view, kColumns>, kRows> kValues{{
    {"1", "2", "5", "14", "42", "132", "429", "1430", "4862", "16796", "58786", "208012", "742900",
     "2674440", "9694845"},
    {"1", "2", "5", "15", "52", "202", "859", "3930", "19095", "97566", "520257", "2877834", "16434105",
     "96505490", "580864901"},
    {"1", "2", "5", "15", "52", "203", "877", "4139", "21119", "115495", "671969", "4132936", "26723063",
     "180775027", "1274056792"},
    {"1", "2", "5", "15", "52", "203", "877", "4140", "21147", "115974", "678530", "4212654", "27627153",
     "190624976", "1378972826"},
    {"1", "2", "5", "15", "52", "203", "877", "4140", "21147", "115975", "678570", "4213596", "27644383",
     "190897649", "1382919174"},
    {"1", "2", "5", "15", "52", "203", "877", "4140", "21147", "115975", "678570", "4213597", "27644437",
     "190899321", "1382958475"},
}};

/// OEIS identifiers of the rows (metadata only).
inline constexpr std::array<std::string_view, kRows> kOeis{"A000108", "A108304", "A108305",
                                                           "A192126", "A192127", "A192128"};

/// Entry for (m, n), 1 <= m <= 6, 1 <= n <= 15.
inline std::string_view value(int m, int n) {
    return kValues.at(static_cast<std::size_t>(m - 1)).at(static_cast<std::size_t>(n - 1));
}

} // namespace nestcount::table1
