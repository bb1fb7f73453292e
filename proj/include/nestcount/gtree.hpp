#pragma once

#include <map>
#include <vector>

#include "nestcount/bigint.hpp"
#include "nestcount/label.hpp"

namespace nestcount::gtree {

/// One level of the generating tree: how many partitions of size `level`
/// carry each label.
struct LabelMultiset {
    int m = 1;
    int level = 0;
    std::map<Label, BigInt> counts;

    static LabelMultiset root(int m);
    BigInt total() const;
};

/// Labels of the a_m children of a node labelled `l`: the singleton child
/// first, then one child per block index 1..a_m-1.
std::vector<Label> children(const Label& l);

/// Serial reference step.
LabelMultiset next_level(const LabelMultiset& ms);
/// OpenMP step: parent keys are split across threads and the per-thread maps
/// merged in a fixed order. Equal to next_level for any thread count.
LabelMultiset next_level_parallel(const LabelMultiset& ms);

/// Level n multiset for n = 0..N.
std::vector<LabelMultiset> levels(int m, int N, bool parallel = true);

/// Entry n is the number of partitions of [n] with no (m+1)-nesting.
std::vector<BigInt> sequence(int m, int N, bool parallel = true);

/// Distribution of a_j over a level. Throws std::out_of_range unless 1 <= j <= m.
std::map<int, BigInt> marginal(const LabelMultiset& ms, int j);

} // namespace nestcount::gtree
