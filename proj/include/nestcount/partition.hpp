#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestcount/bigint.hpp"
#include "nestcount/label.hpp"

namespace nestcount {

/// A set partition of [n], stored as its restricted-growth string:
/// rgs[i] is the (1-based) index of the block containing i+1, blocks being
/// numbered by first occurrence.
class SetPartition {
public:
    SetPartition() = default;
    /// Throws std::invalid_argument if `rgs` is not a restricted-growth string.
    explicit SetPartition(std::vector<int> rgs);
    /// Builds from explicit blocks of 1-based elements, e.g. {{1},{2,5,6,8},{3,7},{4}}.
    static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);

    int size() const { return static_cast<int>(rgs_.size()); }
    int block_count() const { return block_count_; }
    const std::vector<int>& rgs() const { return rgs_; }

    /// Blocks as sorted element lists, in first-occurrence order.
    std::vector<std::vector<int>> blocks() const;
    /// Blocks ordered by maximal element, descending (block 1 holds n).
    std::vector<std::vector<int>> blocks_by_max_desc() const;

    /// Partition of [n+1] with n+1 added as a singleton.
    SetPartition with_singleton() const;
    /// Partition of [n+1] with n+1 joined to `block` (1-based, descending-max order).
    SetPartition joined_to_block(int block) const;

    /// "1|2 5 6 8|3 7|4"
    std::string to_string() const;

    auto operator<=>(const SetPartition& other) const { return rgs_ <=> other.rgs_; }
    bool operator==(const SetPartition& other) const { return rgs_ == other.rgs_; }

private:
    std::vector<int> rgs_;
    int block_count_ = 0;
};

struct Arc {
    int open;
    int close;
    auto operator<=>(const Arc&) const = default;
};

/// Standard representation: arcs join consecutive elements of each block.
struct ArcDiagram {
    int n = 0;
    std::vector<Arc> arcs; ///< sorted lexicographically
};

/// Iterates restricted-growth strings of length n in lexicographic order.
/// An optional fixed prefix restricts iteration to its completions.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n, std::vector<int> prefix = {});

    /// Returns the current partition and advances, or nullopt when exhausted.
    std::optional<SetPartition> next();

private:
    bool advance();

    int n_;
    std::size_t fixed_;
    std::vector<int> rgs_;
    std::vector<int> prefix_max_; ///< prefix_max_[i] = max(rgs_[0..i])
    bool done_ = false;
};

/// Calls `visit` on every partition of [n], exactly once each.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit);

/// All valid restricted-growth prefixes of length `len` (len <= n).
std::vector<std::vector<int>> rgs_prefixes(int len);

ArcDiagram standard_representation(const SetPartition& p);

/// Longest strict-containment chain over the arcs.
int max_nesting(const ArcDiagram& d);
/// Largest pairwise-crossing family.
int max_crossing(const ArcDiagram& d);
inline int max_nesting(const SetPartition& p) { return max_nesting(standard_representation(p)); }
inline int max_crossing(const SetPartition& p) { return max_crossing(standard_representation(p)); }

/// For each arc, the length of the longest nesting chain with that arc outermost.
std::vector<int> nesting_depths(const ArcDiagram& d);

Label label(const SetPartition& p, int m);

/// Singleton extension followed by joins to blocks 1..a_m-1.
/// Throws std::invalid_argument if max_nesting(p) > m.
std::vector<SetPartition> children_partitions(const SetPartition& p, int m);

/// Upper bound on n accepted by the exhaustive routines below.
struct OracleLimits {
    int max_n = 13;
};

BigInt count_nonnesting(int n, int m, OracleLimits limits = {});
BigInt count_noncrossing(int n, int m, OracleLimits limits = {});

/// OpenMP variant of count_nonnesting; splits the enumeration by rgs prefix.
BigInt count_nonnesting_parallel(int n, int m, OracleLimits limits = {});

std::map<Label, BigInt> label_distribution(int n, int m, OracleLimits limits = {});

/// Joint distribution of (max_nesting, max_crossing) over partitions of [n].
std::map<std::pair<int, int>, BigInt> nesting_crossing_distribution(int n, OracleLimits limits = {});

} // namespace nestcount
