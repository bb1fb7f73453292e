#include "nestcount/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nestcount {

namespace {

// Arcs of the standard representation, read directly off an rgs.
void arcs_from_rgs(std::span<const int> rgs, std::vector<Arc>& arcs, std::vector<int>& last_seen) {
    arcs.clear();
    last_seen.assign(rgs.size() + 1, 0);
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        int b = rgs[i];
        int v = static_cast<int>(i) + 1;
        if (last_seen[static_cast<std::size_t>(b)] != 0) arcs.push_back({last_seen[static_cast<std::size_t>(b)], v});
        last_seen[static_cast<std::size_t>(b)] = v;
    }
    std::sort(arcs.begin(), arcs.end());
}

int max_nesting_of(std::span<const Arc> arcs, std::vector<int>& depth) {
    // Arcs are sorted by open; a nested arc opens later, so fill from the right.
    const std::size_t k = arcs.size();
    depth.assign(k, 1);
    int best = 0;
    for (std::size_t a = k; a-- > 0;) {
        for (std::size_t b = a + 1; b < k; ++b)
            if (arcs[a].open < arcs[b].open && arcs[b].close < arcs[a].close)
                depth[a] = std::max(depth[a], depth[b] + 1);
        best = std::max(best, depth[a]);
    }
    return best;
}

void check_limit(int n, const OracleLimits& limits) {
    if (n < 0) throw std::invalid_argument("partition size must be non-negative");
    if (n > limits.max_n)
        throw ResourceLimitError("exhaustive enumeration refused for n = " + std::to_string(n) +
                                 " (configured bound is n <= " + std::to_string(limits.max_n) + ")");
}

// Visits every rgs of length n extending `prefix` in lexicographic order.
template <typename Visit>
void visit_rgs(int n, std::span<const int> prefix, Visit&& visit) {
    if (n == 0) {
        visit(std::span<const int>{});
        return;
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 1);
    std::vector<int> pmax(static_cast<std::size_t>(n), 1);
    std::copy(prefix.begin(), prefix.end(), rgs.begin());
    for (std::size_t i = 0; i < rgs.size(); ++i)
        pmax[i] = std::max(rgs[i], i ? pmax[i - 1] : 0);
    const std::size_t fixed = std::max<std::size_t>(prefix.size(), 1);
    while (true) {
        visit(std::span<const int>(rgs));
        std::size_t i = rgs.size();
        while (i-- > fixed) {
            if (rgs[i] <= pmax[i - 1]) break;
        }
        if (i < fixed || i >= rgs.size()) return;
        ++rgs[i];
        pmax[i] = std::max(pmax[i - 1], rgs[i]);
        for (std::size_t r = i + 1; r < rgs.size(); ++r) {
            rgs[r] = 1;
            pmax[r] = pmax[r - 1];
        }
    }
}

struct ScratchStats {
    std::vector<Arc> arcs;
    std::vector<int> seen;
    std::vector<int> depth;
    int nesting(std::span<const int> rgs) {
        arcs_from_rgs(rgs, arcs, seen);
        return max_nesting_of(arcs, depth);
    }
    int crossing(std::span<const int> rgs) {
        arcs_from_rgs(rgs, arcs, seen);
        return max_crossing(ArcDiagram{static_cast<int>(rgs.size()), arcs});
    }
};

} // namespace

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
    int mx = 0;
    for (int r : rgs_) {
        if (r < 1 || r > mx + 1) throw std::invalid_argument("not a restricted-growth string");
        mx = std::max(mx, r);
    }
    block_count_ = mx;
}

SetPartition SetPartition::from_blocks(const std::vector<std::vector<int>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (blocks[bi].empty()) throw std::invalid_argument("empty block");
        for (int e : blocks[bi]) {
            if (e < 1 || e > n || owner[static_cast<std::size_t>(e)] != -1)
                throw std::invalid_argument("blocks do not partition [n]");
            owner[static_cast<std::size_t>(e)] = static_cast<int>(bi);
        }
    }
    std::vector<int> relabel(blocks.size(), 0);
    std::vector<int> rgs;
    int next = 0;
    for (int e = 1; e <= n; ++e) {
        auto& r = relabel[static_cast<std::size_t>(owner[static_cast<std::size_t>(e)])];
        if (r == 0) r = ++next;
        rgs.push_back(r);
    }
    return SetPartition(std::move(rgs));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
    for (std::size_t i = 0; i < rgs_.size(); ++i)
        out[static_cast<std::size_t>(rgs_[i] - 1)].push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<std::vector<int>> SetPartition::blocks_by_max_desc() const {
    auto out = blocks();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.back() > b.back(); });
    return out;
}

SetPartition SetPartition::with_singleton() const {
    auto rgs = rgs_;
    rgs.push_back(block_count_ + 1);
    return SetPartition(std::move(rgs));
}

SetPartition SetPartition::joined_to_block(int block) const {
    if (block < 1 || block > block_count_) throw std::out_of_range("block index out of range");
    auto ordered = blocks_by_max_desc();
    int target = rgs_[static_cast<std::size_t>(ordered[static_cast<std::size_t>(block - 1)].front() - 1)];
    auto rgs = rgs_;
    rgs.push_back(target);
    return SetPartition(std::move(rgs));
}

std::string SetPartition::to_string() const {
    if (rgs_.empty()) return "{}";
    std::string out;
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (b) out += '|';
        for (std::size_t i = 0; i < bs[b].size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(bs[b][i]);
        }
    }
    return out;
}

PartitionEnumerator::PartitionEnumerator(int n, std::vector<int> prefix)
    : n_(n), fixed_(std::max<std::size_t>(prefix.size(), 1)) {
    if (n < 0) throw std::invalid_argument("partition size must be non-negative");
    if (static_cast<int>(prefix.size()) > n) throw std::invalid_argument("prefix longer than n");
    if (n == 0) return;
    SetPartition check(prefix); // validates the prefix
    rgs_.assign(static_cast<std::size_t>(n), 1);
    std::copy(prefix.begin(), prefix.end(), rgs_.begin());
    prefix_max_.resize(rgs_.size());
    for (std::size_t i = 0; i < rgs_.size(); ++i)
        prefix_max_[i] = std::max(rgs_[i], i ? prefix_max_[i - 1] : 0);
}

bool PartitionEnumerator::advance() {
    std::size_t i = rgs_.size();
    while (i-- > fixed_) {
        if (rgs_[i] <= prefix_max_[i - 1]) break;
    }
    if (i < fixed_ || i >= rgs_.size()) return false;
    ++rgs_[i];
    prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
    for (std::size_t r = i + 1; r < rgs_.size(); ++r) {
        rgs_[r] = 1;
        prefix_max_[r] = prefix_max_[r - 1];
    }
    return true;
}

std::optional<SetPartition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    SetPartition current(rgs_);
    done_ = n_ == 0 || !advance();
    return current;
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit) {
    PartitionEnumerator it(n);
    while (auto p = it.next()) visit(*p);
}

std::vector<std::vector<int>> rgs_prefixes(int len) {
    std::vector<std::vector<int>> out;
    visit_rgs(len, {}, [&](std::span<const int> rgs) { out.emplace_back(rgs.begin(), rgs.end()); });
    return out;
}

ArcDiagram standard_representation(const SetPartition& p) {
    ArcDiagram d{p.size(), {}};
    std::vector<int> seen;
    arcs_from_rgs(p.rgs(), d.arcs, seen);
    return d;
}

std::vector<int> nesting_depths(const ArcDiagram& d) {
    std::vector<int> depth;
    max_nesting_of(d.arcs, depth);
    return depth;
}

int max_nesting(const ArcDiagram& d) {
    std::vector<int> depth;
    return max_nesting_of(d.arcs, depth);
}

int max_crossing(const ArcDiagram& d) {
    // Sorted by open, a crossing family has increasing closes and its last open
    // precedes its first close. memo[first][last] = longest family that starts
    // at `first` and continues from `last`.
    const auto& arcs = d.arcs;
    const std::size_t k = arcs.size();
    if (k == 0) return 0;
    std::vector<int> memo(k * k, 0);
    std::function<int(std::size_t, std::size_t)> extend = [&](std::size_t first, std::size_t last) -> int {
        int& slot = memo[first * k + last];
        if (slot) return slot;
        int best = 1;
        for (std::size_t next = last + 1; next < k; ++next) {
            if (arcs[next].open > arcs[last].open && arcs[next].close > arcs[last].close &&
                arcs[next].open < arcs[first].close)
                best = std::max(best, 1 + extend(first, next));
        }
        return slot = best;
    };
    int best = 0;
    for (std::size_t first = 0; first < k; ++first) best = std::max(best, extend(first, first));
    return best;
}

Label label(const SetPartition& p, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    const ArcDiagram d = standard_representation(p);
    const std::vector<int> depth = nesting_depths(d);
    std::vector<int> block_max;
    for (const auto& b : p.blocks()) block_max.push_back(b.back());

    std::vector<int> a(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        // Minimal vertex of the rightmost j-nesting: the largest open among
        // arcs heading a chain of length >= j. Ties share the same vertex.
        int rightmost = 0;
        for (std::size_t i = 0; i < d.arcs.size(); ++i)
            if (depth[i] >= j) rightmost = std::max(rightmost, d.arcs[i].open);
        int count = 0;
        if (rightmost == 0) {
            count = p.block_count();
        } else {
            for (int mx : block_max)
                if (mx > rightmost) ++count;
        }
        a[static_cast<std::size_t>(j - 1)] = 1 + count;
    }
    return Label(std::move(a));
}

std::vector<SetPartition> children_partitions(const SetPartition& p, int m) {
    if (max_nesting(p) > m)
        throw std::invalid_argument("partition " + p.to_string() + " has a nesting longer than m");
    const Label l = label(p, m);
    std::vector<SetPartition> out;
    out.reserve(static_cast<std::size_t>(l.last()));
    out.push_back(p.with_singleton());
    for (int block = 1; block < l.last(); ++block) out.push_back(p.joined_to_block(block));
    return out;
}

BigInt count_nonnesting(int n, int m, OracleLimits limits) {
    check_limit(n, limits);
    ScratchStats scratch;
    std::uint64_t count = 0;
    visit_rgs(n, {}, [&](std::span<const int> rgs) {
        if (scratch.nesting(rgs) <= m) ++count;
    });
    return BigInt(static_cast<unsigned long>(count));
}

BigInt count_noncrossing(int n, int m, OracleLimits limits) {
    check_limit(n, limits);
    ScratchStats scratch;
    std::uint64_t count = 0;
    visit_rgs(n, {}, [&](std::span<const int> rgs) {
        if (scratch.crossing(rgs) <= m) ++count;
    });
    return BigInt(static_cast<unsigned long>(count));
}

BigInt count_nonnesting_parallel(int n, int m, OracleLimits limits) {
    check_limit(n, limits);
    const auto prefixes = rgs_prefixes(std::min(n, 6));
    std::uint64_t total = 0;
    const auto jobs = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::int64_t i = 0; i < jobs; ++i) {
        ScratchStats scratch;
        std::uint64_t local = 0;
        visit_rgs(n, prefixes[static_cast<std::size_t>(i)], [&](std::span<const int> rgs) {
            if (scratch.nesting(rgs) <= m) ++local;
        });
        total += local;
    }
    return BigInt(static_cast<unsigned long>(total));
}

std::map<Label, BigInt> label_distribution(int n, int m, OracleLimits limits) {
    check_limit(n, limits);
    std::map<Label, BigInt> out;
    for_each_partition(n, [&](const SetPartition& p) {
        if (max_nesting(p) <= m) out[label(p, m)] += 1;
    });
    return out;
}

std::map<std::pair<int, int>, BigInt> nesting_crossing_distribution(int n, OracleLimits limits) {
    check_limit(n, limits);
    ScratchStats scratch;
    std::map<std::pair<int, int>, std::uint64_t> counts;
    visit_rgs(n, {}, [&](std::span<const int> rgs) {
        int nest = scratch.nesting(rgs);
        int cross = max_crossing(ArcDiagram{static_cast<int>(rgs.size()), scratch.arcs});
        ++counts[{nest, cross}];
    });
    std::map<std::pair<int, int>, BigInt> out;
    for (const auto& [key, c] : counts) out[key] = BigInt(static_cast<unsigned long>(c));
    return out;
}

} // namespace nestcount
