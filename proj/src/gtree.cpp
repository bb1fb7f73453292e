#include "nestcount/gtree.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nestcount::gtree {

LabelMultiset LabelMultiset::root(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    LabelMultiset ms;
    ms.m = m;
    ms.counts.emplace(Label::root(m), 1);
    return ms;
}

BigInt LabelMultiset::total() const {
    BigInt t = 0;
    for (const auto& [l, c] : counts) t += c;
    return t;
}

std::vector<Label> children(const Label& l) {
    const int m = l.m();
    std::vector<Label> out;
    out.reserve(static_cast<std::size_t>(l.last()));

    std::vector<int> a = l.values();
    std::vector<int> bumped(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) bumped[i] = a[i] + 1;
    out.emplace_back(bumped);

    // Block index `block` lies in [a_{j-1}, a_j - 1] for a unique j (a_0 = 1):
    // entries before j are bumped, entry j becomes block+1, the rest stay.
    int j = 1;
    for (int block = 1; block < l.last(); ++block) {
        while (block > l[j] - 1) ++j;
        std::vector<int> child(a.size());
        for (int i = 1; i < j; ++i) child[static_cast<std::size_t>(i - 1)] = l[i] + 1;
        child[static_cast<std::size_t>(j - 1)] = block + 1;
        for (int i = j + 1; i <= m; ++i) child[static_cast<std::size_t>(i - 1)] = l[i];
        out.emplace_back(std::move(child));
    }
    return out;
}

LabelMultiset next_level(const LabelMultiset& ms) {
    LabelMultiset out;
    out.m = ms.m;
    out.level = ms.level + 1;
    for (const auto& [l, c] : ms.counts)
        for (auto& child : children(l)) out.counts[std::move(child)] += c;
    return out;
}

LabelMultiset next_level_parallel(const LabelMultiset& ms) {
    std::vector<const std::pair<const Label, BigInt>*> parents;
    parents.reserve(ms.counts.size());
    for (const auto& entry : ms.counts) parents.push_back(&entry);

    int workers = 1;
#ifdef _OPENMP
    workers = omp_get_max_threads();
#endif
    const auto chunks = static_cast<std::int64_t>(std::min<std::size_t>(parents.size(), static_cast<std::size_t>(workers) * 4));
    std::vector<std::map<Label, BigInt>> partial(static_cast<std::size_t>(std::max<std::int64_t>(chunks, 1)));

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t begin = parents.size() * static_cast<std::size_t>(c) / static_cast<std::size_t>(chunks);
        const std::size_t end = parents.size() * static_cast<std::size_t>(c + 1) / static_cast<std::size_t>(chunks);
        auto& local = partial[static_cast<std::size_t>(c)];
        for (std::size_t i = begin; i < end; ++i)
            for (auto& child : children(parents[i]->first)) local[std::move(child)] += parents[i]->second;
    }

    LabelMultiset out;
    out.m = ms.m;
    out.level = ms.level + 1;
    out.counts = std::move(partial.front());
    for (std::size_t c = 1; c < partial.size(); ++c)
        for (auto& [l, v] : partial[c]) out.counts[l] += v;
    return out;
}

std::vector<LabelMultiset> levels(int m, int N, bool parallel) {
    if (N < 0) throw std::invalid_argument("N must be non-negative");
    std::vector<LabelMultiset> out{LabelMultiset::root(m)};
    for (int n = 0; n < N; ++n)
        out.push_back(parallel ? next_level_parallel(out.back()) : next_level(out.back()));
    return out;
}

std::vector<BigInt> sequence(int m, int N, bool parallel) {
    if (N < 0) throw std::invalid_argument("N must be non-negative");
    std::vector<BigInt> out;
    LabelMultiset ms = LabelMultiset::root(m);
    out.push_back(ms.total());
    for (int n = 0; n < N; ++n) {
        ms = parallel ? next_level_parallel(ms) : next_level(ms);
        out.push_back(ms.total());
    }
    return out;
}

std::map<int, BigInt> marginal(const LabelMultiset& ms, int j) {
    if (j < 1 || j > ms.m) throw std::out_of_range("label index out of range");
    std::map<int, BigInt> out;
    for (const auto& [l, c] : ms.counts) out[l[j]] += c;
    return out;
}

} // namespace nestcount::gtree
