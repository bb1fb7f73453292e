#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace nestcount {

/// The nesting label (a_1, ..., a_m) of a partition: a_j is one plus the
/// number of blocks ending strictly right of the minimal vertex of the
/// rightmost j-nesting, or one plus the block count when there is no
/// j-nesting. Always non-decreasing; a_m is the number of children in the
/// generating tree.
class Label {
public:
    Label() = default;
    Label(std::initializer_list<int> values) : values_(values) {}
    explicit Label(std::vector<int> values) : values_(std::move(values)) {}

    /// Label of the empty partition, (1, ..., 1).
    static Label root(int m) { return Label(std::vector<int>(static_cast<std::size_t>(m), 1)); }

    int m() const { return static_cast<int>(values_.size()); }
    /// 1-based access, matching the usual a_j indexing.
    int operator[](int j) const { return values_[static_cast<std::size_t>(j - 1)]; }
    int last() const { return values_.back(); }
    const std::vector<int>& values() const { return values_; }

    bool is_non_decreasing() const;

    /// "[3,4,5]"
    std::string to_string() const;

    auto operator<=>(const Label&) const = default;
    bool operator==(const Label&) const = default;

private:
    std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Label& label);

struct LabelHash {
    std::size_t operator()(const Label& label) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : label.values()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace nestcount
