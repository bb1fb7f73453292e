#include "nestcount/label.hpp"

#include <sstream>

namespace nestcount {

bool Label::is_non_decreasing() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i - 1] > values_[i]) return false;
    return true;
}

std::string Label::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    out += ']';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Label& label) { return os << label.to_string(); }

} // namespace nestcount
