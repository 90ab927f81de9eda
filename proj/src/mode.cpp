#include "fourfold/mode.hpp"

#include <sstream>
#include <stdexcept>

namespace fourfold {

std::string to_string(const Mode& mode) {
    return mode.spatial + to_char(mode.pol);
}

OccupationVector::OccupationVector(std::initializer_list<std::pair<Mode, int>> counts) {
    for (const auto& [mode, n] : counts) {
        if (n < 0) {
            throw std::invalid_argument("negative photon count on " + to_string(mode));
        }
        if (n > 0) {
            counts_[mode] += n;
        }
    }
}

int OccupationVector::count(const Mode& mode) const {
    auto it = counts_.find(mode);
    return it == counts_.end() ? 0 : it->second;
}

int OccupationVector::total() const {
    int sum = 0;
    for (const auto& [mode, n] : counts_) {
        sum += n;
    }
    return sum;
}

OccupationVector OccupationVector::with_added(const Mode& mode, int delta) const {
    OccupationVector out = *this;
    int n = out.count(mode) + delta;
    if (n < 0) {
        throw std::invalid_argument("photon count below zero on " + to_string(mode));
    }
    if (n == 0) {
        out.counts_.erase(mode);
    } else {
        out.counts_[mode] = n;
    }
    return out;
}

int OccupationVector::spatial_count(const std::string& spatial) const {
    return count({spatial, Pol::H}) + count({spatial, Pol::V});
}

std::string OccupationVector::to_string() const {
    std::ostringstream out;
    out << '|';
    bool first = true;
    for (const auto& [mode, n] : counts_) {
        if (!first) {
            out << ' ';
        }
        out << n << '_' << fourfold::to_string(mode);
        first = false;
    }
    out << '>';
    return out.str();
}

} // namespace fourfold
