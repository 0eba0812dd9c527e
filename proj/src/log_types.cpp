#include "wli/log_types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wli {

void WellLog::validate(double spacing_tol) const {
    if (readings.size() < 2) {
        throw std::invalid_argument("well log needs at least 2 samples");
    }
    if (depths.size() != readings.size()) {
        throw std::invalid_argument("depth/reading count mismatch");
    }
    if (!(interval > 0.0)) {
        throw std::invalid_argument("sample interval must be positive");
    }
    for (std::size_t i = 0; i < readings.size(); ++i) {
        if (!std::isfinite(readings[i]) || !std::isfinite(depths[i])) {
            throw std::invalid_argument("non-finite value at sample " +
                                        std::to_string(i));
        }
        if (i > 0) {
            double step = depths[i] - depths[i - 1];
            if (std::abs(step - interval) > spacing_tol) {
                throw std::invalid_argument(
                    "non-uniform depth spacing at sample " + std::to_string(i));
            }
        }
    }
}

}  // namespace wli
