#include "rebalance/strategy.hpp"

#include "rebalance/error.hpp"

#include <cmath>
#include <string>

namespace rebalance {

size_t resolve_counts(SamplingStrategy strategy, size_t n_min, size_t n_maj,
                      Direction direction) {
    const double ratio = strategy.target_ratio;
    if (!(ratio > 0.0) || ratio > 1.0)
        fail(Errc::InvalidRatio, "target_ratio must be in (0, 1], got " + std::to_string(ratio));
    if (n_min < 1 || n_maj < 1)
        fail(Errc::EmptyClass, "resolve_counts requires at least one row per class");

    if (direction == Direction::Under) {
        const auto target = static_cast<size_t>(std::floor(static_cast<double>(n_min) / ratio));
        if (target > n_maj)
            fail(Errc::AlreadySatisfied,
                 "undersampling target " + std::to_string(target) + " exceeds majority count " +
                     std::to_string(n_maj) + " (ratio already reached)");
        return target;
    }
    const auto target = static_cast<size_t>(std::floor(static_cast<double>(n_maj) * ratio));
    if (target < n_min)
        fail(Errc::AlreadySatisfied,
             "oversampling target " + std::to_string(target) + " is below minority count " +
                 std::to_string(n_min) + " (ratio already reached)");
    return target;
}

}  // namespace rebalance
