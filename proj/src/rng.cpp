#include "ghzw/rng.hpp"

#include <cmath>
#include <numbers>

namespace ghzw {

double GaussianStream::next() {
    if (spare_) {
        const double z = *spare_;
        spare_.reset();
        return z;
    }
    constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
    // u1 in (0, 1] keeps the log finite; u2 in [0, 1).
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * kInv53;
    const double u2 = static_cast<double>(engine_() >> 11) * kInv53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    return r * std::cos(angle);
}

}  // namespace ghzw
