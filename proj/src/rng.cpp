#include "spectra/rng.hpp"

#include <cmath>
#include <numbers>

namespace spectra {

std::pair<double, double> Rng::normal_pair(double sigma) {
    // u1 in (0, 1] so that log(u1) is finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = sigma * std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace spectra
