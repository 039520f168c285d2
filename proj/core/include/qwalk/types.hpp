#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Core>

namespace qwalk {

using Complex = std::complex<double>;

/// Four chirality components of the walker at one lattice site.
using Vector4 = Eigen::Matrix<Complex, 4, 1>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;

using Position = std::int64_t;
using TimeStep = std::int64_t;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace qwalk
