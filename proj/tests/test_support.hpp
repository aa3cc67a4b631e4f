#ifndef OPTOMECH_TEST_SUPPORT_HPP
#define OPTOMECH_TEST_SUPPORT_HPP

#include <complex>
#include <random>

#include <doctest.h>

namespace optomech::test {

constexpr double kPi = 3.141592653589793238462643383279502884;

inline bool close_rel(double a, double b, double tol)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= tol * scale;
}

inline bool close_abs_or_rel(std::complex<double> a, std::complex<double> b, double tol)
{
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline std::complex<double> random_unit_disk(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const std::complex<double> z{u(rng), u(rng)};
        if (std::abs(z) <= 1.0)
            return z;
    }
}

} // namespace optomech::test

#endif
