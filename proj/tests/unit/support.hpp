#pragma once

#include <steinerhat/error.hpp>
#include <steinerhat/geometry.hpp>

#include <gtest/gtest.h>

#include <random>

namespace steinerhat::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'1846;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(kSeed ^ salt); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline ::testing::AssertionResult near(Point2 p, Point2 q, double tol) {
    const double d = distance(p, q);
    if (d <= tol) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "(" << p.x << ", " << p.y << ") vs (" << q.x << ", " << q.y
                                         << "): distance " << d << " > " << tol;
}

template <typename F>
::testing::AssertionResult throws_code(F&& f, ErrorCode code) {
    try {
        f();
    } catch (const GeometryError& ex) {
        if (ex.code() == code) return ::testing::AssertionSuccess();
        return ::testing::AssertionFailure() << "threw " << to_string(ex.code()) << ", expected " << to_string(code);
    }
    return ::testing::AssertionFailure() << "did not throw " << to_string(code);
}

}  // namespace steinerhat::testing
