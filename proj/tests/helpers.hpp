#pragma once

#include <cmath>
#include <complex>

#include "susyces/error.hpp"

namespace testing {

inline double rel(std::complex<double> got, std::complex<double> want) { return std::abs(got - want) / std::abs(want); }

inline double rel1(std::complex<double> got, std::complex<double> want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Returns the code of the susyces::Error thrown by f, or nothing if none was thrown.
template <class F>
bool throws_code(F&& f, susyces::ErrorCode code)
{
    try {
        (void)f();
    } catch (const susyces::Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace testing
