// SPDX-License-Identifier: Apache-2.0
//
// mmid - millimeter-wave radar imaging toolkit
// Copyright (C) 2026 The mmid authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mmid {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

// Default device constants: 0.28 ns tap spacing, 60 GHz carrier.
inline constexpr double kDefaultTapSpacing = 0.28e-9;
inline constexpr double kDefaultCarrier = 60e9;

/// Raised for malformed or inconsistent input data (bad files, mismatched
/// dimensions, scenes outside the simulated window). The CLI maps it to exit
/// code 2.
class DataError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Range in meters covered by one tap: c * dtau / 2.
inline double tap_to_range(double tap, double tap_spacing)
{
    return tap * kSpeedOfLight * tap_spacing / 2.0;
}

/// SplitMix64 step; used to derive independent, order-free RNG streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace mmid
