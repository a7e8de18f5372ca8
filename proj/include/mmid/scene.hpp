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

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mmid/array_model.hpp"
#include "mmid/image.hpp"

namespace mmid {

struct Scatterer
{
    Eigen::Vector3d position;  // meters; x is range away from the array
    cplx reflectivity{1.0, 0.0};
};

struct Scene
{
    std::vector<Scatterer> targets;
    std::vector<Scatterer> clutter;
    /// Tx/Rx-independent internal leakage added to the first taps.
    std::vector<cplx> leakage_profile;
    double noise_power = 0.0;  // per complex entry, linear

    /// Same scene with targets removed (clutter, leakage and noise kept).
    Scene empty_room() const;
};

/// Complex CIR cube indexed [tx][rx][tap], row-major.
struct CirFrame
{
    int tx = 0;
    int rx = 0;
    int taps = 0;
    double tap_spacing = kDefaultTapSpacing;
    double timestamp = 0.0;
    std::vector<cplx> data;

    CirFrame() = default;
    CirFrame(int m, int n, int k, double spacing = kDefaultTapSpacing)
        : tx(m), rx(n), taps(k), tap_spacing(spacing), data(static_cast<std::size_t>(m) * n * k)
    {
    }

    std::size_t offset(int m, int n, int k) const
    {
        return (static_cast<std::size_t>(m) * rx + n) * taps + k;
    }
    cplx &at(int m, int n, int k) { return data[offset(m, n, k)]; }
    const cplx &at(int m, int n, int k) const { return data[offset(m, n, k)]; }
    std::span<cplx> pair(int m, int n) { return {data.data() + offset(m, n, 0), static_cast<std::size_t>(taps)}; }
    std::span<const cplx> pair(int m, int n) const
    {
        return {data.data() + offset(m, n, 0), static_cast<std::size_t>(taps)};
    }
    bool same_shape(const CirFrame &o) const { return tx == o.tx && rx == o.rx && taps == o.taps; }
};

enum class TapKernel
{
    nearest,  // all energy on round(tau / dtau)
    sinc,     // bandlimited sinc over +-3 taps around the nearest tap
};

struct SynthesisOptions
{
    double tap_spacing = kDefaultTapSpacing;
    TapKernel kernel = TapKernel::nearest;
    /// Leakage profiles longer than this are rejected.
    int leakage_window = 4;
    /// Common complex gain applied to the whole frame (chain gain drift).
    cplx chain_gain{1.0, 0.0};
    double timestamp = 0.0;
};

/// Tap index nearest to the round-trip delay of a scatterer for one Tx/Rx pair.
int nearest_tap(const Eigen::Vector3d &scatterer, const Eigen::Vector3d &tx, const Eigen::Vector3d &rx,
                double tap_spacing);

/// Sums every scatterer's reflection into the [tx][rx][tap] cube, adds the
/// leakage profile and circular Gaussian noise. Deterministic in `seed`
/// regardless of thread count.
CirFrame synthesize_cir(const Scene &scene, const ArrayGeometry &geom, int taps, std::uint64_t seed,
                        const SynthesisOptions &opt = {});
/// Serial reference path used to check the parallel one.
CirFrame synthesize_cir_reference(const Scene &scene, const ArrayGeometry &geom, int taps, std::uint64_t seed,
                                  const SynthesisOptions &opt = {});

struct Ellipsoid
{
    Eigen::Vector3d center;     // relative to the phantom origin
    Eigen::Vector3d semi_axes;  // along x, y, z
};

/// Union of ellipsoids placed `distance` meters in front of the array.
struct HumanPhantom
{
    std::vector<Ellipsoid> ellipsoids;
    double sample_density = 400.0;  // points per m^2 of facing surface
    double distance = 1.5;
    Eigen::Vector3d lateral_offset = Eigen::Vector3d::Zero();  // y/z shift of the body

    Eigen::Vector3d world_center(const Ellipsoid &e) const;

    /// Head, torso, arms and legs; `scale` stretches all semi-axes and offsets.
    static HumanPhantom standard(double distance = 1.5, double scale = 1.0);
};

/// Approximate surface area of an ellipsoid (Thomsen, p = 1.6075).
double ellipsoid_area(const Eigen::Vector3d &semi_axes);

/// Quasi-uniform spiral samples on the array-facing half (local x < centre) of
/// each ellipsoid. Reflectivity magnitude is the facet cosine toward the array
/// origin, phase is drawn from `seed`.
std::vector<Scatterer> sample_phantom(const HumanPhantom &ph, std::uint64_t seed);

struct PinholeCamera
{
    int rows = kDepthImageSize;
    int cols = kDepthImageSize;
    double half_fov = kPi / 3.0;  // radians, same in both axes

    double tan_half() const;
    /// Image-plane coordinates (y/x, z/x) of the centre of pixel (r, c).
    std::pair<double, double> plane_coords(int r, int c) const;
    /// Pixel containing the plane point, or {-1,-1} when outside the image.
    std::pair<int, int> pixel_of(double py, double pz) const;
};

/// Nearest-surface x-depth of the phantom as seen from the array centre;
/// background pixels are 0. Throws DataError when ellipsoids exist but none
/// is visible.
DepthImage render_ground_truth(const HumanPhantom &ph, const ArrayGeometry &geom, const PinholeCamera &cam = {});

} // namespace mmid
