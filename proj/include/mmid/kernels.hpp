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

// Data-parallel inner loops. Each OpenMP kernel has a serial counterpart in
// mmid::kernels::reference that computes the same quantity the direct way;
// tests and the benchmark compare the two.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mmid/angle_grid.hpp"
#include "mmid/array_model.hpp"
#include "mmid/scene.hpp"

namespace mmid::kernels {

/// Everything the CIR synthesizer needs, flattened.
struct CirJob
{
    std::span<const Scatterer> scatterers;
    std::vector<Eigen::Vector3d> tx_positions;
    std::vector<Eigen::Vector3d> rx_positions;
    int taps = 0;
    double tap_spacing = kDefaultTapSpacing;
    double carrier = kDefaultCarrier;
    TapKernel kernel = TapKernel::nearest;
    std::span<const cplx> leakage;
    double noise_power = 0.0;
    cplx gain{1.0, 0.0};
    std::uint64_t seed = 0;
};

/// Parallel over (tx, rx) pairs. `cube` has tx*rx*taps entries.
void synthesize_cir(const CirJob &job, std::span<cplx> cube);

/// One lag (row/col offset) between two elements of a rectangular subarray.
struct Lag
{
    int drow = 0;
    int dcol = 0;
};

/// exp(+j k (dy u_y + dz u_z)) for every grid direction and every positive lag
/// of a rows x cols subarray. For a unit-modulus steering vector a and a
/// Hermitian P, a^H P a = trace(P) + 2 Re sum_lag phasor(lag) * D(lag), where
/// D(lag) sums P(i,j) over element pairs i<j separated by that lag.
class LagPhasorTable
{
public:
    LagPhasorTable(const ArrayGeometry &geom, int sub_rows, int sub_cols, const AngleGrid &grid);

    int points() const { return points_; }
    int lag_count() const { return static_cast<int>(lags_.size()); }
    const std::vector<Lag> &lags() const { return lags_; }
    int sub_rows() const { return sub_rows_; }
    int sub_cols() const { return sub_cols_; }
    const cplx *row(int point) const { return phasors_.data() + static_cast<std::size_t>(point) * lags_.size(); }

private:
    int sub_rows_;
    int sub_cols_;
    int points_;
    std::vector<Lag> lags_;
    std::vector<cplx> phasors_;
};

/// Projector P = V V^H folded onto lags.
struct ProjectorLags
{
    double trace = 0.0;
    std::vector<cplx> sums;
};

ProjectorLags fold_projector(const Eigen::MatrixXcd &projector, const LagPhasorTable &table);

inline constexpr double kDenominatorFloor = 1e-18;

/// Per grid point: the largest pseudospectrum value over all supplied taps and
/// the index of the tap that produced it.
struct PseudospectrumPeaks
{
    std::vector<double> value;
    std::vector<int> tap;
    std::size_t clamped = 0;  // denominators floored at kDenominatorFloor
};

/// Parallel over grid points.
PseudospectrumPeaks evaluate_pseudospectrum(const LagPhasorTable &table, std::span<const ProjectorLags> taps);

namespace detail {

/// Circular complex Gaussian noise for one (tx, rx) pair, drawn from its own
/// stream so the result does not depend on evaluation order.
std::vector<cplx> pair_noise(std::uint64_t seed, std::size_t pair, int taps, double power);

/// Amplitude weights deposited on taps [first, first + weights.size()).
struct TapSpread
{
    int first = 0;
    std::vector<double> weights;
};

/// Tap weights for a delay in units of taps. Nearest: one unit weight.
/// Sinc: sinc(k - delay) over the nearest tap +-3.
TapSpread spread_delay(double delay_taps, TapKernel kernel);

} // namespace detail

namespace reference {

/// Serial, pair-by-pair accumulation in scatterer-major order.
void synthesize_cir(const CirJob &job, std::span<cplx> cube);

/// Serial, evaluates 1 / ||V^H a||^2 with explicit steering vectors.
PseudospectrumPeaks evaluate_pseudospectrum(const ArrayGeometry &geom, const SubarraySpec &sub,
                                            const AngleGrid &grid, std::span<const Eigen::MatrixXcd> noise_bases);

} // namespace reference

} // namespace mmid::kernels
