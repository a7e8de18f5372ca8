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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mmid/angle_grid.hpp"
#include "mmid/array_model.hpp"
#include "mmid/preprocess.hpp"
#include "mmid/scene.hpp"

namespace mmid {

struct CovarianceMatrix
{
    Eigen::MatrixXcd R;
    std::size_t snapshot_count = 0;
};

enum class OrderMode
{
    fixed,        // M = MusicConfig::fixed_order
    eigen_gap,    // M at the largest drop between consecutive eigenvalues
    energy,       // smallest M whose top eigenvalues hold (1 - epsilon) of the trace
};

enum class Reduction
{
    max_power,      // largest pseudospectrum value over gated taps
    depth_of_peak,  // range in meters of the tap holding that value
};

/// Inclusive tap interval.
struct RangeGate
{
    int first_tap = 0;
    int last_tap = 0;

    static RangeGate from_meters(double min_range, double max_range, double tap_spacing);
    int size() const { return last_tap - first_tap + 1; }
};

struct SmoothingFlags
{
    bool spatial = true;   // pool all complete 4x4 windows
    bool temporal = true;  // pool frames
    bool jts = false;      // pool every transmitter
};

struct MusicConfig
{
    OrderMode order_mode = OrderMode::energy;
    int fixed_order = 1;
    double epsilon = 0.1;
    double gate_min_m = 1.0;
    double gate_max_m = 2.5;
    SmoothingFlags smoothing;
    Reduction reduction = Reduction::max_power;
    int grid_size = 128;
    double grid_extent_deg = 60.0;
    int max_frames = 10;  // frames pooled by temporal smoothing
    BackgroundConfig background;

    AngleGrid grid() const;
    RangeGate gate(double tap_spacing) const;
    void validate() const;
};

struct NoiseSubspace
{
    Eigen::MatrixXcd basis;  // 16 x (16 - M), orthonormal columns
    int source_order = 0;
    Eigen::VectorXd eigenvalues;  // descending

    Eigen::MatrixXcd projector() const { return basis * basis.adjoint(); }
};

struct SpectrumImage
{
    Image values;  // theta rows x phi cols
    std::vector<double> theta_grid;
    std::vector<double> phi_grid;
    int tx_index = 0;
    std::size_t clamped = 0;  // grid points whose denominator hit the floor
};

struct SpectrumTensor
{
    AngleGrid grid;
    std::vector<SpectrumImage> images;  // one per Tx, in Tx order
    Reduction reduction = Reduction::max_power;

    /// Average of all slices.
    Image mean_image() const;
};

/// One 16-vector per subarray, read from the Rx dimension at (tx, tap).
std::vector<Eigen::VectorXcd> subarray_snapshots(const CirFrame &frame, int tx, int tap,
                                                 std::span<const SubarraySpec> subs);

/// (1/L) sum h h^H.
CovarianceMatrix covariance(std::span<const Eigen::VectorXcd> snapshots);

/// Source order for descending eigenvalues under the configured mode.
int select_source_order(const Eigen::VectorXd &eigenvalues_desc, const MusicConfig &cfg);

NoiseSubspace noise_subspace(const CovarianceMatrix &cov, const MusicConfig &cfg);

/// 1 / (a^H V V^H a) over the grid, parallel kernel.
SpectrumImage music_spectrum(const Eigen::MatrixXcd &noise_basis, const ArrayGeometry &geom,
                             const SubarraySpec &sub_ref, const AngleGrid &grid);

/// Background removal, smoothing, per-tap MUSIC and tap reduction for each
/// Tx, then per-slice max normalisation.
SpectrumTensor build_spectrum_tensor(std::span<const CirFrame> frames, const EmptyCirSet &empty,
                                     const ArrayGeometry &geom, const MusicConfig &cfg);

/// Same pipeline on frames that are already background-free.
SpectrumTensor spectrum_from_clean_frames(std::span<const CirFrame> clean, const ArrayGeometry &geom,
                                          const MusicConfig &cfg);

/// Grid cells holding a local maximum (8-neighbourhood, strict against at
/// least one neighbour), strongest first.
std::vector<std::pair<int, int>> local_maxima(const Image &img, std::size_t limit);

} // namespace mmid
