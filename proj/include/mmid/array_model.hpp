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

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "mmid/common.hpp"

namespace mmid {

struct GridCell
{
    int row = 0;
    int col = 0;
    auto operator<=>(const GridCell &) const = default;
};

/// Planar antenna grid in the y-z plane (x is the range axis). Missing cells
/// carry no element; active elements are indexed row-major over the remaining
/// cells. Tx and Rx share this layout.
class ArrayGeometry
{
public:
    ArrayGeometry(int rows, int cols, double pitch, std::vector<GridCell> missing,
                  double carrier_freq = kDefaultCarrier);

    /// 6x6 grid, 3 mm pitch, 60 GHz, corners missing (32 active elements).
    static ArrayGeometry device_default();
    /// 6x6 grid with every cell populated.
    static ArrayGeometry full_grid();

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double pitch() const { return pitch_; }
    double carrier_freq() const { return carrier_; }
    double wavelength() const { return kSpeedOfLight / carrier_; }
    double wavenumber() const { return 2.0 * kPi / wavelength(); }
    const std::vector<GridCell> &missing() const { return missing_; }

    bool is_missing(GridCell cell) const;
    int active_count() const { return static_cast<int>(active_cells_.size()); }
    /// Active-element index of a cell, or -1 when the cell is missing.
    int active_index(GridCell cell) const;
    GridCell cell_of(int active_index) const { return active_cells_.at(active_index); }

    /// Element position in meters; the grid is centred on the origin, row 0 on top.
    Eigen::Vector3d cell_position(GridCell cell) const;
    Eigen::Vector3d element_position(int active_index) const { return cell_position(cell_of(active_index)); }

private:
    int rows_;
    int cols_;
    double pitch_;
    double carrier_;
    std::vector<GridCell> missing_;
    std::vector<int> index_of_cell_;
    std::vector<GridCell> active_cells_;
};

/// Elevation theta and azimuth phi in radians, both within [-pi/2, pi/2].
/// Unit direction: (cos(theta) cos(phi), cos(theta) sin(phi), sin(theta)).
struct Direction
{
    double elevation = 0.0;
    double azimuth = 0.0;

    Eigen::Vector3d unit() const;
    static Direction from_vector(const Eigen::Vector3d &v);
};

struct SubarraySpec
{
    GridCell anchor;
    int size_rows = 4;
    int size_cols = 4;
    /// Row-major active indices of the window cells; -1 marks a missing cell.
    std::vector<int> element_indices;

    bool complete() const;
};

/// Builds the window at `anchor`; throws std::invalid_argument when it leaves the grid.
SubarraySpec make_subarray(const ArrayGeometry &geom, GridCell anchor, int size_rows = 4, int size_cols = 4);

/// Unit-modulus phase response of a complete subarray toward `dir`, with
/// element phases exp(+j k (dy cos(theta) sin(phi) + dz sin(theta))) relative
/// to the anchor element. The positive sign matches the exp(-j 2 pi f tau)
/// propagation phase used by the CIR synthesizer.
Eigen::VectorXcd steering_vector(const ArrayGeometry &geom, const SubarraySpec &sub, Direction dir);

/// All complete windows in row-major anchor order.
std::vector<SubarraySpec> enumerate_subarrays(const ArrayGeometry &geom, int size_rows = 4, int size_cols = 4);

// Plain-text geometry config:
//   rows = 6
//   cols = 6
//   pitch = 0.003
//   carrier_freq = 60e9
//   missing = 0,0 0,5 5,0 5,5
ArrayGeometry parse_geometry(std::istream &in, const std::string &source_name = "<geometry>");
ArrayGeometry load_geometry(const std::filesystem::path &path);
std::string format_geometry(const ArrayGeometry &geom);

} // namespace mmid
