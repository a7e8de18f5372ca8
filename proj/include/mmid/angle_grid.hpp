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

#include <vector>

#include "mmid/array_model.hpp"

namespace mmid {

/// Elevation x azimuth sampling grid. Row i of a spectrum image is theta[i]
/// (descending, top row = highest elevation); column j is phi[j] (ascending).
struct AngleGrid
{
    std::vector<double> theta;
    std::vector<double> phi;

    int rows() const { return static_cast<int>(theta.size()); }
    int cols() const { return static_cast<int>(phi.size()); }
    Direction at(int row, int col) const { return {theta[row], phi[col]}; }

    /// n x n samples spanning [-extent, +extent] inclusive in both angles.
    static AngleGrid uniform(int n, double extent_rad);
    /// Nearest grid row/col for a direction (clamped to the grid).
    int nearest_row(double theta_value) const;
    int nearest_col(double phi_value) const;
};

} // namespace mmid
