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

#include "mmid/angle_grid.hpp"
#include "mmid/image.hpp"
#include "mmid/scene.hpp"

namespace mmid {

/// Mirror left-right (reverses columns).
Image flip_horizontal(const Image &img);

/// Integer translation; vacated pixels are 0.
Image shift(const Image &img, int drow, int dcol);

/// Rotation about the image centre by `radians` (counter-clockwise), nearest
/// neighbour, zero fill.
Image rotate(const Image &img, double radians);

/// Samples a pinhole depth image at every (theta, phi) grid direction
/// (nearest pixel; directions outside the camera give 0).
Image resample_to_grid(const DepthImage &depth, const PinholeCamera &cam, const AngleGrid &grid);

/// Binary PGM (P5), values scaled from [0, 1] to [0, 255].
void write_pgm(const std::filesystem::path &path, const Image &img);

} // namespace mmid
