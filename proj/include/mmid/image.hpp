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

#include <cstddef>
#include <vector>

namespace mmid {

/// Row-major real image. Depth images are 256x256 with 0 marking background.
struct Image
{
    int rows = 0;
    int cols = 0;
    std::vector<double> values;

    Image() = default;
    Image(int r, int c, double fill = 0.0) : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, fill) {}

    double &operator()(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
    std::size_t size() const { return values.size(); }
    bool same_shape(const Image &o) const { return rows == o.rows && cols == o.cols; }
};

using DepthImage = Image;
inline constexpr int kDepthImageSize = 256;

/// Binary silhouette; one byte per pixel.
struct Mask
{
    int rows = 0;
    int cols = 0;
    std::vector<unsigned char> bits;

    Mask() = default;
    Mask(int r, int c, bool fill = false) : rows(r), cols(c), bits(static_cast<std::size_t>(r) * c, fill ? 1 : 0) {}

    bool operator()(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c] != 0; }
    void set(int r, int c, bool v) { bits[static_cast<std::size_t>(r) * cols + c] = v ? 1 : 0; }
    std::size_t size() const { return bits.size(); }
    std::size_t count() const;
};

} // namespace mmid
