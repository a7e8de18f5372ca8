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

#include "mmid/image_ops.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace mmid {

Image flip_horizontal(const Image &img)
{
    Image out(img.rows, img.cols);
    for (int r = 0; r < img.rows; ++r)
        for (int c = 0; c < img.cols; ++c)
            out(r, c) = img(r, img.cols - 1 - c);
    return out;
}

Image shift(const Image &img, int drow, int dcol)
{
    Image out(img.rows, img.cols, 0.0);
    for (int r = 0; r < img.rows; ++r)
        for (int c = 0; c < img.cols; ++c)
        {
            const int sr = r - drow, sc = c - dcol;
            if (sr >= 0 && sr < img.rows && sc >= 0 && sc < img.cols)
                out(r, c) = img(sr, sc);
        }
    return out;
}

Image rotate(const Image &img, double radians)
{
    Image out(img.rows, img.cols, 0.0);
    const double cr = (img.rows - 1) / 2.0, cc = (img.cols - 1) / 2.0;
    const double cs = std::cos(radians), sn = std::sin(radians);
    for (int r = 0; r < img.rows; ++r)
        for (int c = 0; c < img.cols; ++c)
        {
            // Inverse map; rows grow downward, so counter-clockwise flips the sign on y.
            const double x = c - cc, y = cr - r;
            const double sx = cs * x + sn * y;
            const double sy = -sn * x + cs * y;
            const long sc = std::lround(sx + cc), sr = std::lround(cr - sy);
            if (sr >= 0 && sr < img.rows && sc >= 0 && sc < img.cols)
                out(r, c) = img(static_cast<int>(sr), static_cast<int>(sc));
        }
    return out;
}

Image resample_to_grid(const DepthImage &depth, const PinholeCamera &cam, const AngleGrid &grid)
{
    if (depth.rows != cam.rows || depth.cols != cam.cols)
        throw std::invalid_argument("depth image does not match the camera");
    Image out(grid.rows(), grid.cols(), 0.0);
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c)
        {
            const Eigen::Vector3d u = grid.at(r, c).unit();
            if (!(u.x() > 0.0))
                continue;
            const auto [pr, pc] = cam.pixel_of(u.y() / u.x(), u.z() / u.x());
            if (pr >= 0)
                out(r, c) = depth(pr, pc);
        }
    return out;
}

void write_pgm(const std::filesystem::path &path, const Image &img)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw DataError("cannot write " + path.string());
    os << "P5\n" << img.cols << ' ' << img.rows << "\n255\n";
    for (double v : img.values)
    {
        const double clamped = std::clamp(std::isfinite(v) ? v : 0.0, 0.0, 1.0);
        os.put(static_cast<char>(static_cast<unsigned char>(std::lround(clamped * 255.0))));
    }
    if (!os)
        throw DataError("failed writing " + path.string());
}

} // namespace mmid
