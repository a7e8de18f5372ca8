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

#include <cmath>
#include <limits>

#include "mmid/scene.hpp"

namespace mmid {

double PinholeCamera::tan_half() const
{
    return std::tan(half_fov);
}

std::pair<double, double> PinholeCamera::plane_coords(int r, int c) const
{
    const double t = tan_half();
    return {t * (2.0 * (c + 0.5) / cols - 1.0), t * (1.0 - 2.0 * (r + 0.5) / rows)};
}

std::pair<int, int> PinholeCamera::pixel_of(double py, double pz) const
{
    const double t = tan_half();
    const double cf = (py / t + 1.0) * cols / 2.0;
    const double rf = (1.0 - pz / t) * rows / 2.0;
    if (!(cf >= 0.0 && cf < cols && rf >= 0.0 && rf < rows))
        return {-1, -1};
    return {static_cast<int>(rf), static_cast<int>(cf)};
}

DepthImage render_ground_truth(const HumanPhantom &ph, const ArrayGeometry &geom, const PinholeCamera &cam)
{
    if (cam.rows <= 0 || cam.cols <= 0 || !(cam.half_fov > 0.0 && cam.half_fov < kPi / 2.0))
        throw std::invalid_argument("invalid camera");
    DepthImage img(cam.rows, cam.cols, 0.0);
    if (ph.ellipsoids.empty())
        return img;

    // Camera at the array's centroid; rays (1, py, pz) so the ray parameter is the x-depth.
    Eigen::Vector3d eye = Eigen::Vector3d::Zero();
    for (int i = 0; i < geom.active_count(); ++i)
        eye += geom.element_position(i);
    eye /= static_cast<double>(geom.active_count());

    std::size_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (int r = 0; r < cam.rows; ++r)
        for (int c = 0; c < cam.cols; ++c)
        {
            const auto [py, pz] = cam.plane_coords(r, c);
            const Eigen::Vector3d dir(1.0, py, pz);
            double nearest = std::numeric_limits<double>::infinity();
            for (const auto &e : ph.ellipsoids)
            {
                const Eigen::Vector3d inv = e.semi_axes.cwiseInverse();
                const Eigen::Vector3d d = dir.cwiseProduct(inv);
                const Eigen::Vector3d o = (eye - ph.world_center(e)).cwiseProduct(inv);
                const double qa = d.squaredNorm();
                const double qb = 2.0 * d.dot(o);
                const double qc = o.squaredNorm() - 1.0;
                const double disc = qb * qb - 4.0 * qa * qc;
                if (disc < 0.0)
                    continue;
                const double t = (-qb - std::sqrt(disc)) / (2.0 * qa);
                if (t > 0.0 && t < nearest)
                    nearest = t;
            }
            if (std::isfinite(nearest))
            {
                img(r, c) = nearest + eye.x();
                ++hits;
            }
        }
    if (hits == 0)
        throw DataError("phantom outside the camera field of view");
    return img;
}

} // namespace mmid
