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
#include <random>
#include <stdexcept>

#include "mmid/scene.hpp"

namespace mmid {

Eigen::Vector3d HumanPhantom::world_center(const Ellipsoid &e) const
{
    return e.center + Eigen::Vector3d(distance, 0.0, 0.0) + lateral_offset;
}

HumanPhantom HumanPhantom::standard(double distance, double scale)
{
    HumanPhantom ph;
    ph.distance = distance;
    auto add = [&](double cx, double cy, double cz, double ax, double ay, double az) {
        ph.ellipsoids.push_back({Eigen::Vector3d(cx, cy, cz) * scale, Eigen::Vector3d(ax, ay, az) * scale});
    };
    add(0.0, 0.00, 0.05, 0.12, 0.18, 0.30);    // torso
    add(0.0, 0.00, 0.50, 0.10, 0.08, 0.11);    // head
    add(0.0, 0.24, 0.02, 0.05, 0.05, 0.30);    // arms
    add(0.0, -0.24, 0.02, 0.05, 0.05, 0.30);
    add(0.0, 0.09, -0.65, 0.07, 0.07, 0.40);   // legs
    add(0.0, -0.09, -0.65, 0.07, 0.07, 0.40);
    return ph;
}

double ellipsoid_area(const Eigen::Vector3d &s)
{
    constexpr double p = 1.6075;
    const double ap = std::pow(s.x(), p), bp = std::pow(s.y(), p), cp = std::pow(s.z(), p);
    return 4.0 * kPi * std::pow((ap * bp + ap * cp + bp * cp) / 3.0, 1.0 / p);
}

namespace {

void validate_phantom(const HumanPhantom &ph)
{
    if (!(ph.sample_density > 0.0) || !std::isfinite(ph.sample_density))
        throw std::invalid_argument("phantom sample density must be positive");
    for (const auto &e : ph.ellipsoids)
    {
        if (!(e.semi_axes.minCoeff() > 0.0) || !e.semi_axes.allFinite())
            throw std::invalid_argument("degenerate phantom ellipsoid");
        if (!(ph.world_center(e).x() - e.semi_axes.x() > 0.0))
            throw std::invalid_argument("phantom ellipsoid reaches behind the array plane");
    }
}

} // namespace

std::vector<Scatterer> sample_phantom(const HumanPhantom &ph, std::uint64_t seed)
{
    validate_phantom(ph);
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    std::vector<Scatterer> out;
    std::mt19937_64 rng(mix_seed(seed, 0x5eed));
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * kPi);

    for (const auto &e : ph.ellipsoids)
    {
        const auto n = static_cast<long>(std::lround(ph.sample_density * ellipsoid_area(e.semi_axes) / 2.0));
        const Eigen::Vector3d c = ph.world_center(e);
        const Eigen::Vector3d &s = e.semi_axes;
        const double offset = uniform(rng);
        for (long i = 0; i < n; ++i)
        {
            // Equal-area spiral on the unit hemisphere u_x < 0 (toward the array).
            const double ux = -(static_cast<double>(i) + 0.5) / static_cast<double>(n);
            const double rho = std::sqrt(1.0 - ux * ux);
            const double ang = offset + golden * static_cast<double>(i);
            const Eigen::Vector3d u(ux, rho * std::cos(ang), rho * std::sin(ang));

            Scatterer sc;
            sc.position = c + s.cwiseProduct(u);
            const Eigen::Vector3d normal = u.cwiseQuotient(s).normalized();
            const Eigen::Vector3d to_array = (-sc.position).normalized();
            const double cosine = std::max(0.0, normal.dot(to_array));
            sc.reflectivity = std::polar(cosine, uniform(rng));
            out.push_back(sc);
        }
    }
    return out;
}

} // namespace mmid
