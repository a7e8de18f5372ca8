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

#include "mmid/scene.hpp"

#include <cmath>
#include <stdexcept>

#include "mmid/kernels.hpp"

namespace mmid {

Scene Scene::empty_room() const
{
    Scene s = *this;
    s.targets.clear();
    return s;
}

int nearest_tap(const Eigen::Vector3d &scatterer, const Eigen::Vector3d &tx, const Eigen::Vector3d &rx,
                double tap_spacing)
{
    const double tau = ((scatterer - tx).norm() + (scatterer - rx).norm()) / kSpeedOfLight;
    return static_cast<int>(std::lround(tau / tap_spacing));
}

namespace {

std::vector<Eigen::Vector3d> element_positions(const ArrayGeometry &geom)
{
    std::vector<Eigen::Vector3d> out;
    out.reserve(static_cast<std::size_t>(geom.active_count()));
    for (int i = 0; i < geom.active_count(); ++i)
        out.push_back(geom.element_position(i));
    return out;
}

void validate_scatterers(const std::vector<Scatterer> &list, const std::vector<Eigen::Vector3d> &elements,
                         int taps, double tap_spacing)
{
    for (const auto &s : list)
    {
        if (!(s.position.x() > 0.0) || !s.position.allFinite())
            throw DataError("scatterer must lie in front of the array (x > 0)");
        if (!std::isfinite(s.reflectivity.real()) || !std::isfinite(s.reflectivity.imag()))
            throw DataError("scatterer reflectivity must be finite");
        double farthest = 0.0;
        for (const auto &e : elements)
            farthest = std::max(farthest, (s.position - e).norm());
        // Longest round trip over any Tx/Rx pair bounds the tap index.
        if (std::lround(2.0 * farthest / kSpeedOfLight / tap_spacing) >= taps)
            throw DataError("scene exceeds tap window");
    }
}

kernels::CirJob make_job(const Scene &scene, const ArrayGeometry &geom, int taps, std::uint64_t seed,
                         const SynthesisOptions &opt, std::vector<Scatterer> &storage)
{
    if (taps <= 0)
        throw std::invalid_argument("tap count must be positive");
    if (!(opt.tap_spacing > 0.0))
        throw std::invalid_argument("tap spacing must be positive");
    if (!(scene.noise_power >= 0.0) || !std::isfinite(scene.noise_power))
        throw DataError("noise power must be non-negative");
    if (static_cast<int>(scene.leakage_profile.size()) > std::min(opt.leakage_window, taps))
        throw DataError("leakage profile longer than the leakage window");

    const auto elements = element_positions(geom);
    validate_scatterers(scene.targets, elements, taps, opt.tap_spacing);
    validate_scatterers(scene.clutter, elements, taps, opt.tap_spacing);

    storage = scene.targets;
    storage.insert(storage.end(), scene.clutter.begin(), scene.clutter.end());

    kernels::CirJob job;
    job.scatterers = storage;
    job.tx_positions = elements;
    job.rx_positions = elements;
    job.taps = taps;
    job.tap_spacing = opt.tap_spacing;
    job.carrier = geom.carrier_freq();
    job.kernel = opt.kernel;
    job.leakage = scene.leakage_profile;
    job.noise_power = scene.noise_power;
    job.gain = opt.chain_gain;
    job.seed = seed;
    return job;
}

} // namespace

CirFrame synthesize_cir(const Scene &scene, const ArrayGeometry &geom, int taps, std::uint64_t seed,
                        const SynthesisOptions &opt)
{
    std::vector<Scatterer> storage;
    const auto job = make_job(scene, geom, taps, seed, opt, storage);
    CirFrame frame(geom.active_count(), geom.active_count(), taps, opt.tap_spacing);
    frame.timestamp = opt.timestamp;
    kernels::synthesize_cir(job, frame.data);
    return frame;
}

CirFrame synthesize_cir_reference(const Scene &scene, const ArrayGeometry &geom, int taps, std::uint64_t seed,
                                  const SynthesisOptions &opt)
{
    std::vector<Scatterer> storage;
    const auto job = make_job(scene, geom, taps, seed, opt, storage);
    CirFrame frame(geom.active_count(), geom.active_count(), taps, opt.tap_spacing);
    frame.timestamp = opt.timestamp;
    kernels::reference::synthesize_cir(job, frame.data);
    return frame;
}

} // namespace mmid
