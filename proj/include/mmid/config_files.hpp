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

// Plain-text inputs. Scene files:
//
//   noise_power = 1e-4
//   leakage = 0.8,0.1 0.3,-0.2        # complex taps re,im from tap 0
//   [target]                          # repeatable
//   position = 1.5 0 0                # meters, x = range
//   reflectivity = 1 0                # re im
//   [clutter]                         # repeatable, same keys as [target]
//   [phantom]
//   distance = 1.5
//   density = 400                     # samples per m^2
//   preset = human                    # optional built-in body
//   scale = 1.0
//   offset = 0 0                      # lateral y z shift
//   [ellipsoid]                       # repeatable, adds to the phantom
//   center = 0 0 0.1                  # relative to the phantom origin
//   semi_axes = 0.12 0.18 0.3
//
// Spectrum config files use top-level keys only; see parse_music_config.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "mmid/scene.hpp"
#include "mmid/spectrum.hpp"

namespace mmid {

struct SceneDescription
{
    Scene scene;
    std::optional<HumanPhantom> phantom;

    /// Scene with phantom samples appended to the explicit targets.
    Scene materialize(std::uint64_t seed) const;
};

SceneDescription parse_scene(std::istream &in, const std::string &source_name = "<scene>");
SceneDescription load_scene(const std::filesystem::path &path);

// Keys: grid_size, grid_extent (degrees), range_gate (min max meters),
// order_mode (energy | eigen-gap | fixed), order, epsilon, spatial, temporal,
// jts (on/off), reduction (max | depth), frames, k0, per_pair_alpha.
MusicConfig parse_music_config(std::istream &in, const std::string &source_name = "<config>",
                               MusicConfig base = {});
MusicConfig load_music_config(const std::filesystem::path &path, MusicConfig base = {});

OrderMode parse_order_mode(const std::string &s);
Reduction parse_reduction(const std::string &s);

} // namespace mmid
