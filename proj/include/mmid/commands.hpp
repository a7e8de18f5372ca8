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

// Command implementations behind the `mmid` executable. They live in the
// library so tests can drive them in-process.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mmid/scene.hpp"
#include "mmid/spectrum.hpp"

namespace mmid {

struct SimulateOptions
{
    std::filesystem::path scene_file;
    std::optional<std::filesystem::path> geometry_file;  // device default when unset
    std::filesystem::path out_dir;
    int frames = 10;
    std::uint64_t seed = 0;
    int taps = 96;
    bool empty_room = false;  // drop targets and phantom, keep clutter/leakage/noise
    TapKernel kernel = TapKernel::nearest;
    double frame_interval = 0.05;  // seconds between frame timestamps
};

struct SimulateResult
{
    std::vector<std::filesystem::path> frames;
    std::filesystem::path manifest;
};

/// Writes frame_NNNN.mmid files plus manifest.json into out_dir.
SimulateResult cmd_simulate(const SimulateOptions &opt);

struct SpectrumOptions
{
    std::filesystem::path frames_dir;
    std::filesystem::path empty_dir;
    std::optional<std::filesystem::path> config_file;
    std::filesystem::path out_path;
    // Command-line overrides, applied after the config file.
    std::optional<double> grid_extent_deg;
    std::optional<std::pair<double, double>> range_gate_m;
    std::optional<OrderMode> order_mode;
    std::optional<bool> jts;
    std::optional<Reduction> reduction;
    bool previews = true;
};

struct SpectrumResult
{
    std::filesystem::path tensor;
    std::vector<std::filesystem::path> previews;
    std::filesystem::path manifest;
};

/// Background removal + MUSIC over all frames; writes the [128,128,32] f32
/// container, one PGM preview per Tx (in <out>_preview/) and <out>.manifest.json.
SpectrumResult cmd_spectrum(const SpectrumOptions &opt);

struct MetricsReport
{
    double sd_percent = 0.0;
    double ssim = 0.0;

    /// "sd_percent=<v>\nssim=<v>\n"
    std::string format() const;
};

MetricsReport cmd_metrics(const std::filesystem::path &img_a, const std::filesystem::path &img_b,
                          double threshold = 0.0);

struct DatasetOptions
{
    std::filesystem::path scenes_dir;  // one scene template (with a phantom) per identity
    int count = 0;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir;
    int frames = 4;
    int empty_frames = 4;
    int taps = 96;
    double distance_jitter = 0.1;  // meters, uniform +-
    bool flip = false;
    int shift = 0;           // max spectrum-cell translation, +-
    double rotate_deg = 0.0;  // max rotation, +-
    MusicConfig music;
    std::optional<std::filesystem::path> geometry_file;
};

struct DatasetSample
{
    int id = 0;
    int label = 0;
    std::string scene;
    std::filesystem::path spectrum;
    std::filesystem::path depth;
    bool flipped = false;
    int shift_row = 0;
    int shift_col = 0;
    double rotation_deg = 0.0;
};

struct DatasetResult
{
    std::vector<DatasetSample> samples;
    std::vector<int> label_counts;
    std::filesystem::path index;
    std::filesystem::path manifest;
};

/// Emits `count` (spectrum tensor, depth image, label) triples, classes
/// assigned round-robin over the sorted scene templates.
DatasetResult cmd_dataset(const DatasetOptions &opt);

/// Lists *.mmid files of a directory in name order.
std::vector<std::filesystem::path> list_containers(const std::filesystem::path &dir);

} // namespace mmid
