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

// mmid: simulate CIR frames, build MUSIC spectrum tensors, score silhouettes
// and emit paired training datasets.
//
// Exit codes: 0 ok, 1 usage error, 2 data error.

#include <iostream>

#include <CLI11.hpp>

#include "mmid/commands.hpp"
#include "mmid/config_files.hpp"
#include "mmid/manifest.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"mmWave radar imaging toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", mmid::kToolVersion);

    // simulate
    mmid::SimulateOptions sim;
    std::string sim_geometry;
    std::string sim_kernel = "nearest";
    auto *simulate = app.add_subcommand("simulate", "Synthesize CIR frames for a scene file");
    simulate->add_option("scene_file", sim.scene_file, "Scene description")->required()->check(CLI::ExistingFile);
    simulate->add_option("geometry_file", sim_geometry, "Array geometry config (default: built-in device)")
        ->check(CLI::ExistingFile);
    simulate->add_option("--frames", sim.frames, "Number of frames")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--out", sim.out_dir, "Output directory")->required();
    simulate->add_option("--taps", sim.taps, "CIR taps per pair")->check(CLI::PositiveNumber);
    simulate->add_option("--kernel", sim_kernel, "Tap deposition")->check(CLI::IsMember({"nearest", "sinc"}));
    simulate->add_flag("--empty", sim.empty_room, "Drop targets (empty-room capture)");

    // spectrum
    mmid::SpectrumOptions spec;
    std::string spec_config, spec_order, spec_reduction, spec_jts;
    double grid_extent = 0.0;
    std::vector<double> range_gate;
    bool no_preview = false;
    auto *spectrum = app.add_subcommand("spectrum", "Background removal + MUSIC spectrum tensor");
    spectrum->add_option("frames_dir", spec.frames_dir, "Directory of target frames")
        ->required()->check(CLI::ExistingDirectory);
    spectrum->add_option("empty_dir", spec.empty_dir, "Directory of empty-room frames")
        ->required()->check(CLI::ExistingDirectory);
    spectrum->add_option("--config", spec_config, "Spectrum config file")->check(CLI::ExistingFile);
    spectrum->add_option("--out", spec.out_path, "Output container path")->required();
    spectrum->add_option("--grid-extent", grid_extent, "Angular half-extent in degrees");
    spectrum->add_option("--range-gate", range_gate, "Range gate: min max (meters)")->expected(2);
    spectrum->add_option("--order-mode", spec_order, "Source order")
        ->check(CLI::IsMember({"energy", "eigen-gap", "fixed"}));
    spectrum->add_option("--jts", spec_jts, "Joint transmitter smoothing")->check(CLI::IsMember({"on", "off"}));
    spectrum->add_option("--reduction", spec_reduction, "Tap reduction")->check(CLI::IsMember({"max", "depth"}));
    spectrum->add_flag("--no-preview", no_preview, "Skip per-Tx PGM previews");

    // metrics
    std::string img_a, img_b;
    double threshold = 0.0;
    auto *metrics = app.add_subcommand("metrics", "Silhouette difference and SSIM of two images");
    metrics->add_option("img_a", img_a)->required()->check(CLI::ExistingFile);
    metrics->add_option("img_b", img_b)->required()->check(CLI::ExistingFile);
    metrics->add_option("--threshold", threshold, "Mask threshold")->check(CLI::NonNegativeNumber);

    // dataset
    mmid::DatasetOptions ds;
    std::string ds_geometry, ds_config;
    auto *dataset = app.add_subcommand("dataset", "Emit paired spectrum/depth/label samples");
    dataset->add_option("--scenes", ds.scenes_dir, "Directory of .scene templates")
        ->required()->check(CLI::ExistingDirectory);
    dataset->add_option("--count", ds.count, "Number of samples")->required()->check(CLI::PositiveNumber);
    dataset->add_option("--seed", ds.seed, "RNG seed");
    dataset->add_option("--out", ds.out_dir, "Output directory")->required();
    dataset->add_option("--frames", ds.frames, "Frames per sample")->check(CLI::PositiveNumber);
    dataset->add_option("--empty-frames", ds.empty_frames, "Empty-room frames per sample")->check(CLI::PositiveNumber);
    dataset->add_option("--config", ds_config, "Spectrum config file")->check(CLI::ExistingFile);
    dataset->add_option("--geometry", ds_geometry, "Array geometry config")->check(CLI::ExistingFile);
    dataset->add_flag("--flip", ds.flip, "Random horizontal flips");
    dataset->add_option("--shift", ds.shift, "Max translation in spectrum cells")->check(CLI::NonNegativeNumber);
    dataset->add_option("--rotate", ds.rotate_deg, "Max rotation in degrees")->check(CLI::NonNegativeNumber);

    // verify
    std::string manifest_path;
    auto *verify = app.add_subcommand("verify", "Check output hashes recorded in a manifest");
    verify->add_option("manifest", manifest_path)->required()->check(CLI::ExistingFile);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try
    {
        if (*simulate)
        {
            if (!sim_geometry.empty())
                sim.geometry_file = sim_geometry;
            sim.kernel = sim_kernel == "sinc" ? mmid::TapKernel::sinc : mmid::TapKernel::nearest;
            const auto r = mmid::cmd_simulate(sim);
            std::cout << "wrote " << r.frames.size() << " frames to " << sim.out_dir.string() << '\n';
        }
        else if (*spectrum)
        {
            if (!spec_config.empty())
                spec.config_file = spec_config;
            if (spectrum->count("--grid-extent"))
                spec.grid_extent_deg = grid_extent;
            if (range_gate.size() == 2)
                spec.range_gate_m = std::make_pair(range_gate[0], range_gate[1]);
            if (!spec_order.empty())
                spec.order_mode = mmid::parse_order_mode(spec_order);
            if (!spec_jts.empty())
                spec.jts = spec_jts == "on";
            if (!spec_reduction.empty())
                spec.reduction = mmid::parse_reduction(spec_reduction);
            spec.previews = !no_preview;
            const auto r = mmid::cmd_spectrum(spec);
            std::cout << "wrote " << r.tensor.string() << '\n';
        }
        else if (*metrics)
        {
            std::cout << mmid::cmd_metrics(img_a, img_b, threshold).format();
        }
        else if (*dataset)
        {
            if (!ds_geometry.empty())
                ds.geometry_file = ds_geometry;
            if (!ds_config.empty())
                ds.music = mmid::load_music_config(ds_config);
            const auto r = mmid::cmd_dataset(ds);
            std::cout << "wrote " << r.samples.size() << " samples to " << ds.out_dir.string() << '\n';
        }
        else if (*verify)
        {
            const auto problems = mmid::verify_manifest(manifest_path);
            for (const auto &p : problems)
                std::cout << p << '\n';
            if (!problems.empty())
                return kExitData;
            std::cout << "ok\n";
        }
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
