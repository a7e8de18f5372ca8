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

#include "mmid/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <fstream>
#include <random>
#include <sstream>

#include "mmid/config_files.hpp"
#include "mmid/container.hpp"
#include "mmid/image_ops.hpp"
#include "mmid/manifest.hpp"
#include "mmid/metrics.hpp"
#include "mmid/preprocess.hpp"

namespace fs = std::filesystem;

namespace mmid {

namespace {

std::string numbered(const std::string &prefix, int i, int width, const std::string &suffix)
{
    std::ostringstream os;
    os << prefix << std::setw(width) << std::setfill('0') << i << suffix;
    return os.str();
}

void ensure_dir(const fs::path &dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw DataError("cannot create directory " + dir.string() + ": " + ec.message());
}

nlohmann::json music_json(const MusicConfig &c)
{
    const char *mode = c.order_mode == OrderMode::energy ? "energy"
                       : c.order_mode == OrderMode::eigen_gap ? "eigen-gap"
                                                              : "fixed";
    return {{"grid_size", c.grid_size},
            {"grid_extent_deg", c.grid_extent_deg},
            {"range_gate_m", {c.gate_min_m, c.gate_max_m}},
            {"order_mode", mode},
            {"order", c.fixed_order},
            {"epsilon", c.epsilon},
            {"spatial", c.smoothing.spatial},
            {"temporal", c.smoothing.temporal},
            {"jts", c.smoothing.jts},
            {"reduction", c.reduction == Reduction::max_power ? "max" : "depth"},
            {"frames", c.max_frames},
            {"k0", c.background.k0},
            {"per_pair_alpha", c.background.per_pair_alpha}};
}

struct LoadedFrames
{
    std::vector<fs::path> files;
    std::vector<CirFrame> frames;
    std::optional<ArrayGeometry> geometry;
};

LoadedFrames load_frames(const fs::path &dir)
{
    LoadedFrames out;
    out.files = list_containers(dir);
    if (out.files.empty())
        throw DataError("no .mmid frames in " + dir.string());
    for (const auto &f : out.files)
    {
        const Tensor t = load_tensor(f);
        CirFrame frame;
        try
        {
            frame = frame_from_tensor(t);
        }
        catch (const DataError &e)
        {
            throw DataError(f.string() + ": " + e.what());
        }
        if (!out.frames.empty() && !frame.same_shape(out.frames.front()))
            throw DataError(f.string() + ": dimensions " + std::to_string(frame.tx) + "x" +
                            std::to_string(frame.rx) + "x" + std::to_string(frame.taps) + " differ from " +
                            out.files.front().string());
        if (!out.geometry)
            out.geometry = geometry_from_meta(t.meta);
        out.frames.push_back(std::move(frame));
    }
    return out;
}

} // namespace

std::vector<fs::path> list_containers(const fs::path &dir)
{
    if (!fs::is_directory(dir))
        throw DataError("not a directory: " + dir.string());
    std::vector<fs::path> out;
    for (const auto &entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".mmid")
            out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

SimulateResult cmd_simulate(const SimulateOptions &opt)
{
    if (opt.frames < 1)
        throw std::invalid_argument("--frames must be at least 1");
    const SceneDescription desc = load_scene(opt.scene_file);
    const ArrayGeometry geom = opt.geometry_file ? load_geometry(*opt.geometry_file) : ArrayGeometry::device_default();

    Scene scene = desc.materialize(opt.seed);
    if (opt.empty_room)
        scene = desc.scene.empty_room();

    ensure_dir(opt.out_dir);
    RunManifest manifest;
    manifest.command = "simulate";
    manifest.seed = opt.seed;
    manifest.config = {{"frames", opt.frames},
                       {"taps", opt.taps},
                       {"empty_room", opt.empty_room},
                       {"kernel", opt.kernel == TapKernel::nearest ? "nearest" : "sinc"},
                       {"frame_interval", opt.frame_interval},
                       {"scatterers", scene.targets.size() + scene.clutter.size()},
                       {"geometry", format_geometry(geom)}};
    manifest.add_input(opt.out_dir, opt.scene_file);
    if (opt.geometry_file)
        manifest.add_input(opt.out_dir, *opt.geometry_file);

    SimulateResult result;
    for (int i = 0; i < opt.frames; ++i)
    {
        SynthesisOptions so;
        so.kernel = opt.kernel;
        so.timestamp = i * opt.frame_interval;
        const CirFrame frame = synthesize_cir(scene, geom, opt.taps, mix_seed(opt.seed, static_cast<std::uint64_t>(i)), so);
        const fs::path path = opt.out_dir / numbered("frame_", i, 4, ".mmid");
        save_tensor(path, to_tensor(frame, geom));
        manifest.add_output(opt.out_dir, path);
        result.frames.push_back(path);
    }
    result.manifest = opt.out_dir / "manifest.json";
    save_manifest(result.manifest, manifest);
    return result;
}

SpectrumResult cmd_spectrum(const SpectrumOptions &opt)
{
    MusicConfig cfg = opt.config_file ? load_music_config(*opt.config_file) : MusicConfig{};
    if (opt.grid_extent_deg)
        cfg.grid_extent_deg = *opt.grid_extent_deg;
    if (opt.range_gate_m)
    {
        cfg.gate_min_m = opt.range_gate_m->first;
        cfg.gate_max_m = opt.range_gate_m->second;
    }
    if (opt.order_mode)
        cfg.order_mode = *opt.order_mode;
    if (opt.jts)
        cfg.smoothing.jts = *opt.jts;
    if (opt.reduction)
        cfg.reduction = *opt.reduction;
    cfg.validate();

    const LoadedFrames frames = load_frames(opt.frames_dir);
    const LoadedFrames empties = load_frames(opt.empty_dir);
    if (!frames.frames.front().same_shape(empties.frames.front()))
        throw DataError(empties.files.front().string() + ": empty-room frame dimensions differ from " +
                        frames.files.front().string());
    const ArrayGeometry &geom = *frames.geometry;

    const EmptyCirSet empty(empties.frames);
    const SpectrumTensor tensor = build_spectrum_tensor(frames.frames, empty, geom, cfg);

    const fs::path root = opt.out_path.has_parent_path() ? opt.out_path.parent_path() : fs::path(".");
    ensure_dir(root);
    SpectrumResult result;
    result.tensor = opt.out_path;
    Tensor t = to_tensor(tensor);
    t.meta["config"] = music_json(cfg);
    save_tensor(opt.out_path, t);

    RunManifest manifest;
    manifest.command = "spectrum";
    manifest.config = music_json(cfg);
    for (const auto &f : frames.files)
        manifest.add_input(root, f);
    for (const auto &f : empties.files)
        manifest.add_input(root, f);
    manifest.add_output(root, opt.out_path);

    if (opt.previews)
    {
        const fs::path dir = root / (opt.out_path.stem().string() + "_preview");
        ensure_dir(dir);
        for (const auto &img : tensor.images)
        {
            const fs::path p = dir / numbered("tx_", img.tx_index, 2, ".pgm");
            write_pgm(p, img.values);
            manifest.add_output(root, p);
            result.previews.push_back(p);
        }
    }
    result.manifest = root / (opt.out_path.filename().string() + ".manifest.json");
    save_manifest(result.manifest, manifest);
    return result;
}

std::string MetricsReport::format() const
{
    char buf[128];
    std::snprintf(buf, sizeof(buf), "sd_percent=%.6f\nssim=%.9f\n", sd_percent, ssim);
    return buf;
}

MetricsReport cmd_metrics(const fs::path &img_a, const fs::path &img_b, double threshold)
{
    const Image a = image_from_tensor(load_tensor(img_a));
    const Image b = image_from_tensor(load_tensor(img_b));
    if (!a.same_shape(b))
        throw DataError("image shapes differ: " + img_a.string() + " vs " + img_b.string());
    MetricsReport r;
    r.sd_percent = silhouette_difference(to_mask(a, threshold), to_mask(b, threshold));
    r.ssim = ssim(a, b);
    return r;
}

DatasetResult cmd_dataset(const DatasetOptions &opt)
{
    if (opt.count < 1)
        throw std::invalid_argument("--count must be at least 1");
    if (opt.frames < 1 || opt.empty_frames < 1)
        throw std::invalid_argument("frame counts must be at least 1");
    const auto scene_files = [&] {
        if (!fs::is_directory(opt.scenes_dir))
            throw DataError("not a directory: " + opt.scenes_dir.string());
        std::vector<fs::path> v;
        for (const auto &e : fs::directory_iterator(opt.scenes_dir))
            if (e.is_regular_file() && e.path().extension() == ".scene")
                v.push_back(e.path());
        std::sort(v.begin(), v.end());
        return v;
    }();
    if (scene_files.empty())
        throw DataError("no .scene templates in " + opt.scenes_dir.string());

    std::vector<SceneDescription> templates;
    for (const auto &f : scene_files)
    {
        templates.push_back(load_scene(f));
        if (!templates.back().phantom || templates.back().phantom->ellipsoids.empty())
            throw DataError(f.string() + ": dataset scene templates need a phantom");
    }
    const ArrayGeometry geom = opt.geometry_file ? load_geometry(*opt.geometry_file) : ArrayGeometry::device_default();
    const PinholeCamera cam;

    ensure_dir(opt.out_dir);
    RunManifest manifest;
    manifest.command = "dataset";
    manifest.seed = opt.seed;
    manifest.config = {{"count", opt.count},         {"frames", opt.frames},
                       {"empty_frames", opt.empty_frames}, {"taps", opt.taps},
                       {"distance_jitter", opt.distance_jitter}, {"flip", opt.flip},
                       {"shift", opt.shift},         {"rotate_deg", opt.rotate_deg},
                       {"music", music_json(opt.music)}};
    for (const auto &f : scene_files)
        manifest.add_input(opt.out_dir, f);

    DatasetResult result;
    result.label_counts.assign(templates.size(), 0);
    const int n_classes = static_cast<int>(templates.size());

    for (int i = 0; i < opt.count; ++i)
    {
        const std::uint64_t sample_seed = mix_seed(opt.seed, static_cast<std::uint64_t>(i));
        DatasetSample s;
        s.id = i;
        s.label = i % n_classes;
        s.scene = scene_files[static_cast<std::size_t>(s.label)].filename().string();

        SceneDescription desc = templates[static_cast<std::size_t>(s.label)];
        std::mt19937_64 rng(sample_seed);
        std::uniform_real_distribution<double> jitter(-opt.distance_jitter, opt.distance_jitter);
        desc.phantom.value().distance += jitter(rng);

        const Scene scene = desc.materialize(sample_seed);
        const Scene empty_scene = desc.scene.empty_room();
        std::vector<CirFrame> frames, empties;
        for (int f = 0; f < opt.frames; ++f)
            frames.push_back(synthesize_cir(scene, geom, opt.taps, mix_seed(sample_seed, 1 + f)));
        for (int f = 0; f < opt.empty_frames; ++f)
            empties.push_back(synthesize_cir(empty_scene, geom, opt.taps, mix_seed(sample_seed, 10000 + f)));
        SpectrumTensor spec = build_spectrum_tensor(frames, EmptyCirSet(std::move(empties)), geom, opt.music);
        DepthImage depth = render_ground_truth(*desc.phantom, geom, cam);

        // Augmentation draws come from their own stream, always in the same
        // order, so enabling one transform does not perturb the others.
        std::mt19937_64 aug(mix_seed(sample_seed, 0xA06));
        std::uniform_int_distribution<int> shift_draw(-opt.shift, opt.shift);
        std::uniform_real_distribution<double> angle_draw(-opt.rotate_deg, opt.rotate_deg);
        const bool coin = std::uniform_int_distribution<int>(0, 1)(aug) == 1;
        const int dr = shift_draw(aug);
        const int dc = shift_draw(aug);
        const double angle = opt.rotate_deg > 0.0 ? angle_draw(aug) : 0.0;

        s.flipped = opt.flip && coin;
        s.shift_row = opt.shift > 0 ? dr : 0;
        s.shift_col = opt.shift > 0 ? dc : 0;
        s.rotation_deg = angle;
        const int ratio_r = depth.rows / spec.grid.rows();
        const int ratio_c = depth.cols / spec.grid.cols();
        auto transform = [&](const Image &img, int scale_r, int scale_c) {
            Image out = img;
            if (s.flipped)
                out = flip_horizontal(out);
            if (s.shift_row != 0 || s.shift_col != 0)
                out = shift(out, s.shift_row * scale_r, s.shift_col * scale_c);
            if (s.rotation_deg != 0.0)
                out = rotate(out, s.rotation_deg * kPi / 180.0);
            return out;
        };
        for (auto &img : spec.images)
            img.values = transform(img.values, 1, 1);
        depth = transform(depth, std::max(ratio_r, 1), std::max(ratio_c, 1));

        s.spectrum = opt.out_dir / numbered("sample_", i, 5, "_spectrum.mmid");
        s.depth = opt.out_dir / numbered("sample_", i, 5, "_depth.mmid");
        Tensor st = to_tensor(spec);
        st.meta["sample_id"] = i;
        st.meta["label"] = s.label;
        save_tensor(s.spectrum, st);
        Tensor dt = to_tensor(depth);
        dt.meta["sample_id"] = i;
        dt.meta["label"] = s.label;
        dt.meta["kind"] = "depth";
        save_tensor(s.depth, dt);
        manifest.add_output(opt.out_dir, s.spectrum);
        manifest.add_output(opt.out_dir, s.depth);

        ++result.label_counts[static_cast<std::size_t>(s.label)];
        result.samples.push_back(s);
    }

    result.index = opt.out_dir / "index.csv";
    {
        std::ofstream os(result.index);
        if (!os)
            throw DataError("cannot write " + result.index.string());
        os << "sample_id,label,scene,spectrum,depth,flip,shift_row,shift_col,rotation_deg\n";
        for (const auto &s : result.samples)
            os << s.id << ',' << s.label << ',' << s.scene << ',' << s.spectrum.filename().string() << ','
               << s.depth.filename().string() << ',' << (s.flipped ? 1 : 0) << ',' << s.shift_row << ','
               << s.shift_col << ',' << s.rotation_deg << '\n';
    }
    manifest.add_output(opt.out_dir, result.index);
    result.manifest = opt.out_dir / "manifest.json";
    save_manifest(result.manifest, manifest);
    return result;
}

} // namespace mmid
