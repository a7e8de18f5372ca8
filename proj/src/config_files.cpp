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

#include "mmid/config_files.hpp"

#include <fstream>
#include <sstream>

#include "mmid/text_config.hpp"

namespace mmid {

Scene SceneDescription::materialize(std::uint64_t seed) const
{
    Scene s = scene;
    if (phantom && !phantom->ellipsoids.empty())
    {
        const auto pts = sample_phantom(*phantom, seed);
        s.targets.insert(s.targets.end(), pts.begin(), pts.end());
    }
    return s;
}

namespace {

std::vector<cplx> parse_leakage(const ConfigDocument &doc, const ConfigEntry &e)
{
    std::vector<cplx> out;
    for (const auto &tok : split_ws(e.value))
    {
        std::istringstream is(tok);
        double re = 0.0, im = 0.0;
        char comma = 0;
        if (!(is >> re >> comma >> im) || comma != ',' || !is.eof())
            doc.fail(e.line, "leakage taps must be 're,im', got '" + tok + "'");
        out.emplace_back(re, im);
    }
    return out;
}

} // namespace

SceneDescription parse_scene(std::istream &in, const std::string &source_name)
{
    const ConfigDocument doc = parse_config(in, source_name);
    SceneDescription desc;

    // Blocks are collected by section ordinal so repeated [target] blocks stay separate.
    struct Block
    {
        std::string kind;
        int line = 0;
        std::optional<Eigen::Vector3d> position, center, semi_axes;
        cplx reflectivity{1.0, 0.0};
    };
    std::vector<Block> blocks(doc.sections.size());
    for (std::size_t i = 0; i < doc.sections.size(); ++i)
    {
        blocks[i].kind = doc.sections[i].first;
        blocks[i].line = doc.sections[i].second;
        const auto &k = blocks[i].kind;
        if (k != "target" && k != "clutter" && k != "phantom" && k != "ellipsoid")
            doc.fail(blocks[i].line, "unknown section [" + k + "]");
    }

    HumanPhantom phantom;
    phantom.ellipsoids.clear();
    bool have_phantom = false;
    double scale = 1.0;
    bool preset_human = false;

    auto vec3 = [&](const ConfigEntry &e) {
        const auto v = parse_doubles(doc, e, 3);
        return Eigen::Vector3d(v[0], v[1], v[2]);
    };

    for (const auto &e : doc.entries)
    {
        if (e.section.empty())
        {
            if (e.key == "noise_power")
                desc.scene.noise_power = parse_double(doc, e);
            else if (e.key == "leakage")
                desc.scene.leakage_profile = parse_leakage(doc, e);
            else
                doc.fail(e.line, "unknown scene key '" + e.key + "'");
            continue;
        }
        Block &b = blocks[static_cast<std::size_t>(e.section_index)];
        if (b.kind == "target" || b.kind == "clutter")
        {
            if (e.key == "position")
                b.position = vec3(e);
            else if (e.key == "reflectivity")
            {
                const auto v = parse_doubles(doc, e, 2);
                b.reflectivity = {v[0], v[1]};
            }
            else
                doc.fail(e.line, "unknown key '" + e.key + "' in [" + b.kind + "]");
        }
        else if (b.kind == "phantom")
        {
            have_phantom = true;
            if (e.key == "distance")
                phantom.distance = parse_double(doc, e);
            else if (e.key == "density")
                phantom.sample_density = parse_double(doc, e);
            else if (e.key == "scale")
                scale = parse_double(doc, e);
            else if (e.key == "offset")
            {
                const auto v = parse_doubles(doc, e, 2);
                phantom.lateral_offset = {0.0, v[0], v[1]};
            }
            else if (e.key == "preset")
            {
                if (e.value == "human")
                    preset_human = true;
                else if (e.value != "none")
                    doc.fail(e.line, "unknown phantom preset '" + e.value + "'");
            }
            else
                doc.fail(e.line, "unknown key '" + e.key + "' in [phantom]");
        }
        else
        {
            if (e.key == "center")
                b.center = vec3(e);
            else if (e.key == "semi_axes")
                b.semi_axes = vec3(e);
            else
                doc.fail(e.line, "unknown key '" + e.key + "' in [ellipsoid]");
        }
    }

    if (preset_human)
    {
        const auto body = HumanPhantom::standard(phantom.distance, scale);
        phantom.ellipsoids = body.ellipsoids;
    }
    for (const auto &b : blocks)
    {
        if (b.kind == "phantom")
            have_phantom = true;
        if (b.kind == "target" || b.kind == "clutter")
        {
            if (!b.position)
                doc.fail(b.line, "[" + b.kind + "] block needs a position");
            auto &list = b.kind == "target" ? desc.scene.targets : desc.scene.clutter;
            list.push_back({*b.position, b.reflectivity});
        }
        else if (b.kind == "ellipsoid")
        {
            if (!b.center || !b.semi_axes)
                doc.fail(b.line, "[ellipsoid] block needs center and semi_axes");
            if (!(b.semi_axes->minCoeff() > 0.0))
                doc.fail(b.line, "ellipsoid semi-axes must be positive");
            phantom.ellipsoids.push_back({*b.center, *b.semi_axes});
            have_phantom = true;
        }
    }
    if (have_phantom)
    {
        if (!(phantom.sample_density > 0.0))
            doc.fail(0, "phantom density must be positive");
        desc.phantom = phantom;
    }
    if (desc.scene.noise_power < 0.0)
        doc.fail(0, "noise_power must be non-negative");
    return desc;
}

SceneDescription load_scene(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open scene file " + path.string());
    return parse_scene(in, path.string());
}

OrderMode parse_order_mode(const std::string &s)
{
    if (s == "energy")
        return OrderMode::energy;
    if (s == "eigen-gap" || s == "eigen_gap" || s == "gap")
        return OrderMode::eigen_gap;
    if (s == "fixed")
        return OrderMode::fixed;
    throw std::invalid_argument("unknown order mode '" + s + "' (energy, eigen-gap, fixed)");
}

Reduction parse_reduction(const std::string &s)
{
    if (s == "max")
        return Reduction::max_power;
    if (s == "depth")
        return Reduction::depth_of_peak;
    throw std::invalid_argument("unknown reduction '" + s + "' (max, depth)");
}

MusicConfig parse_music_config(std::istream &in, const std::string &source_name, MusicConfig cfg)
{
    const ConfigDocument doc = parse_config(in, source_name);
    for (const auto &e : doc.entries)
    {
        if (!e.section.empty())
            doc.fail(e.line, "spectrum config takes no sections");
        try
        {
            if (e.key == "grid_size")
                cfg.grid_size = static_cast<int>(parse_int(doc, e));
            else if (e.key == "grid_extent")
                cfg.grid_extent_deg = parse_double(doc, e);
            else if (e.key == "range_gate")
            {
                const auto v = parse_doubles(doc, e, 2);
                cfg.gate_min_m = v[0];
                cfg.gate_max_m = v[1];
            }
            else if (e.key == "order_mode")
                cfg.order_mode = parse_order_mode(e.value);
            else if (e.key == "order")
                cfg.fixed_order = static_cast<int>(parse_int(doc, e));
            else if (e.key == "epsilon")
                cfg.epsilon = parse_double(doc, e);
            else if (e.key == "spatial")
                cfg.smoothing.spatial = parse_bool(doc, e);
            else if (e.key == "temporal")
                cfg.smoothing.temporal = parse_bool(doc, e);
            else if (e.key == "jts")
                cfg.smoothing.jts = parse_bool(doc, e);
            else if (e.key == "reduction")
                cfg.reduction = parse_reduction(e.value);
            else if (e.key == "frames")
                cfg.max_frames = static_cast<int>(parse_int(doc, e));
            else if (e.key == "k0")
                cfg.background.k0 = static_cast<int>(parse_int(doc, e));
            else if (e.key == "per_pair_alpha")
                cfg.background.per_pair_alpha = parse_bool(doc, e);
            else
                doc.fail(e.line, "unknown spectrum config key '" + e.key + "'");
        }
        catch (const std::invalid_argument &ex)
        {
            doc.fail(e.line, ex.what());
        }
    }
    try
    {
        cfg.validate();
    }
    catch (const std::invalid_argument &ex)
    {
        throw DataError(source_name + ": " + ex.what());
    }
    return cfg;
}

MusicConfig load_music_config(const std::filesystem::path &path, MusicConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open spectrum config " + path.string());
    return parse_music_config(in, path.string(), base);
}

} // namespace mmid
