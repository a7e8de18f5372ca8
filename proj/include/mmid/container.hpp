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

// Tensor container, the on-disk contract shared with the learning components.
//
//   offset  size  field
//   0       4     magic "MMID"
//   4       2     version, u16 little-endian (currently 1)
//   6       4     header_len, u32 little-endian
//   10      n     header, UTF-8 JSON:
//                   {"dtype": "c64" | "f32", "shape": [...],
//                    "axis_names": [...], "meta": {...}}
//   10+n    ...   payload, little-endian, row-major; c64 as (re, im) f32 pairs

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmid/array_model.hpp"
#include "mmid/image.hpp"
#include "mmid/scene.hpp"
#include "mmid/spectrum.hpp"

namespace mmid {

inline constexpr std::uint16_t kContainerVersion = 1;

enum class DType
{
    c64,
    f32,
};

struct Tensor
{
    DType dtype = DType::f32;
    std::vector<std::size_t> shape;
    std::vector<std::string> axis_names;
    nlohmann::json meta = nlohmann::json::object();
    std::vector<float> real;                  // dtype f32
    std::vector<std::complex<float>> complex;  // dtype c64

    std::size_t element_count() const;
};

void write_tensor(std::ostream &os, const Tensor &t);
Tensor read_tensor(std::istream &is, const std::string &source_name = "<stream>");
void save_tensor(const std::filesystem::path &path, const Tensor &t);
Tensor load_tensor(const std::filesystem::path &path);

// Domain conversions. CIR frames: c64 [tx, rx, tap], geometry and tap spacing
// in meta. Spectrum tensors: f32 [theta, phi, tx]. Images: f32 [rows, cols].
Tensor to_tensor(const CirFrame &frame, const ArrayGeometry &geom);
CirFrame frame_from_tensor(const Tensor &t);
ArrayGeometry geometry_from_meta(const nlohmann::json &meta);

Tensor to_tensor(const SpectrumTensor &s);
Tensor to_tensor(const Image &img);
Image image_from_tensor(const Tensor &t);

} // namespace mmid
