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

#include <optional>

#include "mmid/image.hpp"

namespace mmid {

/// bit = value > threshold
Mask to_mask(const Image &img, double threshold = 0.0);

/// Percentage of pixels where the masks disagree (normalised Hamming distance x 100).
double silhouette_difference(const Mask &a, const Mask &b);

struct SsimOptions
{
    int window = 11;
    double sigma = 1.5;
    double k1 = 0.01;
    double k2 = 0.03;
    /// Dynamic range L. When unset: max - min over both images (1 if that is 0).
    std::optional<double> dynamic_range;
};

/// Mean structural similarity over all fully-contained Gaussian windows.
double ssim(const Image &x, const Image &y, const SsimOptions &opt = {});

/// Local SSIM map ('valid' region, (rows-w+1) x (cols-w+1)).
Image ssim_map(const Image &x, const Image &y, const SsimOptions &opt = {});

} // namespace mmid
