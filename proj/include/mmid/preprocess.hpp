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

#include <span>
#include <vector>

#include "mmid/scene.hpp"

namespace mmid {

/// Target-free frames and their cached average cube.
class EmptyCirSet
{
public:
    explicit EmptyCirSet(std::vector<CirFrame> frames);

    const std::vector<CirFrame> &frames() const { return frames_; }
    const CirFrame &mean() const { return mean_; }
    std::size_t size() const { return frames_.size(); }

private:
    std::vector<CirFrame> frames_;
    CirFrame mean_;
};

struct BackgroundConfig
{
    int k0 = 4;  // leading taps used to fit the scale
    bool per_pair_alpha = true;
};

/// Complex least-squares scale minimising sum_{k<k0} |h[k] - alpha h_mean[k]|^2.
cplx estimate_alpha(std::span<const cplx> h, std::span<const cplx> h_mean, int k0);

/// h - alpha * mean_empty per (tx, rx) pair, with one alpha per pair or one
/// global alpha fitted over every pair's leading window.
CirFrame remove_background(const CirFrame &frame, const EmptyCirSet &empty, const BackgroundConfig &cfg = {});

/// Energy of the first k0 taps summed over all pairs.
double window_energy(const CirFrame &frame, int k0);

} // namespace mmid
