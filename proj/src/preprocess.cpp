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

#include "mmid/preprocess.hpp"

#include <stdexcept>
#include <string>

namespace mmid {

EmptyCirSet::EmptyCirSet(std::vector<CirFrame> frames) : frames_(std::move(frames))
{
    if (frames_.empty())
        throw DataError("empty-room set needs at least one frame");
    const CirFrame &first = frames_.front();
    mean_ = CirFrame(first.tx, first.rx, first.taps, first.tap_spacing);
    for (std::size_t s = 0; s < frames_.size(); ++s)
    {
        if (!frames_[s].same_shape(first))
            throw DataError("empty-room frame " + std::to_string(s) + " has mismatched dimensions");
        for (std::size_t i = 0; i < mean_.data.size(); ++i)
            mean_.data[i] += frames_[s].data[i];
    }
    const double inv = 1.0 / static_cast<double>(frames_.size());
    for (auto &v : mean_.data)
        v *= inv;
}

cplx estimate_alpha(std::span<const cplx> h, std::span<const cplx> h_mean, int k0)
{
    if (k0 < 1 || h.size() < static_cast<std::size_t>(k0) || h_mean.size() < static_cast<std::size_t>(k0))
        throw std::invalid_argument("tap vectors shorter than the alpha window");
    cplx num{};
    double den = 0.0;
    for (int k = 0; k < k0; ++k)
    {
        num += std::conj(h_mean[k]) * h[k];
        den += std::norm(h_mean[k]);
    }
    if (!(den > 0.0))
        throw DataError("degenerate empty reference");
    return num / den;
}

CirFrame remove_background(const CirFrame &frame, const EmptyCirSet &empty, const BackgroundConfig &cfg)
{
    const CirFrame &ref = empty.mean();
    if (!frame.same_shape(ref))
        throw DataError("frame dimensions " + std::to_string(frame.tx) + "x" + std::to_string(frame.rx) + "x" +
                        std::to_string(frame.taps) + " do not match the empty-room reference " +
                        std::to_string(ref.tx) + "x" + std::to_string(ref.rx) + "x" + std::to_string(ref.taps));
    if (cfg.k0 < 1 || cfg.k0 > frame.taps)
        throw std::invalid_argument("K0 must lie in [1, taps]");

    CirFrame out = frame;
    const int pairs = frame.tx * frame.rx;

    if (cfg.per_pair_alpha)
    {
        std::vector<char> degenerate(static_cast<std::size_t>(pairs), 0);
#pragma omp parallel for schedule(static)
        for (int p = 0; p < pairs; ++p)
        {
            const int m = p / frame.rx, n = p % frame.rx;
            const auto e = ref.pair(m, n);
            cplx alpha;
            try
            {
                alpha = estimate_alpha(frame.pair(m, n), e, cfg.k0);
            }
            catch (const DataError &)
            {
                degenerate[static_cast<std::size_t>(p)] = 1;
                continue;
            }
            auto o = out.pair(m, n);
            for (int k = 0; k < frame.taps; ++k)
                o[k] -= alpha * e[k];
        }
        for (int p = 0; p < pairs; ++p)
            if (degenerate[static_cast<std::size_t>(p)])
                throw DataError("degenerate empty reference for pair (" + std::to_string(p / frame.rx) + "," +
                                std::to_string(p % frame.rx) + ")");
        return out;
    }

    // Global alpha: least squares over the concatenated leading windows.
    std::vector<cplx> h, e;
    h.reserve(static_cast<std::size_t>(pairs * cfg.k0));
    e.reserve(h.capacity());
    for (int m = 0; m < frame.tx; ++m)
        for (int n = 0; n < frame.rx; ++n)
            for (int k = 0; k < cfg.k0; ++k)
            {
                h.push_back(frame.at(m, n, k));
                e.push_back(ref.at(m, n, k));
            }
    const cplx alpha = estimate_alpha(h, e, static_cast<int>(h.size()));
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] -= alpha * ref.data[i];
    return out;
}

double window_energy(const CirFrame &frame, int k0)
{
    double e = 0.0;
    for (int m = 0; m < frame.tx; ++m)
        for (int n = 0; n < frame.rx; ++n)
            for (int k = 0; k < k0 && k < frame.taps; ++k)
                e += std::norm(frame.at(m, n, k));
    return e;
}

} // namespace mmid
