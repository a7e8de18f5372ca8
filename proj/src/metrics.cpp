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

#include "mmid/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mmid {

std::size_t Mask::count() const
{
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), static_cast<unsigned char>(1)));
}

Mask to_mask(const Image &img, double threshold)
{
    if (!(threshold >= 0.0))
        throw std::invalid_argument("mask threshold must be non-negative");
    Mask m(img.rows, img.cols);
    for (std::size_t i = 0; i < img.size(); ++i)
        m.bits[i] = img.values[i] > threshold ? 1 : 0;
    return m;
}

double silhouette_difference(const Mask &a, const Mask &b)
{
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("silhouette masks differ in shape");
    if (a.size() == 0)
        return 0.0;
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        diff += (a.bits[i] != 0) != (b.bits[i] != 0);
    return 100.0 * static_cast<double>(diff) / static_cast<double>(a.size());
}

namespace {

std::vector<double> gaussian_window(int w, double sigma)
{
    std::vector<double> g(static_cast<std::size_t>(w));
    const double c = (w - 1) / 2.0;
    double sum = 0.0;
    for (int i = 0; i < w; ++i)
    {
        g[static_cast<std::size_t>(i)] = std::exp(-(i - c) * (i - c) / (2.0 * sigma * sigma));
        sum += g[static_cast<std::size_t>(i)];
    }
    for (auto &v : g)
        v /= sum;
    return g;
}

// Separable 'valid' filtering.
Image filter_valid(const Image &in, const std::vector<double> &g)
{
    const int w = static_cast<int>(g.size());
    const int out_r = in.rows - w + 1;
    const int out_c = in.cols - w + 1;
    Image tmp(in.rows, out_c);
    for (int r = 0; r < in.rows; ++r)
        for (int c = 0; c < out_c; ++c)
        {
            double acc = 0.0;
            for (int k = 0; k < w; ++k)
                acc += g[static_cast<std::size_t>(k)] * in(r, c + k);
            tmp(r, c) = acc;
        }
    Image out(out_r, out_c);
    for (int r = 0; r < out_r; ++r)
        for (int c = 0; c < out_c; ++c)
        {
            double acc = 0.0;
            for (int k = 0; k < w; ++k)
                acc += g[static_cast<std::size_t>(k)] * tmp(r + k, c);
            out(r, c) = acc;
        }
    return out;
}

Image product(const Image &a, const Image &b)
{
    Image out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.values[i] = a.values[i] * b.values[i];
    return out;
}

} // namespace

Image ssim_map(const Image &x, const Image &y, const SsimOptions &opt)
{
    if (!x.same_shape(y))
        throw std::invalid_argument("SSIM images differ in shape");
    if (opt.window < 1 || opt.window > std::min(x.rows, x.cols))
        throw std::invalid_argument("SSIM window larger than the image");
    if (!(opt.sigma > 0.0))
        throw std::invalid_argument("SSIM sigma must be positive");

    double range = 1.0;
    if (opt.dynamic_range)
        range = *opt.dynamic_range;
    else
    {
        const auto [xmin, xmax] = std::minmax_element(x.values.begin(), x.values.end());
        const auto [ymin, ymax] = std::minmax_element(y.values.begin(), y.values.end());
        const double span = std::max(*xmax, *ymax) - std::min(*xmin, *ymin);
        range = span > 0.0 ? span : 1.0;
    }
    if (!(range > 0.0))
        throw std::invalid_argument("SSIM dynamic range must be positive");

    const double c1 = (opt.k1 * range) * (opt.k1 * range);
    const double c2 = (opt.k2 * range) * (opt.k2 * range);
    const auto g = gaussian_window(opt.window, opt.sigma);

    const Image mx = filter_valid(x, g);
    const Image my = filter_valid(y, g);
    const Image sxx = filter_valid(product(x, x), g);
    const Image syy = filter_valid(product(y, y), g);
    const Image sxy = filter_valid(product(x, y), g);

    Image out(mx.rows, mx.cols);
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        const double ux = mx.values[i], uy = my.values[i];
        const double vx = sxx.values[i] - ux * ux;
        const double vy = syy.values[i] - uy * uy;
        const double cxy = sxy.values[i] - ux * uy;
        out.values[i] = ((2.0 * ux * uy + c1) * (2.0 * cxy + c2)) / ((ux * ux + uy * uy + c1) * (vx + vy + c2));
    }
    return out;
}

double ssim(const Image &x, const Image &y, const SsimOptions &opt)
{
    const Image m = ssim_map(x, y, opt);
    double sum = 0.0;
    for (double v : m.values)
        sum += v;
    return sum / static_cast<double>(m.size());
}

} // namespace mmid
