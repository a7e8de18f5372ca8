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

#include "mmid/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mmid/kernels.hpp"
#include "mmid/linalg.hpp"

namespace mmid {

AngleGrid AngleGrid::uniform(int n, double extent_rad)
{
    if (n < 1)
        throw std::invalid_argument("angle grid needs at least one sample");
    AngleGrid g;
    g.theta.resize(static_cast<std::size_t>(n));
    g.phi.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
    {
        const double t = n == 1 ? 0.0 : -extent_rad + 2.0 * extent_rad * i / (n - 1);
        g.phi[static_cast<std::size_t>(i)] = t;
        g.theta[static_cast<std::size_t>(n - 1 - i)] = t;
    }
    return g;
}

namespace {

int nearest_index(const std::vector<double> &axis, double v)
{
    int best = 0;
    for (int i = 1; i < static_cast<int>(axis.size()); ++i)
        if (std::abs(axis[static_cast<std::size_t>(i)] - v) < std::abs(axis[static_cast<std::size_t>(best)] - v))
            best = i;
    return best;
}

} // namespace

int AngleGrid::nearest_row(double theta_value) const
{
    return nearest_index(theta, theta_value);
}

int AngleGrid::nearest_col(double phi_value) const
{
    return nearest_index(phi, phi_value);
}

RangeGate RangeGate::from_meters(double min_range, double max_range, double tap_spacing)
{
    const double per_tap = tap_to_range(1.0, tap_spacing);
    return {static_cast<int>(std::lround(min_range / per_tap)), static_cast<int>(std::lround(max_range / per_tap))};
}

AngleGrid MusicConfig::grid() const
{
    return AngleGrid::uniform(grid_size, grid_extent_deg * kPi / 180.0);
}

RangeGate MusicConfig::gate(double tap_spacing) const
{
    return RangeGate::from_meters(gate_min_m, gate_max_m, tap_spacing);
}

void MusicConfig::validate() const
{
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("energy threshold epsilon must lie in (0, 1)");
    if (grid_size < 2)
        throw std::invalid_argument("grid size must be at least 2");
    if (!(grid_extent_deg > 0.0 && grid_extent_deg <= 90.0))
        throw std::invalid_argument("grid extent must lie in (0, 90] degrees");
    if (!(gate_min_m >= 0.0 && gate_max_m >= gate_min_m))
        throw std::invalid_argument("range gate must satisfy 0 <= min <= max");
    if (max_frames < 1)
        throw std::invalid_argument("at least one frame must be pooled");
    if (fixed_order < 0)
        throw std::invalid_argument("source order must be non-negative");
}

Image SpectrumTensor::mean_image() const
{
    if (images.empty())
        return {};
    Image out(images.front().values.rows, images.front().values.cols, 0.0);
    for (const auto &img : images)
        for (std::size_t i = 0; i < out.size(); ++i)
            out.values[i] += img.values.values[i];
    for (auto &v : out.values)
        v /= static_cast<double>(images.size());
    return out;
}

std::vector<Eigen::VectorXcd> subarray_snapshots(const CirFrame &frame, int tx, int tap,
                                                 std::span<const SubarraySpec> subs)
{
    if (tx < 0 || tx >= frame.tx)
        throw std::out_of_range("Tx index " + std::to_string(tx) + " out of range");
    if (tap < 0 || tap >= frame.taps)
        throw std::out_of_range("tap index " + std::to_string(tap) + " out of range");
    std::vector<Eigen::VectorXcd> out;
    out.reserve(subs.size());
    for (const auto &sub : subs)
    {
        if (!sub.complete())
            throw std::invalid_argument("missing element in subarray");
        Eigen::VectorXcd h(static_cast<Eigen::Index>(sub.element_indices.size()));
        for (std::size_t i = 0; i < sub.element_indices.size(); ++i)
        {
            const int rx = sub.element_indices[i];
            if (rx >= frame.rx)
                throw std::out_of_range("subarray element beyond the frame's Rx dimension");
            h(static_cast<Eigen::Index>(i)) = frame.at(tx, rx, tap);
        }
        out.push_back(std::move(h));
    }
    return out;
}

CovarianceMatrix covariance(std::span<const Eigen::VectorXcd> snapshots)
{
    if (snapshots.empty())
        throw std::invalid_argument("covariance needs at least one snapshot");
    const auto n = snapshots.front().size();
    CovarianceMatrix cov{Eigen::MatrixXcd::Zero(n, n), snapshots.size()};
    for (const auto &h : snapshots)
    {
        if (h.size() != n)
            throw std::invalid_argument("snapshots differ in length");
        cov.R.noalias() += h * h.adjoint();
    }
    cov.R /= static_cast<double>(snapshots.size());
    return cov;
}

int select_source_order(const Eigen::VectorXd &ev, const MusicConfig &cfg)
{
    const int n = static_cast<int>(ev.size());
    switch (cfg.order_mode)
    {
    case OrderMode::fixed:
        if (cfg.fixed_order >= n)
            throw std::invalid_argument("source order " + std::to_string(cfg.fixed_order) +
                                        " leaves no noise subspace (must be < " + std::to_string(n) + ")");
        return cfg.fixed_order;
    case OrderMode::eigen_gap:
    {
        int best = 1;
        for (int m = 1; m < n; ++m)
            if (ev(m - 1) - ev(m) > ev(best - 1) - ev(best))
                best = m;
        return best;
    }
    case OrderMode::energy:
    {
        const double total = ev.cwiseMax(0.0).sum();
        if (!(total > 0.0))
            return 1;
        double acc = 0.0;
        for (int m = 1; m < n; ++m)
        {
            acc += std::max(ev(m - 1), 0.0);
            if (acc >= (1.0 - cfg.epsilon) * total)
                return m;
        }
        return n - 1;
    }
    }
    return 1;
}

NoiseSubspace noise_subspace(const CovarianceMatrix &cov, const MusicConfig &cfg)
{
    const auto eig = hermitian_eigen(cov.R);
    const int n = static_cast<int>(cov.R.rows());
    const int order = select_source_order(eig.values, cfg);
    return {eig.vectors.rightCols(n - order), order, eig.values};
}

SpectrumImage music_spectrum(const Eigen::MatrixXcd &noise_basis, const ArrayGeometry &geom,
                             const SubarraySpec &sub_ref, const AngleGrid &grid)
{
    if (!sub_ref.complete())
        throw std::invalid_argument("missing element in subarray");
    if (noise_basis.rows() != sub_ref.size_rows * sub_ref.size_cols)
        throw std::invalid_argument("noise basis does not match the subarray size");
    const kernels::LagPhasorTable table(geom, sub_ref.size_rows, sub_ref.size_cols, grid);
    const std::vector<kernels::ProjectorLags> taps{
        kernels::fold_projector(noise_basis * noise_basis.adjoint(), table)};
    const auto peaks = kernels::evaluate_pseudospectrum(table, taps);

    SpectrumImage img;
    img.values = Image(grid.rows(), grid.cols());
    img.values.values = peaks.value;
    img.theta_grid = grid.theta;
    img.phi_grid = grid.phi;
    img.clamped = peaks.clamped;
    return img;
}

namespace {

void normalise(Image &img)
{
    const double peak = *std::max_element(img.values.begin(), img.values.end());
    if (peak > 0.0 && std::isfinite(peak))
        for (auto &v : img.values)
            v /= peak;
}

} // namespace

SpectrumTensor spectrum_from_clean_frames(std::span<const CirFrame> clean, const ArrayGeometry &geom,
                                          const MusicConfig &cfg)
{
    cfg.validate();
    if (clean.empty())
        throw DataError("spectrum needs at least one frame");
    const CirFrame &first = clean.front();
    for (std::size_t i = 0; i < clean.size(); ++i)
    {
        if (!clean[i].same_shape(first))
            throw DataError("frame " + std::to_string(i) + " has mismatched dimensions");
        if (clean[i].rx != geom.active_count())
            throw DataError("frame " + std::to_string(i) + " has " + std::to_string(clean[i].rx) +
                            " Rx elements, geometry has " + std::to_string(geom.active_count()));
    }

    auto subs = enumerate_subarrays(geom);
    if (cfg.order_mode == OrderMode::fixed && cfg.fixed_order >= 16)
        throw std::invalid_argument("source order must be below 16");
    if (subs.empty())
        throw DataError("array mask leaves no complete 4x4 subarray");
    if (!cfg.smoothing.spatial)
        subs.resize(1);
    const std::size_t n_frames = cfg.smoothing.temporal ? std::min<std::size_t>(clean.size(), cfg.max_frames) : 1;

    const RangeGate gate = cfg.gate(first.tap_spacing);
    if (gate.first_tap < 0 || gate.last_tap >= first.taps)
        throw DataError("range gate taps [" + std::to_string(gate.first_tap) + ", " + std::to_string(gate.last_tap) +
                        "] exceed the frame's " + std::to_string(first.taps) + " taps");

    const AngleGrid grid = cfg.grid();
    const kernels::LagPhasorTable table(geom, subs.front().size_rows, subs.front().size_cols, grid);
    const int n_taps = gate.size();

    // Per-tap projector lags for one Tx, or pooled over all Tx when tx < 0.
    auto fold_taps = [&](int tx) {
        std::vector<kernels::ProjectorLags> out(static_cast<std::size_t>(n_taps));
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < n_taps; ++t)
        {
            std::vector<Eigen::VectorXcd> snaps;
            const int tap = gate.first_tap + t;
            for (std::size_t f = 0; f < n_frames; ++f)
            {
                const int tx_lo = tx < 0 ? 0 : tx;
                const int tx_hi = tx < 0 ? first.tx : tx + 1;
                for (int m = tx_lo; m < tx_hi; ++m)
                {
                    auto s = subarray_snapshots(clean[f], m, tap, subs);
                    snaps.insert(snaps.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
                }
            }
            const auto ns = noise_subspace(covariance(snaps), cfg);
            out[static_cast<std::size_t>(t)] = kernels::fold_projector(ns.projector(), table);
        }
        return out;
    };

    auto make_image = [&](const kernels::PseudospectrumPeaks &peaks, int tx) {
        SpectrumImage img;
        img.values = Image(grid.rows(), grid.cols());
        if (cfg.reduction == Reduction::max_power)
            img.values.values = peaks.value;
        else
            for (std::size_t p = 0; p < peaks.tap.size(); ++p)
                img.values.values[p] = tap_to_range(gate.first_tap + peaks.tap[p], first.tap_spacing);
        normalise(img.values);
        img.theta_grid = grid.theta;
        img.phi_grid = grid.phi;
        img.tx_index = tx;
        img.clamped = peaks.clamped;
        return img;
    };

    SpectrumTensor tensor;
    tensor.grid = grid;
    tensor.reduction = cfg.reduction;
    tensor.images.reserve(static_cast<std::size_t>(first.tx));
    if (cfg.smoothing.jts)
    {
        const auto lags = fold_taps(-1);
        const SpectrumImage shared = make_image(kernels::evaluate_pseudospectrum(table, lags), 0);
        for (int m = 0; m < first.tx; ++m)
        {
            tensor.images.push_back(shared);
            tensor.images.back().tx_index = m;
        }
    }
    else
    {
        for (int m = 0; m < first.tx; ++m)
        {
            const auto lags = fold_taps(m);
            tensor.images.push_back(make_image(kernels::evaluate_pseudospectrum(table, lags), m));
        }
    }
    return tensor;
}

SpectrumTensor build_spectrum_tensor(std::span<const CirFrame> frames, const EmptyCirSet &empty,
                                     const ArrayGeometry &geom, const MusicConfig &cfg)
{
    cfg.validate();
    if (frames.empty())
        throw DataError("spectrum needs at least one frame");
    std::vector<CirFrame> clean;
    clean.reserve(frames.size());
    for (const auto &f : frames)
        clean.push_back(remove_background(f, empty, cfg.background));
    return spectrum_from_clean_frames(clean, geom, cfg);
}

std::vector<std::pair<int, int>> local_maxima(const Image &img, std::size_t limit)
{
    std::vector<std::pair<double, std::pair<int, int>>> found;
    for (int r = 0; r < img.rows; ++r)
        for (int c = 0; c < img.cols; ++c)
        {
            const double v = img(r, c);
            bool is_max = true;
            bool strict = false;
            for (int dr = -1; dr <= 1 && is_max; ++dr)
                for (int dc = -1; dc <= 1; ++dc)
                {
                    if ((dr == 0 && dc == 0) || r + dr < 0 || r + dr >= img.rows || c + dc < 0 || c + dc >= img.cols)
                        continue;
                    const double w = img(r + dr, c + dc);
                    if (w > v)
                    {
                        is_max = false;
                        break;
                    }
                    if (w < v)
                        strict = true;
                }
            if (is_max && strict)
                found.push_back({v, {r, c}});
        }
    std::stable_sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < found.size() && i < limit; ++i)
        out.push_back(found[i].second);
    return out;
}

} // namespace mmid
