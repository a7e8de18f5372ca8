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

#include "mmid/kernels.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <omp.h>

namespace mmid::kernels {

namespace detail {

std::vector<cplx> pair_noise(std::uint64_t seed, std::size_t pair, int taps, double power)
{
    std::vector<cplx> out(static_cast<std::size_t>(taps));
    if (power <= 0.0)
        return out;
    std::mt19937_64 rng(mix_seed(seed, pair));
    std::normal_distribution<double> gauss(0.0, std::sqrt(power / 2.0));
    for (auto &v : out)
    {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v = {re, im};
    }
    return out;
}

TapSpread spread_delay(double delay_taps, TapKernel kernel)
{
    const int centre = static_cast<int>(std::lround(delay_taps));
    if (kernel == TapKernel::nearest)
        return {centre, {1.0}};
    TapSpread s{centre - 3, {}};
    s.weights.reserve(7);
    for (int k = centre - 3; k <= centre + 3; ++k)
    {
        const double x = kPi * (k - delay_taps);
        s.weights.push_back(std::abs(x) < 1e-12 ? 1.0 : std::sin(x) / x);
    }
    return s;
}

} // namespace detail

namespace {

void check_job(const CirJob &job, std::span<cplx> cube)
{
    const std::size_t expected = job.tx_positions.size() * job.rx_positions.size() * static_cast<std::size_t>(job.taps);
    if (cube.size() != expected)
        throw std::invalid_argument("CIR cube size does not match the job");
}

} // namespace

void synthesize_cir(const CirJob &job, std::span<cplx> cube)
{
    check_job(job, cube);
    const int n_tx = static_cast<int>(job.tx_positions.size());
    const int n_rx = static_cast<int>(job.rx_positions.size());
    const int taps = job.taps;
    const double omega = 2.0 * kPi * job.carrier;
    const std::size_t n_scat = job.scatterers.size();

#pragma omp parallel for schedule(static)
    for (int pair = 0; pair < n_tx * n_rx; ++pair)
    {
        const int m = pair / n_rx;
        const int n = pair % n_rx;
        cplx *out = cube.data() + static_cast<std::size_t>(pair) * taps;
        const Eigen::Vector3d &pt = job.tx_positions[m];
        const Eigen::Vector3d &pr = job.rx_positions[n];

        for (std::size_t s = 0; s < n_scat; ++s)
        {
            const Scatterer &sc = job.scatterers[s];
            const double tau = ((sc.position - pt).norm() + (sc.position - pr).norm()) / kSpeedOfLight;
            const cplx contrib = sc.reflectivity * std::polar(1.0, -omega * tau);
            if (job.kernel == TapKernel::nearest)
            {
                const long k = std::lround(tau / job.tap_spacing);
                if (k >= 0 && k < taps)
                    out[k] += contrib;
                continue;
            }
            const auto spread = detail::spread_delay(tau / job.tap_spacing, job.kernel);
            for (std::size_t w = 0; w < spread.weights.size(); ++w)
            {
                const int k = spread.first + static_cast<int>(w);
                if (k >= 0 && k < taps)
                    out[k] += spread.weights[w] * contrib;
            }
        }
        for (std::size_t k = 0; k < job.leakage.size() && k < static_cast<std::size_t>(taps); ++k)
            out[k] += job.leakage[k];
        for (int k = 0; k < taps; ++k)
            out[k] *= job.gain;
        if (job.noise_power > 0.0)
        {
            const auto noise = detail::pair_noise(job.seed, static_cast<std::size_t>(pair), taps, job.noise_power);
            for (int k = 0; k < taps; ++k)
                out[k] += noise[static_cast<std::size_t>(k)];
        }
    }
}

LagPhasorTable::LagPhasorTable(const ArrayGeometry &geom, int sub_rows, int sub_cols, const AngleGrid &grid)
    : sub_rows_(sub_rows), sub_cols_(sub_cols), points_(grid.rows() * grid.cols())
{
    for (int dr = 0; dr < sub_rows; ++dr)
        for (int dc = -(sub_cols - 1); dc < sub_cols; ++dc)
            if (dr > 0 || dc > 0)
                lags_.push_back({dr, dc});

    const double k = geom.wavenumber();
    const double d = geom.pitch();
    const std::size_t n_lags = lags_.size();
    phasors_.resize(static_cast<std::size_t>(points_) * n_lags);
    const int n_phi = grid.cols();

#pragma omp parallel for schedule(static)
    for (int p = 0; p < points_; ++p)
    {
        const Direction dir = grid.at(p / n_phi, p % n_phi);
        const double uy = std::cos(dir.elevation) * std::sin(dir.azimuth);
        const double uz = std::sin(dir.elevation);
        cplx *row = phasors_.data() + static_cast<std::size_t>(p) * n_lags;
        for (std::size_t l = 0; l < n_lags; ++l)
        {
            // Row index grows downward, so z decreases with drow.
            const double dy = lags_[l].dcol * d;
            const double dz = -lags_[l].drow * d;
            row[l] = std::polar(1.0, k * (dy * uy + dz * uz));
        }
    }
}

ProjectorLags fold_projector(const Eigen::MatrixXcd &projector, const LagPhasorTable &table)
{
    const int rows = table.sub_rows();
    const int cols = table.sub_cols();
    const int n = rows * cols;
    if (projector.rows() != n || projector.cols() != n)
        throw std::invalid_argument("projector size does not match the subarray");

    // Lag (dr, dc) with dr in [0, rows), dc in [-(cols-1), cols), positive half only.
    auto lag_slot = [&](int dr, int dc) {
        return dr == 0 ? dc - 1 : (cols - 1) + (dr - 1) * (2 * cols - 1) + (dc + cols - 1);
    };

    ProjectorLags out;
    out.sums.assign(table.lags().size(), cplx{});
    out.trace = projector.diagonal().real().sum();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
        {
            const int dr = j / cols - i / cols;
            const int dc = j % cols - i % cols;
            out.sums[static_cast<std::size_t>(lag_slot(dr, dc))] += projector(i, j);
        }
    return out;
}

PseudospectrumPeaks evaluate_pseudospectrum(const LagPhasorTable &table, std::span<const ProjectorLags> taps)
{
    const int points = table.points();
    const std::size_t n_lags = static_cast<std::size_t>(table.lag_count());
    PseudospectrumPeaks out;
    out.value.assign(static_cast<std::size_t>(points), 0.0);
    out.tap.assign(static_cast<std::size_t>(points), -1);
    std::size_t clamped = 0;

#pragma omp parallel for schedule(static) reduction(+ : clamped)
    for (int p = 0; p < points; ++p)
    {
        const cplx *ph = table.row(p);
        double best = -1.0;
        int best_tap = -1;
        for (std::size_t t = 0; t < taps.size(); ++t)
        {
            const ProjectorLags &pl = taps[t];
            double acc = 0.0;
            for (std::size_t l = 0; l < n_lags; ++l)
                acc += ph[l].real() * pl.sums[l].real() - ph[l].imag() * pl.sums[l].imag();
            double den = pl.trace + 2.0 * acc;
            if (den < kDenominatorFloor)
            {
                den = kDenominatorFloor;
                ++clamped;
            }
            const double v = 1.0 / den;
            if (v > best)
            {
                best = v;
                best_tap = static_cast<int>(t);
            }
        }
        out.value[static_cast<std::size_t>(p)] = best < 0.0 ? 0.0 : best;
        out.tap[static_cast<std::size_t>(p)] = best_tap;
    }
    out.clamped = clamped;
    return out;
}

} // namespace mmid::kernels
