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

#include <cmath>
#include <stdexcept>

#include "mmid/kernels.hpp"

namespace mmid::kernels::reference {

void synthesize_cir(const CirJob &job, std::span<cplx> cube)
{
    const std::size_t n_tx = job.tx_positions.size();
    const std::size_t n_rx = job.rx_positions.size();
    const std::size_t taps = static_cast<std::size_t>(job.taps);
    if (cube.size() != n_tx * n_rx * taps)
        throw std::invalid_argument("CIR cube size does not match the job");

    std::vector<cplx> signal(cube.size());
    for (const Scatterer &sc : job.scatterers)
        for (std::size_t m = 0; m < n_tx; ++m)
            for (std::size_t n = 0; n < n_rx; ++n)
            {
                const double d_tx = (sc.position - job.tx_positions[m]).norm();
                const double d_rx = (sc.position - job.rx_positions[n]).norm();
                const double tau = (d_tx + d_rx) / kSpeedOfLight;
                const double phase = -2.0 * kPi * job.carrier * tau;
                const cplx contrib = sc.reflectivity * cplx(std::cos(phase), std::sin(phase));
                const auto spread = detail::spread_delay(tau / job.tap_spacing, job.kernel);
                for (std::size_t w = 0; w < spread.weights.size(); ++w)
                {
                    const long k = spread.first + static_cast<long>(w);
                    if (k >= 0 && static_cast<std::size_t>(k) < taps)
                        signal[(m * n_rx + n) * taps + static_cast<std::size_t>(k)] += spread.weights[w] * contrib;
                }
            }

    for (std::size_t pair = 0; pair < n_tx * n_rx; ++pair)
    {
        const auto noise = detail::pair_noise(job.seed, pair, job.taps, job.noise_power);
        for (std::size_t k = 0; k < taps; ++k)
        {
            cplx v = signal[pair * taps + k];
            if (k < job.leakage.size())
                v += job.leakage[k];
            cube[pair * taps + k] = v * job.gain + noise[k];
        }
    }
}

PseudospectrumPeaks evaluate_pseudospectrum(const ArrayGeometry &geom, const SubarraySpec &sub,
                                            const AngleGrid &grid, std::span<const Eigen::MatrixXcd> noise_bases)
{
    PseudospectrumPeaks out;
    const std::size_t points = static_cast<std::size_t>(grid.rows()) * grid.cols();
    out.value.assign(points, 0.0);
    out.tap.assign(points, -1);
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c)
        {
            const Eigen::VectorXcd a = steering_vector(geom, sub, grid.at(r, c));
            const std::size_t p = static_cast<std::size_t>(r) * grid.cols() + c;
            double best = -1.0;
            for (std::size_t t = 0; t < noise_bases.size(); ++t)
            {
                double den = (noise_bases[t].adjoint() * a).squaredNorm();
                if (den < kDenominatorFloor)
                {
                    den = kDenominatorFloor;
                    ++out.clamped;
                }
                if (1.0 / den > best)
                {
                    best = 1.0 / den;
                    out.tap[p] = static_cast<int>(t);
                }
            }
            out.value[p] = best < 0.0 ? 0.0 : best;
        }
    return out;
}

} // namespace mmid::kernels::reference
