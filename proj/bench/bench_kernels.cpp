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

// Wall-clock comparison of the OpenMP kernels against their serial
// references: CIR synthesis over (Tx, Rx) pairs and pseudospectrum
// evaluation over the 128x128 grid.

#include <iomanip>
#include <iostream>
#include <random>

#include <omp.h>

#include "mmid/kernels.hpp"
#include "mmid/linalg.hpp"
#include "mmid/scene.hpp"
#include "mmid/spectrum.hpp"

namespace {

template <typename F>
double time_it(int reps, F &&f)
{
    f();  // warm-up
    const double t0 = omp_get_wtime();
    for (int i = 0; i < reps; ++i)
        f();
    return (omp_get_wtime() - t0) / reps;
}

} // namespace

int main(int argc, char **argv)
{
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::cout << "OpenMP threads: " << omp_get_max_threads() << '\n';

    const auto geom = mmid::ArrayGeometry::device_default();
    const auto phantom = mmid::HumanPhantom::standard(1.6);
    mmid::Scene scene;
    scene.targets = mmid::sample_phantom(phantom, 1);
    scene.noise_power = 1e-3;
    std::cout << "scatterers: " << scene.targets.size() << '\n';

    const double t_par = time_it(reps, [&] { (void)mmid::synthesize_cir(scene, geom, 96, 7); });
    const double t_ref = time_it(reps, [&] { (void)mmid::synthesize_cir_reference(scene, geom, 96, 7); });
    std::cout << std::fixed << std::setprecision(4) << "synthesize_cir      parallel " << t_par << " s  reference "
              << t_ref << " s  speedup " << t_ref / t_par << "x\n";

    // Pseudospectrum over 37 taps with random noise subspaces.
    const auto grid = mmid::AngleGrid::uniform(128, 60.0 * mmid::kPi / 180.0);
    const auto sub = mmid::enumerate_subarrays(geom).front();
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    std::vector<Eigen::MatrixXcd> bases;
    std::vector<mmid::kernels::ProjectorLags> folded;
    const mmid::kernels::LagPhasorTable table(geom, 4, 4, grid);
    for (int t = 0; t < 37; ++t)
    {
        Eigen::MatrixXcd a(16, 16);
        for (Eigen::Index i = 0; i < a.size(); ++i)
            a(i) = {g(rng), g(rng)};
        const auto eig = mmid::hermitian_eigen(a * a.adjoint());
        bases.push_back(eig.vectors.rightCols(12));
        folded.push_back(mmid::kernels::fold_projector(bases.back() * bases.back().adjoint(), table));
    }
    const double s_par = time_it(reps, [&] { (void)mmid::kernels::evaluate_pseudospectrum(table, folded); });
    const double s_ref =
        time_it(1, [&] { (void)mmid::kernels::reference::evaluate_pseudospectrum(geom, sub, grid, bases); });
    std::cout << "pseudospectrum x37  parallel " << s_par << " s  reference " << s_ref << " s  speedup "
              << s_ref / s_par << "x\n";
    return 0;
}
