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

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerical paths; each routine recomputes its
// answer from first principles, usually the slow obvious way.

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mmid/array_model.hpp"
#include "mmid/image.hpp"
#include "mmid/metrics.hpp"
#include "mmid/scene.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Anchors of every 4x4 (or r x c) window that avoids all missing cells.
std::vector<mmid::GridCell> complete_windows(int rows, int cols, const std::vector<mmid::GridCell> &missing,
                                             int win_rows = 4, int win_cols = 4);

// Steering entry straight from the planar phase formula, positions rebuilt
// from row/col and pitch without the geometry's position helpers.
Eigen::VectorXcd steering(double pitch, double wavelength, int win_rows, int win_cols,
                          double elevation, double azimuth);

// Round-trip delay tap, c and dtau taken at face value.
int delay_tap(const Eigen::Vector3d &p, const Eigen::Vector3d &tx, const Eigen::Vector3d &rx, double dtau);

// Range at which a broadside scatterer sits in the middle of `tap`.
double tap_center_range(int tap, double dtau);

// Minimiser of sum_k |h_k - a g_k|^2 over complex a by repeated grid refinement.
cplx grid_search_alpha(const std::vector<cplx> &h, const std::vector<cplx> &g, int k0);

// Cyclic Jacobi for Hermitian matrices; eigenvalues descending.
struct Eig
{
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};
Eig jacobi_eigen(const Eigen::MatrixXcd &a, double tol = 1e-14, int max_sweeps = 100);

Eigen::MatrixXcd random_psd(std::mt19937_64 &rng, int n, int rank);
Eigen::VectorXcd random_cvec(std::mt19937_64 &rng, int n);

// Constant images c and c + d: only the luminance term survives.
double ssim_constant(double c, double d, double L, double k1 = 0.01, double k2 = 0.03);

// Direct 2-D Gaussian-window SSIM, no separability.
double ssim_direct(const mmid::Image &x, const mmid::Image &y, int window = 11, double sigma = 1.5, double k1 = 0.01,
                   double k2 = 0.03);

double xor_percent(const mmid::Mask &a, const mmid::Mask &b);

// One point scatterer at `range` along a direction.
mmid::Scene point_scene(double elevation, double azimuth, double range, cplx refl = {1.0, 0.0},
                        double noise_power = 0.0);

// Grid cell distance (Chebyshev) between two (row, col) positions.
int cell_distance(std::pair<int, int> a, std::pair<int, int> b);

// Index of the largest value in an image.
std::pair<int, int> argmax(const mmid::Image &img);

} // namespace oracle
