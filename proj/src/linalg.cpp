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

#include "mmid/linalg.hpp"

#include <stdexcept>

namespace mmid {

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd &m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("eigendecomposition needs a square matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigendecomposition did not converge");
    // Eigen returns ascending order.
    HermitianEigen out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

Eigen::MatrixXcd reconstruct(const HermitianEigen &eig)
{
    return eig.vectors * eig.values.cast<std::complex<double>>().asDiagonal() * eig.vectors.adjoint();
}

} // namespace mmid
