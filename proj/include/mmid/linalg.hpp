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

#include <Eigen/Dense>

namespace mmid {

/// Eigenpairs of a Hermitian matrix, eigenvalues in descending order.
struct HermitianEigen
{
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;  // column i pairs with values(i)
};

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd &m);

/// sum_i lambda_i v_i v_i^H
Eigen::MatrixXcd reconstruct(const HermitianEigen &eig);

} // namespace mmid
