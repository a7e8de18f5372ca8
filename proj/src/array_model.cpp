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

#include "mmid/array_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mmid/text_config.hpp"

namespace mmid {

ArrayGeometry::ArrayGeometry(int rows, int cols, double pitch, std::vector<GridCell> missing, double carrier_freq)
    : rows_(rows), cols_(cols), pitch_(pitch), carrier_(carrier_freq), missing_(std::move(missing))
{
    if (rows_ <= 0 || cols_ <= 0)
        throw std::invalid_argument("array grid must have positive rows and cols");
    if (!(pitch_ > 0.0) || !std::isfinite(pitch_))
        throw std::invalid_argument("array pitch must be positive");
    if (!(carrier_ > 0.0) || !std::isfinite(carrier_))
        throw std::invalid_argument("carrier frequency must be positive");

    std::sort(missing_.begin(), missing_.end());
    missing_.erase(std::unique(missing_.begin(), missing_.end()), missing_.end());

    index_of_cell_.assign(static_cast<std::size_t>(rows_ * cols_), 0);
    for (const auto &m : missing_)
    {
        if (m.row < 0 || m.row >= rows_ || m.col < 0 || m.col >= cols_)
            throw std::invalid_argument("missing cell (" + std::to_string(m.row) + "," + std::to_string(m.col) +
                                        ") outside the grid");
        index_of_cell_[static_cast<std::size_t>(m.row * cols_ + m.col)] = -1;
    }
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
        {
            auto &slot = index_of_cell_[static_cast<std::size_t>(r * cols_ + c)];
            if (slot == -1)
                continue;
            slot = static_cast<int>(active_cells_.size());
            active_cells_.push_back({r, c});
        }
}

ArrayGeometry ArrayGeometry::device_default()
{
    return ArrayGeometry(6, 6, 0.003, {{0, 0}, {0, 5}, {5, 0}, {5, 5}}, kDefaultCarrier);
}

ArrayGeometry ArrayGeometry::full_grid()
{
    return ArrayGeometry(6, 6, 0.003, {}, kDefaultCarrier);
}

bool ArrayGeometry::is_missing(GridCell cell) const
{
    return active_index(cell) < 0;
}

int ArrayGeometry::active_index(GridCell cell) const
{
    if (cell.row < 0 || cell.row >= rows_ || cell.col < 0 || cell.col >= cols_)
        return -1;
    return index_of_cell_[static_cast<std::size_t>(cell.row * cols_ + cell.col)];
}

Eigen::Vector3d ArrayGeometry::cell_position(GridCell cell) const
{
    const double y = (cell.col - 0.5 * (cols_ - 1)) * pitch_;
    const double z = (0.5 * (rows_ - 1) - cell.row) * pitch_;
    return {0.0, y, z};
}

Eigen::Vector3d Direction::unit() const
{
    const double ct = std::cos(elevation);
    return {ct * std::cos(azimuth), ct * std::sin(azimuth), std::sin(elevation)};
}

Direction Direction::from_vector(const Eigen::Vector3d &v)
{
    const Eigen::Vector3d u = v.normalized();
    return {std::asin(std::clamp(u.z(), -1.0, 1.0)), std::atan2(u.y(), u.x())};
}

bool SubarraySpec::complete() const
{
    return !element_indices.empty() &&
           std::none_of(element_indices.begin(), element_indices.end(), [](int i) { return i < 0; });
}

SubarraySpec make_subarray(const ArrayGeometry &geom, GridCell anchor, int size_rows, int size_cols)
{
    if (size_rows <= 0 || size_cols <= 0 || anchor.row < 0 || anchor.col < 0 ||
        anchor.row + size_rows > geom.rows() || anchor.col + size_cols > geom.cols())
        throw std::invalid_argument("subarray window outside the grid");
    SubarraySpec sub{anchor, size_rows, size_cols, {}};
    sub.element_indices.reserve(static_cast<std::size_t>(size_rows * size_cols));
    for (int r = 0; r < size_rows; ++r)
        for (int c = 0; c < size_cols; ++c)
            sub.element_indices.push_back(geom.active_index({anchor.row + r, anchor.col + c}));
    return sub;
}

Eigen::VectorXcd steering_vector(const ArrayGeometry &geom, const SubarraySpec &sub, Direction dir)
{
    if (!sub.complete())
        throw std::invalid_argument("missing element in subarray");
    constexpr double half_pi = kPi / 2.0;
    if (!(std::abs(dir.elevation) <= half_pi) || !(std::abs(dir.azimuth) <= half_pi))
        throw std::invalid_argument("direction outside [-pi/2, pi/2]");

    const double k = geom.wavenumber();
    const double uy = std::cos(dir.elevation) * std::sin(dir.azimuth);
    const double uz = std::sin(dir.elevation);
    const Eigen::Vector3d origin = geom.cell_position(sub.anchor);

    Eigen::VectorXcd a(sub.size_rows * sub.size_cols);
    int i = 0;
    for (int r = 0; r < sub.size_rows; ++r)
        for (int c = 0; c < sub.size_cols; ++c, ++i)
        {
            const Eigen::Vector3d d = geom.cell_position({sub.anchor.row + r, sub.anchor.col + c}) - origin;
            a(i) = std::polar(1.0, k * (d.y() * uy + d.z() * uz));
        }
    return a;
}

std::vector<SubarraySpec> enumerate_subarrays(const ArrayGeometry &geom, int size_rows, int size_cols)
{
    std::vector<SubarraySpec> out;
    for (int r = 0; r + size_rows <= geom.rows(); ++r)
        for (int c = 0; c + size_cols <= geom.cols(); ++c)
        {
            auto sub = make_subarray(geom, {r, c}, size_rows, size_cols);
            if (sub.complete())
                out.push_back(std::move(sub));
        }
    return out;
}

ArrayGeometry parse_geometry(std::istream &in, const std::string &source_name)
{
    const ConfigDocument doc = parse_config(in, source_name);
    int rows = 6, cols = 6;
    double pitch = 0.003, carrier = kDefaultCarrier;
    std::vector<GridCell> missing;
    for (const auto &e : doc.entries)
    {
        if (!e.section.empty())
            doc.fail(e.line, "unexpected section [" + e.section + "] in geometry config");
        if (e.key == "rows")
            rows = static_cast<int>(parse_int(doc, e));
        else if (e.key == "cols")
            cols = static_cast<int>(parse_int(doc, e));
        else if (e.key == "pitch")
            pitch = parse_double(doc, e);
        else if (e.key == "carrier_freq")
            carrier = parse_double(doc, e);
        else if (e.key == "missing")
        {
            for (const auto &tok : split_ws(e.value))
            {
                GridCell cell;
                char comma = 0;
                std::istringstream is(tok);
                if (!(is >> cell.row >> comma >> cell.col) || comma != ',' || !is.eof())
                    doc.fail(e.line, "missing cell must be 'r,c', got '" + tok + "'");
                missing.push_back(cell);
            }
        }
        else
            doc.fail(e.line, "unknown geometry key '" + e.key + "'");
    }
    try
    {
        return ArrayGeometry(rows, cols, pitch, std::move(missing), carrier);
    }
    catch (const std::invalid_argument &ex)
    {
        throw DataError(source_name + ": " + ex.what());
    }
}

ArrayGeometry load_geometry(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open geometry file " + path.string());
    return parse_geometry(in, path.string());
}

std::string format_geometry(const ArrayGeometry &geom)
{
    std::ostringstream os;
    os.precision(17);
    os << "rows = " << geom.rows() << "\ncols = " << geom.cols() << "\npitch = " << geom.pitch()
       << "\ncarrier_freq = " << geom.carrier_freq() << "\nmissing =";
    for (const auto &m : geom.missing())
        os << ' ' << m.row << ',' << m.col;
    os << '\n';
    return os.str();
}

} // namespace mmid
