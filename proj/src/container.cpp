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

#include "mmid/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace mmid {

namespace {

static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);

template <typename T>
void put_le(std::ostream &os, T v)
{
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i)
        buf[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char *>(buf), sizeof(T));
}

template <typename T>
T get_le(const unsigned char *p)
{
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return static_cast<T>(v);
}

void write_floats(std::ostream &os, const float *data, std::size_t count)
{
    if constexpr (std::endian::native == std::endian::little)
        os.write(reinterpret_cast<const char *>(data), static_cast<std::streamsize>(count * sizeof(float)));
    else
        for (std::size_t i = 0; i < count; ++i)
            put_le(os, std::bit_cast<std::uint32_t>(data[i]));
}

void read_floats(const unsigned char *bytes, float *out, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i)
        out[i] = std::bit_cast<float>(get_le<std::uint32_t>(bytes + 4 * i));
}

const char *dtype_name(DType d)
{
    return d == DType::c64 ? "c64" : "f32";
}

} // namespace

std::size_t Tensor::element_count() const
{
    std::size_t n = 1;
    for (auto s : shape)
        n *= s;
    return n;
}

void write_tensor(std::ostream &os, const Tensor &t)
{
    const std::size_t count = t.element_count();
    const std::size_t stored = t.dtype == DType::c64 ? t.complex.size() : t.real.size();
    if (stored != count)
        throw std::invalid_argument("tensor payload has " + std::to_string(stored) + " elements, shape implies " +
                                    std::to_string(count));
    if (!t.axis_names.empty() && t.axis_names.size() != t.shape.size())
        throw std::invalid_argument("axis_names length does not match shape rank");

    nlohmann::json header = {
        {"dtype", dtype_name(t.dtype)}, {"shape", t.shape}, {"axis_names", t.axis_names}, {"meta", t.meta}};
    const std::string text = header.dump();

    os.write("MMID", 4);
    put_le<std::uint16_t>(os, kContainerVersion);
    put_le<std::uint32_t>(os, static_cast<std::uint32_t>(text.size()));
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (t.dtype == DType::c64)
        write_floats(os, reinterpret_cast<const float *>(t.complex.data()), 2 * count);
    else
        write_floats(os, t.real.data(), count);
    if (!os)
        throw DataError("failed writing tensor container");
}

Tensor read_tensor(std::istream &is, const std::string &source_name)
{
    auto fail = [&](const std::string &msg) -> DataError { return DataError(source_name + ": " + msg); };

    unsigned char fixed[10];
    if (!is.read(reinterpret_cast<char *>(fixed), sizeof(fixed)))
        throw fail("truncated container preamble");
    if (std::memcmp(fixed, "MMID", 4) != 0)
        throw fail("bad magic (not an MMID container)");
    const auto version = get_le<std::uint16_t>(fixed + 4);
    if (version != kContainerVersion)
        throw fail("unsupported container version " + std::to_string(version));
    const auto header_len = get_le<std::uint32_t>(fixed + 6);

    std::string text(header_len, '\0');
    if (!is.read(text.data(), header_len))
        throw fail("truncated header");

    Tensor t;
    try
    {
        const auto header = nlohmann::json::parse(text);
        const std::string dtype = header.at("dtype").get<std::string>();
        if (dtype == "c64")
            t.dtype = DType::c64;
        else if (dtype == "f32")
            t.dtype = DType::f32;
        else
            throw fail("unknown dtype '" + dtype + "'");
        t.shape = header.at("shape").get<std::vector<std::size_t>>();
        if (header.contains("axis_names"))
            t.axis_names = header.at("axis_names").get<std::vector<std::string>>();
        if (header.contains("meta"))
            t.meta = header.at("meta");
    }
    catch (const nlohmann::json::exception &e)
    {
        throw fail(std::string("malformed header: ") + e.what());
    }

    const std::size_t count = t.element_count();
    const std::size_t floats = t.dtype == DType::c64 ? 2 * count : count;
    std::vector<unsigned char> payload(floats * 4);
    if (!is.read(reinterpret_cast<char *>(payload.data()), static_cast<std::streamsize>(payload.size())))
        throw fail("payload shorter than shape implies");
    if (is.peek() != std::char_traits<char>::eof())
        throw fail("trailing bytes after payload");

    if (t.dtype == DType::c64)
    {
        t.complex.resize(count);
        read_floats(payload.data(), reinterpret_cast<float *>(t.complex.data()), floats);
    }
    else
    {
        t.real.resize(count);
        read_floats(payload.data(), t.real.data(), floats);
    }
    return t;
}

void save_tensor(const std::filesystem::path &path, const Tensor &t)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw DataError("cannot write " + path.string());
    write_tensor(os, t);
}

Tensor load_tensor(const std::filesystem::path &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw DataError("cannot open " + path.string());
    return read_tensor(is, path.string());
}

Tensor to_tensor(const CirFrame &frame, const ArrayGeometry &geom)
{
    Tensor t;
    t.dtype = DType::c64;
    t.shape = {static_cast<std::size_t>(frame.tx), static_cast<std::size_t>(frame.rx),
               static_cast<std::size_t>(frame.taps)};
    t.axis_names = {"tx", "rx", "tap"};
    nlohmann::json missing = nlohmann::json::array();
    for (const auto &m : geom.missing())
        missing.push_back({m.row, m.col});
    t.meta = {{"kind", "cir_frame"},
              {"tap_spacing", frame.tap_spacing},
              {"timestamp", frame.timestamp},
              {"geometry",
               {{"rows", geom.rows()},
                {"cols", geom.cols()},
                {"pitch", geom.pitch()},
                {"carrier_freq", geom.carrier_freq()},
                {"missing", missing}}}};
    t.complex.reserve(frame.data.size());
    for (const auto &v : frame.data)
        t.complex.emplace_back(static_cast<float>(v.real()), static_cast<float>(v.imag()));
    return t;
}

CirFrame frame_from_tensor(const Tensor &t)
{
    if (t.dtype != DType::c64 || t.shape.size() != 3)
        throw DataError("CIR frame container must be c64 with shape [tx, rx, tap]");
    const double spacing = t.meta.value("tap_spacing", kDefaultTapSpacing);
    CirFrame f(static_cast<int>(t.shape[0]), static_cast<int>(t.shape[1]), static_cast<int>(t.shape[2]), spacing);
    f.timestamp = t.meta.value("timestamp", 0.0);
    for (std::size_t i = 0; i < f.data.size(); ++i)
        f.data[i] = {t.complex[i].real(), t.complex[i].imag()};
    return f;
}

ArrayGeometry geometry_from_meta(const nlohmann::json &meta)
{
    if (!meta.contains("geometry"))
        return ArrayGeometry::device_default();
    try
    {
        const auto &g = meta.at("geometry");
        std::vector<GridCell> missing;
        for (const auto &m : g.at("missing"))
            missing.push_back({m.at(0).get<int>(), m.at(1).get<int>()});
        return ArrayGeometry(g.at("rows").get<int>(), g.at("cols").get<int>(), g.at("pitch").get<double>(),
                             std::move(missing), g.at("carrier_freq").get<double>());
    }
    catch (const nlohmann::json::exception &e)
    {
        throw DataError(std::string("malformed geometry metadata: ") + e.what());
    }
    catch (const std::invalid_argument &e)
    {
        throw DataError(std::string("invalid geometry metadata: ") + e.what());
    }
}

Tensor to_tensor(const SpectrumTensor &s)
{
    Tensor t;
    t.dtype = DType::f32;
    const std::size_t rows = static_cast<std::size_t>(s.grid.rows());
    const std::size_t cols = static_cast<std::size_t>(s.grid.cols());
    const std::size_t n_tx = s.images.size();
    t.shape = {rows, cols, n_tx};
    t.axis_names = {"theta", "phi", "tx"};
    t.meta = {{"kind", "spectrum"},
              {"theta_grid", s.grid.theta},
              {"phi_grid", s.grid.phi},
              {"reduction", s.reduction == Reduction::max_power ? "max" : "depth"},
              {"normalization", "per-image max"}};
    t.real.resize(rows * cols * n_tx);
    for (std::size_t m = 0; m < n_tx; ++m)
        for (std::size_t p = 0; p < rows * cols; ++p)
            t.real[p * n_tx + m] = static_cast<float>(s.images[m].values.values[p]);
    return t;
}

Tensor to_tensor(const Image &img)
{
    Tensor t;
    t.dtype = DType::f32;
    t.shape = {static_cast<std::size_t>(img.rows), static_cast<std::size_t>(img.cols)};
    t.axis_names = {"row", "col"};
    t.meta = {{"kind", "image"}};
    t.real.reserve(img.size());
    for (double v : img.values)
        t.real.push_back(static_cast<float>(v));
    return t;
}

Image image_from_tensor(const Tensor &t)
{
    if (t.dtype != DType::f32 || t.shape.size() != 2)
        throw DataError("image container must be f32 with shape [rows, cols]");
    Image img(static_cast<int>(t.shape[0]), static_cast<int>(t.shape[1]));
    for (std::size_t i = 0; i < img.size(); ++i)
        img.values[i] = t.real[i];
    return img;
}

} // namespace mmid
