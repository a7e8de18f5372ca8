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

#include "mmid/manifest.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

#include "mmid/common.hpp"

namespace mmid {

std::string sha256_file(const std::filesystem::path &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw DataError("cannot open " + path.string());

    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 initialisation failed");
    std::array<char, 1 << 16> buf{};
    while (is)
    {
        is.read(buf.data(), buf.size());
        if (is.gcount() > 0)
            EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(is.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);

    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

nlohmann::json RunManifest::to_json() const
{
    auto entries = [](const std::vector<ManifestEntry> &list) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &e : list)
            arr.push_back({{"path", e.path}, {"sha256", e.sha256}});
        return arr;
    };
    return {{"tool_version", tool_version}, {"command", command},          {"seed", seed},
            {"config", config},             {"inputs", entries(inputs)}, {"outputs", entries(outputs)}};
}

RunManifest RunManifest::from_json(const nlohmann::json &j)
{
    RunManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.config = j.at("config");
    for (const auto &e : j.at("inputs"))
        m.inputs.push_back({e.at("path").get<std::string>(), e.at("sha256").get<std::string>()});
    for (const auto &e : j.at("outputs"))
        m.outputs.push_back({e.at("path").get<std::string>(), e.at("sha256").get<std::string>()});
    return m;
}

void RunManifest::add_input(const std::filesystem::path &root, const std::filesystem::path &path)
{
    inputs.push_back({std::filesystem::relative(path, root).generic_string(), sha256_file(path)});
}

void RunManifest::add_output(const std::filesystem::path &root, const std::filesystem::path &path)
{
    outputs.push_back({std::filesystem::relative(path, root).generic_string(), sha256_file(path)});
}

void save_manifest(const std::filesystem::path &path, const RunManifest &m)
{
    std::ofstream os(path);
    if (!os)
        throw DataError("cannot write " + path.string());
    os << m.to_json().dump(2) << '\n';
}

RunManifest load_manifest(const std::filesystem::path &path)
{
    std::ifstream is(path);
    if (!is)
        throw DataError("cannot open " + path.string());
    try
    {
        return RunManifest::from_json(nlohmann::json::parse(is));
    }
    catch (const nlohmann::json::exception &e)
    {
        throw DataError(path.string() + ": malformed manifest: " + e.what());
    }
}

std::vector<std::string> verify_manifest(const std::filesystem::path &manifest_path)
{
    const RunManifest m = load_manifest(manifest_path);
    const auto root = manifest_path.parent_path();
    std::vector<std::string> problems;
    for (const auto &out : m.outputs)
    {
        const auto p = root / out.path;
        if (!std::filesystem::exists(p))
        {
            problems.push_back("missing: " + out.path);
            continue;
        }
        if (sha256_file(p) != out.sha256)
            problems.push_back("modified: " + out.path);
    }
    return problems;
}

} // namespace mmid
