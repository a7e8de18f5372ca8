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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace mmid {

inline constexpr const char *kToolVersion = "mmid 1.0.0";

std::string sha256_file(const std::filesystem::path &path);

struct ManifestEntry
{
    std::string path;  // relative to the manifest's directory
    std::string sha256;
};

/// Provenance record written next to every command's outputs. It carries no
/// timestamps so identical runs produce identical manifests.
struct RunManifest
{
    std::string tool_version = kToolVersion;
    std::string command;
    std::uint64_t seed = 0;
    nlohmann::json config = nlohmann::json::object();
    std::vector<ManifestEntry> inputs;
    std::vector<ManifestEntry> outputs;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json &j);

    void add_input(const std::filesystem::path &root, const std::filesystem::path &path);
    void add_output(const std::filesystem::path &root, const std::filesystem::path &path);
};

void save_manifest(const std::filesystem::path &path, const RunManifest &m);
RunManifest load_manifest(const std::filesystem::path &path);

/// Re-hashes every output listed in the manifest; returns one message per
/// missing or modified file (empty when everything matches).
std::vector<std::string> verify_manifest(const std::filesystem::path &manifest_path);

} // namespace mmid
