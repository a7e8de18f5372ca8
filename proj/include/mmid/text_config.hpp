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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mmid {

/// One `key = value` line of a plain-text config, optionally inside a
/// `[section]` block. Comments start with '#'.
struct ConfigEntry
{
    std::string section;  // empty for top-level keys
    int section_index = -1;  // ordinal of the enclosing block, -1 at top level
    std::string key;
    std::string value;
    int line = 0;
};

struct ConfigDocument
{
    std::string source;
    std::vector<ConfigEntry> entries;
    /// Section headers in order of appearance, with their line numbers.
    std::vector<std::pair<std::string, int>> sections;

    [[noreturn]] void fail(int line, const std::string &message) const;
};

ConfigDocument parse_config(std::istream &in, const std::string &source_name);
ConfigDocument load_config(const std::filesystem::path &path);

// Value helpers. Each throws DataError tagged with source:line on bad input.
double parse_double(const ConfigDocument &doc, const ConfigEntry &e);
long parse_int(const ConfigDocument &doc, const ConfigEntry &e);
bool parse_bool(const ConfigDocument &doc, const ConfigEntry &e);
std::vector<double> parse_doubles(const ConfigDocument &doc, const ConfigEntry &e, std::size_t expected = 0);

std::vector<std::string> split_ws(const std::string &s);
std::string trim(const std::string &s);

} // namespace mmid
