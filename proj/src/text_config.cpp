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

#include "mmid/text_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mmid/common.hpp"

namespace mmid {

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string &s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;)
        out.push_back(tok);
    return out;
}

void ConfigDocument::fail(int line, const std::string &message) const
{
    throw DataError(source + ":" + std::to_string(line) + ": " + message);
}

ConfigDocument parse_config(std::istream &in, const std::string &source_name)
{
    ConfigDocument doc;
    doc.source = source_name;
    std::string section;
    int section_index = -1;
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no)
    {
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']' || line.size() < 3)
                doc.fail(line_no, "malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            ++section_index;
            doc.sections.emplace_back(section, line_no);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            doc.fail(line_no, "expected 'key = value', got '" + line + "'");
        ConfigEntry e;
        e.section = section;
        e.section_index = section.empty() ? -1 : section_index;
        e.key = trim(line.substr(0, eq));
        e.value = trim(line.substr(eq + 1));
        e.line = line_no;
        if (e.key.empty())
            doc.fail(line_no, "empty key");
        doc.entries.push_back(std::move(e));
    }
    return doc;
}

ConfigDocument load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open " + path.string());
    return parse_config(in, path.string());
}

namespace {

double to_double(const ConfigDocument &doc, int line, const std::string &tok)
{
    // std::from_chars for double is available in libstdc++ 11.
    double v = 0.0;
    const auto *first = tok.data();
    const auto *last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        doc.fail(line, "invalid number '" + tok + "'");
    return v;
}

} // namespace

double parse_double(const ConfigDocument &doc, const ConfigEntry &e)
{
    return to_double(doc, e.line, e.value);
}

long parse_int(const ConfigDocument &doc, const ConfigEntry &e)
{
    long v = 0;
    const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
    if (ec != std::errc{} || ptr != e.value.data() + e.value.size())
        doc.fail(e.line, "invalid integer '" + e.value + "' for key '" + e.key + "'");
    return v;
}

bool parse_bool(const ConfigDocument &doc, const ConfigEntry &e)
{
    const std::string &v = e.value;
    if (v == "on" || v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "off" || v == "false" || v == "0" || v == "no")
        return false;
    doc.fail(e.line, "invalid flag '" + v + "' for key '" + e.key + "' (use on/off)");
}

std::vector<double> parse_doubles(const ConfigDocument &doc, const ConfigEntry &e, std::size_t expected)
{
    std::vector<double> out;
    for (const auto &tok : split_ws(e.value))
        out.push_back(to_double(doc, e.line, tok));
    if (expected != 0 && out.size() != expected)
        doc.fail(e.line, "key '" + e.key + "' expects " + std::to_string(expected) + " numbers, got " +
                             std::to_string(out.size()));
    return out;
}

} // namespace mmid
