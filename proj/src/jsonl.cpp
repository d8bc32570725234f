// Copyright 2026 The fngen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fngen/jsonl.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fngen/types.hpp"

namespace fngen {

std::vector<JsonlRecord> parse_jsonl(const std::string& text,
                                     const std::string& source_name) {
  std::vector<JsonlRecord> records;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json value;
    try {
      value = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source_name + ":" + std::to_string(lineno) + ": " +
                       e.what());
    }
    if (!value.is_object()) {
      throw ParseError(source_name + ":" + std::to_string(lineno) +
                       ": expected a JSON object");
    }
    records.push_back(
        {std::move(value), source_name + ":" + std::to_string(lineno), lineno});
  }
  return records;
}

std::vector<JsonlRecord> read_jsonl(const std::filesystem::path& path) {
  return parse_jsonl(read_text_file(path), path.filename().string());
}

void require_fields(const JsonlRecord& record,
                    const std::vector<std::string>& required,
                    const std::vector<std::string>& allowed) {
  for (const auto& key : required) {
    if (!record.value.contains(key)) {
      throw ParseError(record.source + ": missing field \"" + key + "\"");
    }
  }
  for (const auto& item : record.value.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      throw ParseError(record.source + ": unknown field \"" + item.key() +
                       "\"");
    }
  }
}

std::string get_string(const JsonlRecord& record, const std::string& key) {
  const auto& v = record.value.at(key);
  if (!v.is_string()) {
    throw ParseError(record.source + ": field \"" + key +
                     "\" must be a string");
  }
  return v.get<std::string>();
}

long get_int(const JsonlRecord& record, const std::string& key) {
  const auto& v = record.value.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(record.source + ": field \"" + key +
                     "\" must be an integer");
  }
  return v.get<long>();
}

bool get_bool(const JsonlRecord& record, const std::string& key) {
  const auto& v = record.value.at(key);
  if (!v.is_boolean()) {
    throw ParseError(record.source + ": field \"" + key +
                     "\" must be a boolean");
  }
  return v.get<bool>();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write " + path.string());
  }
  out << content;
}

}  // namespace fngen
